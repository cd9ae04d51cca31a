// Copyright 2026 The pcest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcest/linalg.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pcest {

namespace {

void require_finite(const Eigen::MatrixXcd &m) {
    if (!m.allFinite()) {
        throw std::invalid_argument("matrix has non-finite entries");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : m_(Eigen::MatrixXcd::Zero(dim, dim)) {
    if (dim == 0) {
        throw std::invalid_argument("matrix dimension must be at least 1");
    }
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw std::invalid_argument("matrix must be square and non-empty");
    }
    require_finite(m_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    return ComplexMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

ComplexMatrix ComplexMatrix::outer(const StateVector &ket, const StateVector &bra) {
    return ComplexMatrix(Eigen::MatrixXcd(ket * bra.adjoint()));
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (rhs.dim() != dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    return ComplexMatrix(Eigen::MatrixXcd(m_ * rhs.m_));
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &rhs) const {
    if (rhs.dim() != dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    return ComplexMatrix(Eigen::MatrixXcd(m_ + rhs.m_));
}

ComplexMatrix ComplexMatrix::operator*(Complex scale) const {
    return ComplexMatrix(Eigen::MatrixXcd(m_ * scale));
}

StateVector ComplexMatrix::operator*(const StateVector &v) const {
    if (static_cast<std::size_t>(v.size()) != dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    return m_ * v;
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_hermitian(kHermitianTolerance)) {
        throw std::invalid_argument("density operator is not Hermitian");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr.real() - 1.0) > kTraceTolerance || std::abs(tr.imag()) > kTraceTolerance) {
        throw std::invalid_argument("density operator trace is not 1");
    }
    double lo = min_eigenvalue(matrix_);
    if (lo < -kPsdSlack) {
        throw std::invalid_argument(
            "density operator is not positive semidefinite (min eigenvalue " + std::to_string(lo) + ")");
    }
}

double DensityOperator::expectation(const StateVector &v) const {
    return v.dot(matrix_.eigen() * v).real();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const auto &x = a.eigen();
    const auto &y = b.eigen();
    Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return ComplexMatrix(std::move(out));
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    return ComplexMatrix(Eigen::MatrixXcd(a.eigen().adjoint()));
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, std::size_t subsystem_dim) {
    const auto d = static_cast<Eigen::Index>(subsystem_dim);
    if (subsystem_dim == 0 || rho.dim() != subsystem_dim * subsystem_dim) {
        throw std::invalid_argument(
            "partial_transpose: matrix dimension " + std::to_string(rho.dim()) + " is not " +
            std::to_string(subsystem_dim) + " squared");
    }
    const auto &m = rho.eigen();
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (Eigen::Index i1 = 0; i1 < d; ++i1) {
        for (Eigen::Index i2 = 0; i2 < d; ++i2) {
            for (Eigen::Index j1 = 0; j1 < d; ++j1) {
                for (Eigen::Index j2 = 0; j2 < d; ++j2) {
                    out(i1 * d + i2, j1 * d + j2) = m(i1 * d + j2, j1 * d + i2);
                }
            }
        }
    }
    return ComplexMatrix(std::move(out));
}

ComplexMatrix partial_transpose(const DensityOperator &rho, std::size_t subsystem_dim) {
    return partial_transpose(rho.matrix(), subsystem_dim);
}

double min_eigenvalue(const ComplexMatrix &a) {
    if (!a.is_hermitian(kHermitianTolerance)) {
        throw std::invalid_argument("min_eigenvalue: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.eigen(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("min_eigenvalue: eigensolver did not converge");
    }
    return solver.eigenvalues().minCoeff();
}

ComplexMatrix sigma1() {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 1, 0;
    return ComplexMatrix(std::move(m));
}

ComplexMatrix sigma2() {
    const Complex i{0, 1};
    Eigen::MatrixXcd m(2, 2);
    m << 0, -i, i, 0;
    return ComplexMatrix(std::move(m));
}

ComplexMatrix sigma3() {
    Eigen::MatrixXcd m(2, 2);
    m << 1, 0, 0, -1;
    return ComplexMatrix(std::move(m));
}

ComplexMatrix weyl(int d, int m, int n) {
    if (d < 2 || m < 0 || m >= d || n < 0 || n >= d) {
        throw std::invalid_argument("weyl: index out of range");
    }
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        double phase = 2.0 * std::numbers::pi * static_cast<double>(k * n) / d;
        u(mod(k + m, d), k) = std::polar(1.0, phase);
    }
    return ComplexMatrix(std::move(u));
}

}  // namespace pcest
