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

#ifndef PCEST_LINALG_H
#define PCEST_LINALG_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace pcest {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdSlack = 1e-10;

/// Dense square complex matrix. Entries are always finite.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(std::size_t dim);
    explicit ComplexMatrix(Eigen::MatrixXcd entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix outer(const StateVector &ket, const StateVector &bra);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    const Eigen::MatrixXcd &eigen() const {
        return m_;
    }

    Complex trace() const {
        return m_.trace();
    }
    bool is_hermitian(double tol = kHermitianTolerance) const;
    /// Largest absolute entrywise difference.
    double max_abs_diff(const ComplexMatrix &other) const;

    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    ComplexMatrix operator+(const ComplexMatrix &rhs) const;
    ComplexMatrix operator*(Complex scale) const;
    StateVector operator*(const StateVector &v) const;

   private:
    Eigen::MatrixXcd m_;
};

/// A ComplexMatrix that has been checked to be a physical state:
/// Hermitian, unit trace and positive semidefinite within the fixed tolerances.
class DensityOperator {
   public:
    /// Throws std::invalid_argument if any invariant fails.
    explicit DensityOperator(ComplexMatrix matrix);

    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    std::size_t dim() const {
        return matrix_.dim();
    }
    /// <v|rho|v>, real part.
    double expectation(const StateVector &v) const;

   private:
    ComplexMatrix matrix_;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);

/// Transposes the indices of the second tensor factor of a
/// (subsystem_dim x subsystem_dim)-party operator.
ComplexMatrix partial_transpose(const ComplexMatrix &rho, std::size_t subsystem_dim);
ComplexMatrix partial_transpose(const DensityOperator &rho, std::size_t subsystem_dim);

/// Smallest eigenvalue of a Hermitian matrix. Throws on non-Hermitian input.
double min_eigenvalue(const ComplexMatrix &a);

// Single-qubit Pauli operators using the bit flip / phase flip naming:
// sigma1 = X, sigma2 = i(|1><0| - |0><1|) = Y, sigma3 = Z.
ComplexMatrix sigma1();
ComplexMatrix sigma2();
ComplexMatrix sigma3();

/// Weyl operator sum_k exp(2 pi i k n / d) |k+m><k| on a d-level system.
ComplexMatrix weyl(int d, int m, int n);

/// Non-negative remainder.
inline int mod(int a, int d) {
    int r = a % d;
    return r < 0 ? r + d : r;
}

}  // namespace pcest

#endif
