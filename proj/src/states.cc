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

#include "pcest/states.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pcest {

namespace {

constexpr double kSumTolerance = 1e-12;

int find_proportional(const StateVector &v, const std::vector<StateVector> &basis) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (std::abs(std::abs(basis[k].dot(v)) - 1.0) < 1e-9) {
            return static_cast<int>(k);
        }
    }
    throw std::logic_error("vector is not proportional to any basis element");
}

}  // namespace

BellDiagonal::BellDiagonal(std::array<double, 4> alpha) : alpha_(alpha) {
    double sum = 0;
    for (double a : alpha_) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw std::invalid_argument("Bell-diagonal coefficients must be non-negative");
        }
        sum += a;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw std::invalid_argument("Bell-diagonal coefficients must sum to 1");
    }
}

BellDiagonal BellDiagonal::from_syndrome(std::array<double, 4> s) {
    return BellDiagonal({s[3], s[2], s[1], s[0]});
}

std::array<double, 4> BellDiagonal::by_syndrome() const {
    return {alpha_[3], alpha_[2], alpha_[1], alpha_[0]};
}

IsotropicState::IsotropicState(int d, double lambda) : d_(d), lambda_(lambda) {
    if (d < 2) {
        throw std::invalid_argument("isotropic state needs d >= 2");
    }
    double lower = -1.0 / (static_cast<double>(d) * d - 1.0);
    if (!(lambda >= lower && lambda <= 1.0)) {
        throw std::invalid_argument(
            "lambda " + std::to_string(lambda) + " outside the physical range [" + std::to_string(lower) + ", 1]");
    }
}

double IsotropicState::fidelity() const {
    return lambda_ + (1.0 - lambda_) / (static_cast<double>(d_) * d_);
}

DensityOperator IsotropicState::density() const {
    std::size_t dim = static_cast<std::size_t>(d_) * d_;
    StateVector ref = gen_bell_state(d_, 0, 0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) * ((1.0 - lambda_) / static_cast<double>(dim));
    m += lambda_ * ref * ref.adjoint();
    return DensityOperator(ComplexMatrix(std::move(m)));
}

StateVector bell_state(BellLabel label) {
    // Basis order |00>, |01>, |10>, |11>.
    const double r = std::numbers::sqrt2 / 2.0;
    const double sign = label.phase_flip ? -1.0 : 1.0;
    StateVector v = StateVector::Zero(4);
    if (label.bit_flip) {
        v(1) = r;
        v(2) = sign * r;
    } else {
        v(0) = r;
        v(3) = sign * r;
    }
    return v;
}

BellDiagonal werner(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("Werner fidelity must lie in [0, 1]");
    }
    double rest = (1.0 - fidelity) / 3.0;
    return BellDiagonal({fidelity, rest, rest, rest});
}

DensityOperator to_density(const BellDiagonal &state) {
    auto coeff = state.by_syndrome();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    for (int s = 0; s < 4; ++s) {
        StateVector v = bell_state(BellLabel::from_syndrome(s));
        m += coeff[s] * v * v.adjoint();
    }
    return DensityOperator(ComplexMatrix(std::move(m)));
}

bool is_nonseparable(const BellDiagonal &state) {
    return min_eigenvalue(partial_transpose(to_density(state), 2)) < -kPsdSlack;
}

double chsh_fidelity_threshold() {
    return (3.0 * std::numbers::sqrt2 + 2.0) / 8.0;
}

bool chsh_violated(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    return fidelity > chsh_fidelity_threshold();
}

StateVector gen_bell_state(int d, int m, int n) {
    if (d < 2 || m < 0 || m >= d || n < 0 || n >= d) {
        throw std::invalid_argument("gen_bell_state: index out of range");
    }
    StateVector v = StateVector::Zero(static_cast<Eigen::Index>(d) * d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        double phase = 2.0 * std::numbers::pi * static_cast<double>(j * n) / d;
        v(j * d + mod(j + m, d)) = std::polar(norm, phase);
    }
    return v;
}

IsotropicState isotropic(int d, double lambda) {
    return IsotropicState(d, lambda);
}

std::vector<int> reference_error_outcome_map(int d) {
    std::vector<StateVector> basis;
    basis.reserve(static_cast<std::size_t>(d) * d);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            basis.push_back(gen_bell_state(d, m, n));
        }
    }
    const StateVector &ref = basis[0];
    const ComplexMatrix id = ComplexMatrix::identity(static_cast<std::size_t>(d));
    std::vector<int> map(basis.size());
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            StateVector moved = kron(weyl(d, a, b), id) * ref;
            map[a * d + b] = find_proportional(moved, basis);
        }
    }
    return map;
}

std::array<BellLabel, 4> qubit_labels_of_gen_bell() {
    std::vector<StateVector> qubit;
    for (int s = 0; s < 4; ++s) {
        qubit.push_back(bell_state(BellLabel::from_syndrome(s)));
    }
    std::array<BellLabel, 4> out{};
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            out[m * 2 + n] = BellLabel::from_syndrome(find_proportional(gen_bell_state(2, m, n), qubit));
        }
    }
    return out;
}

}  // namespace pcest
