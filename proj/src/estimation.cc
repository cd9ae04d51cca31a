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

#include "pcest/estimation.h"

#include <algorithm>
#include <bit>
#include <string>

namespace pcest {

namespace {

// 2-bit Walsh-Hadamard transform on syndrome-indexed data. Self-inverse up to 1/4.
std::array<double, 4> walsh(const std::array<double, 4> &x) {
    std::array<double, 4> out{};
    for (int t = 0; t < 4; ++t) {
        for (int s = 0; s < 4; ++s) {
            out[t] += (std::popcount(static_cast<unsigned>(s & t)) & 1 ? -1.0 : 1.0) * x[s];
        }
    }
    return out;
}

void require_werner_identifiable(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    if (4.0 * fidelity - 1.0 == 0.0) {
        throw NonIdentifiable("F = 1/4 is the maximally mixed probe; channel parameters are not identifiable");
    }
}

}  // namespace

ParamEstimate ParamEstimate::clip() const {
    ParamEstimate out{p_est, true};
    for (double &x : out.p_est) {
        x = std::clamp(x, 0.0, 1.0);
    }
    return out;
}

void SeparableCounts::validate() const {
    if (shots_per_setting < 1) {
        throw std::invalid_argument("separable scheme needs at least one shot per setting");
    }
    for (auto c : plus_counts) {
        if (c < 0 || c > shots_per_setting) {
            throw std::invalid_argument("plus count outside [0, M]");
        }
    }
}

ParamEstimate estimate_werner(const OutcomeCounts &counts, double fidelity) {
    require_werner_identifiable(fidelity);
    if (counts.size() != 4) {
        throw std::invalid_argument("Werner estimator expects four Bell outcomes");
    }
    const double denom = 4.0 * fidelity - 1.0;
    ParamEstimate out;
    out.p_est.resize(3);
    for (std::size_t j = 0; j < 3; ++j) {
        out.p_est[j] = (3.0 * counts.frequency(j) + fidelity - 1.0) / denom;
    }
    return out;
}

ParamEstimate estimate_separable(const SeparableCounts &counts) {
    counts.validate();
    const double m = static_cast<double>(counts.shots_per_setting);
    std::array<double, 3> s{};
    for (std::size_t a = 0; a < 3; ++a) {
        double expectation = 2.0 * static_cast<double>(counts.plus_counts[a]) / m - 1.0;
        s[a] = (1.0 - expectation) / 2.0;
    }
    // s_a = p_b + p_c for {a, b, c} = {1, 2, 3}.
    return ParamEstimate{{(s[1] + s[2] - s[0]) / 2.0, (s[0] + s[2] - s[1]) / 2.0, (s[0] + s[1] - s[2]) / 2.0}};
}

std::array<double, 3> walsh_coefficients(const BellDiagonal &alpha) {
    const auto &a = alpha.alpha();
    return {1.0 - 2.0 * a[0] - 2.0 * a[1], 1.0 - 2.0 * a[0] - 2.0 * a[2], 1.0 - 2.0 * a[1] - 2.0 * a[2]};
}

void require_identifiable(const BellDiagonal &alpha) {
    static constexpr const char *kNames[] = {"1 - 2a1 - 2a2", "1 - 2a1 - 2a3", "1 - 2a2 - 2a3"};
    auto w = walsh_coefficients(alpha);
    for (std::size_t i = 0; i < 3; ++i) {
        if (w[i] == 0.0) {
            throw NonIdentifiable(std::string("Walsh coefficient ") + kNames[i] + " vanishes; channel not identifiable");
        }
    }
}

ParamEstimate estimate_belldiag(const OutcomeCounts &counts, const BellDiagonal &alpha) {
    require_identifiable(alpha);
    if (counts.size() != 4) {
        throw std::invalid_argument("Bell-diagonal estimator expects four Bell outcomes");
    }
    std::array<double, 4> freq{};
    for (std::size_t j = 0; j < 4; ++j) {
        freq[kOutcomeSyndrome[j]] = counts.frequency(j);
    }
    auto f_hat = walsh(freq);
    auto a_hat = walsh(alpha.by_syndrome());
    std::array<double, 4> p_hat{};
    for (int t = 0; t < 4; ++t) {
        p_hat[t] = f_hat[t] / a_hat[t];
    }
    auto p = walsh(p_hat);
    ParamEstimate out;
    out.p_est.resize(3);
    for (std::size_t i = 0; i < 3; ++i) {
        out.p_est[i] = p[kPauliSyndrome[i]] / 4.0;
    }
    return out;
}

std::array<std::array<double, 4>, 3> belldiag_inversion_matrix(const BellDiagonal &alpha) {
    require_identifiable(alpha);
    std::array<std::array<double, 4>, 3> b{};
    auto a_hat = walsh(alpha.by_syndrome());
    for (std::size_t j = 0; j < 4; ++j) {
        std::array<double, 4> unit{};
        unit[kOutcomeSyndrome[j]] = 1.0;
        auto f_hat = walsh(unit);
        for (int t = 0; t < 4; ++t) {
            f_hat[t] /= a_hat[t];
        }
        auto col = walsh(f_hat);
        for (std::size_t i = 0; i < 3; ++i) {
            b[i][j] = col[kPauliSyndrome[i]] / 4.0;
        }
    }
    return b;
}

DdimEstimator::DdimEstimator(int d, double lambda) : d_(d), lambda_(lambda) {
    IsotropicState state(d, lambda);
    if (lambda == 0.0) {
        throw NonIdentifiable("lambda = 0 is the maximally mixed probe; channel parameters are not identifiable");
    }
    outcome_of_error_ = reference_error_outcome_map(d);
}

ParamEstimate DdimEstimator::operator()(const OutcomeCounts &counts) const {
    if (counts.size() != outcome_of_error_.size()) {
        throw std::invalid_argument("d-level estimator expects d^2 outcomes");
    }
    const double base = (1.0 - lambda_) / (static_cast<double>(d_) * d_);
    ParamEstimate out;
    out.p_est.resize(outcome_of_error_.size() - 1);
    for (std::size_t e = 1; e < outcome_of_error_.size(); ++e) {
        out.p_est[e - 1] = (counts.frequency(static_cast<std::size_t>(outcome_of_error_[e])) - base) / lambda_;
    }
    return out;
}

ParamEstimate estimate_ddim(const OutcomeCounts &counts, int d, double lambda) {
    return DdimEstimator(d, lambda)(counts);
}

}  // namespace pcest
