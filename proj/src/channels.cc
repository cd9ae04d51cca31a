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

#include "pcest/channels.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pcest {

namespace {

constexpr double kProbSlack = 1e-12;

ComplexMatrix pauli(int i) {
    switch (i) {
        case 0:
            return sigma1();
        case 1:
            return sigma2();
        case 2:
            return sigma3();
        default:
            return ComplexMatrix::identity(2);
    }
}

}  // namespace

PauliParams::PauliParams(std::array<double, 3> p) : p_(p) {
    for (double x : p_) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw std::invalid_argument("Pauli error probabilities must be non-negative");
        }
    }
    if (p_[0] + p_[1] + p_[2] > 1.0 + kProbSlack) {
        throw std::invalid_argument("Pauli error probabilities must sum to at most 1");
    }
}

std::array<double, 4> PauliParams::by_syndrome() const {
    std::array<double, 4> out{};
    out[kPauliSyndrome[0]] = p_[0];
    out[kPauliSyndrome[1]] = p_[1];
    out[kPauliSyndrome[2]] = p_[2];
    out[kPauliSyndrome[3]] = p4();
    return out;
}

PauliParams PauliParams::from_syndrome(const std::array<double, 4> &dist) {
    return PauliParams({dist[kPauliSyndrome[0]], dist[kPauliSyndrome[1]], dist[kPauliSyndrome[2]]});
}

GenPauliParams::GenPauliParams(int d, std::vector<double> probs) : d_(d), probs_(std::move(probs)) {
    if (d < 2) {
        throw std::invalid_argument("generalized Pauli channel needs d >= 2");
    }
    if (probs_.size() != static_cast<std::size_t>(d) * d) {
        throw std::invalid_argument("expected d^2 = " + std::to_string(d * d) + " probabilities");
    }
    double sum = 0;
    for (double x : probs_) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw std::invalid_argument("error probabilities must be non-negative");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbSlack) {
        throw std::invalid_argument("error probabilities must sum to 1");
    }
}

GenPauliParams GenPauliParams::depolarizing(int d) {
    std::size_t k = static_cast<std::size_t>(d) * d;
    return GenPauliParams(d, std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

GenPauliParams GenPauliParams::from_qubit(const PauliParams &p) {
    std::array<double, 4> by_index{p[0], p[1], p[2], p.p4()};
    std::vector<double> probs(4);
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            ComplexMatrix u = weyl(2, m, n);
            int match = -1;
            for (int i = 0; i < 4; ++i) {
                if (std::abs(std::abs((adjoint(pauli(i)) * u).trace()) - 2.0) < 1e-12) {
                    match = i;
                }
            }
            if (match < 0) {
                throw std::logic_error("Weyl operator matches no Pauli operator");
            }
            probs[m * 2 + n] = by_index[match];
        }
    }
    return GenPauliParams(2, std::move(probs));
}

std::vector<double> GenPauliParams::nontrivial() const {
    return {probs_.begin() + 1, probs_.end()};
}

BellProbs::BellProbs(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("empty probability vector");
    }
    double sum = 0;
    for (double &x : values_) {
        if (!(x >= -kProbSlack && x <= 1.0 + kProbSlack)) {
            throw std::invalid_argument("outcome probability outside [0, 1]");
        }
        x = std::clamp(x, 0.0, 1.0);
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbSlack) {
        throw std::invalid_argument("outcome probabilities must sum to 1");
    }
}

std::array<double, 4> klein_convolve(const std::array<double, 4> &a, const std::array<double, 4> &b) {
    std::array<double, 4> out{};
    for (int s = 0; s < 4; ++s) {
        for (int e = 0; e < 4; ++e) {
            out[s] += a[e] * b[s ^ e];
        }
    }
    return out;
}

DensityOperator apply_pauli(const DensityOperator &rho, const PauliParams &p) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("apply_pauli expects a two-qubit state");
    }
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const std::array<double, 4> weight{p[0], p[1], p[2], p.p4()};
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        ComplexMatrix op = kron(pauli(i), id);
        acc += weight[i] * (op * rho.matrix() * adjoint(op)).eigen();
    }
    return DensityOperator(ComplexMatrix(std::move(acc)));
}

DensityOperator apply_gen_pauli(const DensityOperator &rho, int d, const GenPauliParams &p) {
    if (p.d() != d || rho.dim() != static_cast<std::size_t>(d) * d) {
        throw std::invalid_argument("apply_gen_pauli: dimension mismatch");
    }
    const ComplexMatrix id = ComplexMatrix::identity(static_cast<std::size_t>(d));
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            double w = p(m, n);
            if (w == 0.0) {
                continue;
            }
            ComplexMatrix op = kron(weyl(d, m, n), id);
            acc += w * (op * rho.matrix() * adjoint(op)).eigen();
        }
    }
    return DensityOperator(ComplexMatrix(std::move(acc)));
}

BellProbs measure_bell(const DensityOperator &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("measure_bell expects a two-qubit state");
    }
    std::vector<double> out(4);
    for (int j = 0; j < 4; ++j) {
        out[j] = rho.expectation(bell_state(BellLabel::from_syndrome(kOutcomeSyndrome[j])));
    }
    return BellProbs(std::move(out));
}

BellProbs measure_gen_bell(const DensityOperator &rho, int d) {
    if (rho.dim() != static_cast<std::size_t>(d) * d) {
        throw std::invalid_argument("measure_gen_bell: dimension mismatch");
    }
    std::vector<double> out;
    out.reserve(rho.dim());
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            out.push_back(rho.expectation(gen_bell_state(d, m, n)));
        }
    }
    return BellProbs(std::move(out));
}

BellProbs bell_probs_closed(double fidelity, const PauliParams &p) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    const double base = (1.0 - fidelity) / 3.0;
    const double slope = (4.0 * fidelity - 1.0) / 3.0;
    return BellProbs({
        base + slope * p[0],
        base + slope * p[1],
        base + slope * p[2],
        fidelity - slope * (p[0] + p[1] + p[2]),
    });
}

BellProbs bell_probs_belldiag(const BellDiagonal &alpha, const PauliParams &p) {
    auto by_syndrome = klein_convolve(p.by_syndrome(), alpha.by_syndrome());
    std::vector<double> out(4);
    for (int j = 0; j < 4; ++j) {
        out[j] = by_syndrome[kOutcomeSyndrome[j]];
    }
    return BellProbs(std::move(out));
}

BellProbs gen_bell_probs_closed(int d, double lambda, const GenPauliParams &p) {
    if (p.d() != d) {
        throw std::invalid_argument("gen_bell_probs_closed: dimension mismatch");
    }
    IsotropicState state(d, lambda);
    const auto map = reference_error_outcome_map(d);
    const double base = (1.0 - lambda) / (static_cast<double>(d) * d);
    std::vector<double> out(map.size());
    for (std::size_t e = 0; e < map.size(); ++e) {
        out[static_cast<std::size_t>(map[e])] = base + lambda * p.probs()[e];
    }
    return BellProbs(std::move(out));
}

}  // namespace pcest
