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

#ifndef PCEST_CHANNELS_H
#define PCEST_CHANNELS_H

#include <array>
#include <vector>

#include "pcest/linalg.h"
#include "pcest/states.h"

namespace pcest {

/// Qubit Pauli channel: sigma1, sigma2, sigma3 occur with p[0], p[1], p[2];
/// no error occurs with p4 = 1 - p1 - p2 - p3.
class PauliParams {
   public:
    PauliParams() = default;
    /// Throws unless every p_i >= 0 and p1 + p2 + p3 <= 1 (1e-12 slack).
    explicit PauliParams(std::array<double, 3> p);

    const std::array<double, 3> &p() const {
        return p_;
    }
    double operator[](std::size_t i) const {
        return p_[i];
    }
    double p4() const {
        return 1.0 - p_[0] - p_[1] - p_[2];
    }
    /// Error distribution indexed by syndrome (identity, sigma3, sigma1, sigma2).
    std::array<double, 4> by_syndrome() const;
    static PauliParams from_syndrome(const std::array<double, 4> &dist);

   private:
    std::array<double, 3> p_{0, 0, 0};
};

/// Generalized Pauli channel on a d-level system. probs is row-major over
/// (m, n), entry 0 the no-error probability.
class GenPauliParams {
   public:
    /// Throws unless d >= 2, size d^2, entries >= 0 and sum 1 (1e-12).
    GenPauliParams(int d, std::vector<double> probs);

    /// Uniform p_{m,n} = 1/d^2.
    static GenPauliParams depolarizing(int d);
    /// d = 2 embedding of a qubit channel. The Pauli operator matching each
    /// U_{m,n} is found numerically.
    static GenPauliParams from_qubit(const PauliParams &p);

    int d() const {
        return d_;
    }
    const std::vector<double> &probs() const {
        return probs_;
    }
    double operator()(int m, int n) const {
        return probs_[static_cast<std::size_t>(m * d_ + n)];
    }
    /// The d^2 - 1 error components, row-major, skipping (0, 0).
    std::vector<double> nontrivial() const;

   private:
    int d_;
    std::vector<double> probs_;
};

/// Bell-measurement outcome probabilities. For qubits the order is
/// (phi-, phi+, psi+, psi-); for d levels row-major over psi_{m,n}.
class BellProbs {
   public:
    /// Throws unless entries lie in [0, 1] and sum to 1 (1e-12 slack).
    explicit BellProbs(std::vector<double> values);

    const std::vector<double> &values() const {
        return values_;
    }
    double operator[](std::size_t i) const {
        return values_[i];
    }
    std::size_t size() const {
        return values_.size();
    }

   private:
    std::vector<double> values_;
};

/// Klein four-group convolution of two syndrome-indexed distributions:
/// out[s] = sum_e a[e] b[s ^ e].
std::array<double, 4> klein_convolve(const std::array<double, 4> &a, const std::array<double, 4> &b);

/// sum_i p_i (sigma_i x 1) rho (sigma_i x 1)^dagger. The first qubit is the one sent.
DensityOperator apply_pauli(const DensityOperator &rho, const PauliParams &p);

/// sum_{m,n} p_{m,n} (U_{m,n} x 1) rho (U_{m,n} x 1)^dagger.
DensityOperator apply_gen_pauli(const DensityOperator &rho, int d, const GenPauliParams &p);

/// Outcome probabilities of a Bell measurement on a two-qubit state.
BellProbs measure_bell(const DensityOperator &rho);
/// Outcome probabilities of a generalized Bell measurement, row-major over psi_{m,n}.
BellProbs measure_gen_bell(const DensityOperator &rho, int d);

/// Werner input: P_j = (1-F)/3 + (4F-1) p_j / 3 for j < 3, P_psi- the remainder.
BellProbs bell_probs_closed(double fidelity, const PauliParams &p);

/// Bell-diagonal input, computed in syndrome space.
BellProbs bell_probs_belldiag(const BellDiagonal &alpha, const PauliParams &p);

/// Isotropic input: P at the outcome reached from psi_00 by error (m,n) is
/// (1 - lambda)/d^2 + lambda p_{m,n}.
BellProbs gen_bell_probs_closed(int d, double lambda, const GenPauliParams &p);

}  // namespace pcest

#endif
