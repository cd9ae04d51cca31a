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

#ifndef PCEST_STATES_H
#define PCEST_STATES_H

#include <array>
#include <cstdint>
#include <vector>

#include "pcest/linalg.h"

namespace pcest {

/// Two-bit Bell label. phi+ = (0,0), phi- = (0,1), psi+ = (1,0), psi- = (1,1).
///
/// A Pauli error acting on the first qubit maps the label s to s XOR e, where
/// e is the error's own syndrome: identity (0,0), sigma1 (1,0), sigma3 (0,1),
/// sigma2 (1,1). Syndromes are packed as 2*bit_flip + phase_flip.
struct BellLabel {
    std::uint8_t bit_flip = 0;
    std::uint8_t phase_flip = 0;

    constexpr int syndrome() const {
        return 2 * bit_flip + phase_flip;
    }
    static constexpr BellLabel from_syndrome(int s) {
        return BellLabel{static_cast<std::uint8_t>((s >> 1) & 1), static_cast<std::uint8_t>(s & 1)};
    }
    constexpr BellLabel operator^(BellLabel e) const {
        return from_syndrome(syndrome() ^ e.syndrome());
    }
    constexpr bool operator==(const BellLabel &) const = default;
};

inline constexpr BellLabel kPhiPlus{0, 0};
inline constexpr BellLabel kPhiMinus{0, 1};
inline constexpr BellLabel kPsiPlus{1, 0};
inline constexpr BellLabel kPsiMinus{1, 1};

/// Syndrome of sigma_1, sigma_2, sigma_3, sigma_4 = identity.
inline constexpr std::array<int, 4> kPauliSyndrome{2, 3, 1, 0};

/// Bell-measurement outcome order used for counts and probabilities:
/// (phi-, phi+, psi+, psi-). Entry j is the syndrome of outcome j.
inline constexpr std::array<int, 4> kOutcomeSyndrome{1, 0, 2, 3};

/// Bell-diagonal two-qubit state. alpha is ordered (psi-, psi+, phi-, phi+).
class BellDiagonal {
   public:
    /// Throws std::invalid_argument unless alpha is a probability vector (sum to 1e-12).
    explicit BellDiagonal(std::array<double, 4> alpha);

    /// Coefficients indexed by Bell syndrome.
    static BellDiagonal from_syndrome(std::array<double, 4> by_syndrome);

    const std::array<double, 4> &alpha() const {
        return alpha_;
    }
    std::array<double, 4> by_syndrome() const;
    double fidelity() const {
        return alpha_[0];
    }

   private:
    std::array<double, 4> alpha_;
};

/// d-level isotropic state (1 - lambda) 1/d^2 + lambda |psi_00><psi_00|.
class IsotropicState {
   public:
    /// Throws unless d >= 2 and lambda is in [-1/(d^2-1), 1].
    IsotropicState(int d, double lambda);

    int d() const {
        return d_;
    }
    double lambda() const {
        return lambda_;
    }
    double fidelity() const;
    DensityOperator density() const;

   private:
    int d_;
    double lambda_;
};

StateVector bell_state(BellLabel label);

/// Werner state with singlet fidelity F. Throws unless F in [0, 1].
BellDiagonal werner(double fidelity);

DensityOperator to_density(const BellDiagonal &state);

/// PPT test: partial transpose has an eigenvalue below -kPsdSlack.
bool is_nonseparable(const BellDiagonal &state);

/// (3 sqrt 2 + 2) / 8.
double chsh_fidelity_threshold();
bool chsh_violated(double fidelity);

/// (1/sqrt d) sum_j exp(2 pi i j n / d) |j>|j+m>. The first slot is Alice's.
StateVector gen_bell_state(int d, int m, int n);

IsotropicState isotropic(int d, double lambda);

/// For each error (a, b), packed a*d + b, the packed index (m', n') of the
/// generalized Bell state that (U_{a,b} x 1)|psi_00> is proportional to.
/// Determined numerically from overlaps, not from a formula.
std::vector<int> reference_error_outcome_map(int d);

/// The qubit Bell label spanning the same ray as psi_{m,n} at d = 2, indexed
/// by m*2 + n. Determined numerically.
std::array<BellLabel, 4> qubit_labels_of_gen_bell();

}  // namespace pcest

#endif
