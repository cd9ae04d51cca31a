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

#ifndef PCEST_ESTIMATION_H
#define PCEST_ESTIMATION_H

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pcest/channels.h"
#include "pcest/measurement.h"
#include "pcest/states.h"

namespace pcest {

/// The probe state carries no information about some channel parameter
/// (F = 1/4, lambda = 0, or a vanishing Walsh coefficient).
class NonIdentifiable : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Estimated error probabilities. Qubit schemes give (p1, p2, p3); the
/// d-level scheme gives the d^2 - 1 components row-major skipping (0, 0).
/// Entries may be negative unless `clipped`.
struct ParamEstimate {
    std::vector<double> p_est;
    bool clipped = false;

    /// Copy with every entry clamped to [0, 1].
    ParamEstimate clip() const;
};

/// Separable scheme data: for each setting a = 1, 2, 3 the probe
/// (1 + sigma_a)/2 was sent `shots_per_setting` times and sigma_a measured,
/// giving `plus_counts[a-1]` outcomes +1.
struct SeparableCounts {
    std::int64_t shots_per_setting = 0;
    std::array<std::int64_t, 3> plus_counts{};

    /// Throws unless shots_per_setting >= 1 and 0 <= plus_count <= shots_per_setting.
    void validate() const;
};

/// p_j = (3 i_j / N + F - 1) / (4F - 1), counts ordered (phi-, phi+, psi+, psi-).
ParamEstimate estimate_werner(const OutcomeCounts &counts, double fidelity);

/// Linear inversion of <sigma_a> = 1 - 2 (p_b + p_c).
ParamEstimate estimate_separable(const SeparableCounts &counts);

/// Walsh coefficients (1 - 2a1 - 2a2, 1 - 2a1 - 2a3, 1 - 2a2 - 2a3) of a
/// Bell-diagonal state; these scale the bit-flip, phase-flip and combined
/// parity components of the outcome distribution.
std::array<double, 3> walsh_coefficients(const BellDiagonal &alpha);

/// Throws NonIdentifiable naming the first vanishing Walsh coefficient.
void require_identifiable(const BellDiagonal &alpha);

/// Walsh deconvolution of the outcome frequencies by the state's Walsh spectrum.
ParamEstimate estimate_belldiag(const OutcomeCounts &counts, const BellDiagonal &alpha);

/// The 3x4 matrix B with estimate_belldiag(f) = B f for frequencies f in
/// outcome order.
std::array<std::array<double, 4>, 3> belldiag_inversion_matrix(const BellDiagonal &alpha);

/// Isotropic-probe estimator p_{m,n} = (i/N - (1 - lambda)/d^2) / lambda, where
/// i counts the outcome that error (m,n) moves psi_00 to.
class DdimEstimator {
   public:
    /// Throws NonIdentifiable at lambda = 0.
    DdimEstimator(int d, double lambda);

    ParamEstimate operator()(const OutcomeCounts &counts) const;

    int d() const {
        return d_;
    }
    double lambda() const {
        return lambda_;
    }
    /// Outcome index reached from psi_00 by each error, row-major.
    const std::vector<int> &outcome_of_error() const {
        return outcome_of_error_;
    }

   private:
    int d_;
    double lambda_;
    std::vector<int> outcome_of_error_;
};

ParamEstimate estimate_ddim(const OutcomeCounts &counts, int d, double lambda);

}  // namespace pcest

#endif
