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

#ifndef PCEST_SWEEP_H
#define PCEST_SWEEP_H

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pcest/analysis.h"
#include "pcest/execution.h"

namespace pcest {

// Grid kernels behind the CLI sweeps. Cells are indexed row-major over the
// listed axes and results come back in cell order for either execution mode.

/// `steps + 1` evenly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int steps);

struct GainCell {
    double fidelity;
    double p;
    double gain;
};

/// gain(R, F, (p,p,p)) over fidelities x ps.
std::vector<GainCell> gain_sweep(std::span<const double> fidelities, std::span<const double> ps,
                                 std::int64_t resources, Execution exec);

struct ResourceCell {
    double fidelity;
    double p;
    /// -inf when F = 1/4 (the Werner probe needs unbounded resources), nan at p = 0.
    double delta_R;
};

std::vector<ResourceCell> resource_sweep(std::span<const double> fidelities, std::span<const double> ps,
                                         double target_error, Execution exec);

struct BellDiagCell {
    std::array<double, 4> alpha;
    /// nan where the state is not identifiable.
    double mean_error;
};

/// mean_error_simplex over alpha2 = i*step, alpha3 = j*step with alpha1 fixed
/// and alpha4 = 1 - alpha1 - alpha2 - alpha3 >= 0.
std::vector<BellDiagCell> belldiag_sweep(double alpha1, double step, double shots, Execution exec);

/// Grid cell with the smallest finite mean error; first hit wins ties.
const BellDiagCell *belldiag_argmin(const std::vector<BellDiagCell> &cells);

struct GridExtreme {
    double value;
    PauliParams at;
    std::int64_t cells;
};

/// Smallest gain(R, F, p) over p = (i, j, k)/steps with i + j + k <= steps.
GridExtreme min_gain_on_simplex(double fidelity, int steps, std::int64_t resources, Execution exec);

}  // namespace pcest

#endif
