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

#ifndef PCEST_ANALYSIS_H
#define PCEST_ANALYSIS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcest/channels.h"
#include "pcest/estimation.h"
#include "pcest/execution.h"
#include "pcest/measurement.h"
#include "pcest/rng.h"
#include "pcest/states.h"

namespace pcest {

using Estimator = std::function<ParamEstimate(const OutcomeCounts &)>;

enum class Scheme {
    Werner,
    Separable,
    BellDiagonal,
    Ddim,
};

std::string scheme_name(Scheme scheme);

struct McResult {
    double mean = 0;
    double standard_error = 0;
    std::int64_t trials = 0;
};

/// Mean squared deviation of one scheme at one parameter point.
struct ErrorReport {
    Scheme scheme = Scheme::Werner;
    double closed_form = 0;
    std::optional<double> oracle;
    std::optional<McResult> monte_carlo;
};

/// One point of the entangled-vs-separable comparison. gain and delta_R
/// compare the same two schemes and share their sign.
struct ComparisonPoint {
    double fidelity = 0;
    PauliParams p;
    double gain = 0;
    double delta_R = 0;
    double target_error = 1;
};

// ---------------------------------------------------------------------------
// Closed forms.

/// Werner-probe error: (3/(4F-1))^2 (1/N) sum_{j<3} P_j (1 - P_j).
double gbar_werner(double shots, double fidelity, const PauliParams &p);

/// The same quantity expanded in p:
/// (3/(4F-1))^2 (1/N) sum_i { p(1-p) + 4/3 (1-F)(p-1/4)(2p-1) - 16/9 (1-F)^2 (p-1/4)^2 }.
double gbar_werner_expanded(double shots, double fidelity, const PauliParams &p);

/// Separable-probe error with M shots per setting.
double fbar(double shots_per_setting, const PauliParams &p);

/// Bell-diagonal-probe error by covariance propagation through the Walsh inversion.
double gbar_belldiag(double shots, const BellDiagonal &alpha, const PauliParams &p);

/// Isotropic-probe error, summed over the d^2 - 1 non-identity errors.
double gbar_ddim(double shots, int d, double lambda, const GenPauliParams &p);

/// Unnormalized integral of gbar_belldiag over 0 <= p1+p2+p3 <= 1:
/// (1/32N) [sum of 1/w^2 over the three Walsh coefficients w - 3/5].
double mean_error_simplex(const BellDiagonal &alpha, double shots);

/// The same integral evaluated from Dirichlet first and second moments of
/// the simplex (int p = 1/24, int p^2 = 1/60) applied to the covariance form.
double mean_error_simplex_moments(const BellDiagonal &alpha, double shots);

// ---------------------------------------------------------------------------
// Exact finite-shot oracles.

/// sum over all outcome tuples of multinomial weight times sum_j (p_j - p_j^est)^2.
/// Throws std::length_error beyond `cap` outcomes.
double gbar_oracle(std::int64_t shots, const BellProbs &probs, const Estimator &estimator,
                   std::span<const double> true_p, std::size_t cap = kDefaultEnumerationCap);

/// Expected estimate vector over all outcome tuples.
std::vector<double> expected_estimate(std::int64_t shots, const BellProbs &probs, const Estimator &estimator,
                                      std::size_t cap = kDefaultEnumerationCap);

/// Probability of a +1 outcome in setting a: 1 - (p_b + p_c).
std::array<double, 3> separable_plus_probabilities(const PauliParams &p);

/// Separable error summed exactly over the product of three binomial distributions.
double fbar_oracle(std::int64_t shots_per_setting, const PauliParams &p);
std::array<double, 3> separable_expected_estimate(std::int64_t shots_per_setting, const PauliParams &p);

// ---------------------------------------------------------------------------
// Monte Carlo. Trial t draws from seed.derive(t), so the result does not
// depend on the execution mode or worker count.

McResult gbar_mc(std::int64_t shots, const BellProbs &probs, const Estimator &estimator,
                 std::span<const double> true_p, std::int64_t trials, SeedSpec seed,
                 Execution exec = Execution::Parallel);

McResult fbar_mc(std::int64_t shots_per_setting, const PauliParams &p, std::int64_t trials, SeedSpec seed,
                 bool clip = false, Execution exec = Execution::Parallel);

// ---------------------------------------------------------------------------
// Entangled vs separable comparison.

/// f(R/3) - g_F(R/2). R must be a positive multiple of 6.
double gain(std::int64_t resources, double fidelity, const PauliParams &p);

/// R-independent excess R (g_F(R/2) - f(R/3)) = 2 N g_F(N) - 3 M f(M).
double werner_excess(double fidelity, const PauliParams &p);

/// R_f - R_g for a common target error. Throws std::invalid_argument at p = 0.
double delta_R(double fidelity, const PauliParams &p, double target_error);

ComparisonPoint compare(double fidelity, const PauliParams &p, std::int64_t resources, double target_error);

/// (3/(4F-1))^2 N.
double equivalent_shots(double fidelity, double shots);

struct ExcessMinimum {
    double excess = 0;
    PauliParams argmin;
};

/// min over the full simplex of werner_excess: best point of a 50^3 grid
/// refined by Nelder-Mead.
ExcessMinimum min_excess(double fidelity);
/// min over symmetric channels p1 = p2 = p3.
ExcessMinimum min_excess_symmetric(double fidelity);

struct FminResult {
    double f_min = 0;
    PauliParams argmin;
};

/// Smallest F in (1/2, 1) for which some channel has werner_excess <= 0,
/// located by bisection to `tolerance`.
FminResult find_fmin(double tolerance = 1e-4);

/// Values of p in (0, 1/3) where gain(F, (p,p,p)) changes sign.
std::vector<double> symmetric_gain_roots(double fidelity);

}  // namespace pcest

#endif
