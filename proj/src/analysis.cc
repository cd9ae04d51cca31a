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

#include "pcest/analysis.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <gsl/gsl_multimin.h>

namespace pcest {

namespace {

double werner_slope(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    double slope = 4.0 * fidelity - 1.0;
    if (slope == 0.0) {
        throw NonIdentifiable("F = 1/4 carries no information about the channel");
    }
    return slope;
}

void require_positive_shots(double shots) {
    if (!(shots > 0.0)) {
        throw std::invalid_argument("number of shots must be positive");
    }
}

double squared_deviation(std::span<const double> est, std::span<const double> truth) {
    if (est.size() != truth.size()) {
        throw std::invalid_argument("estimate and true parameter sizes differ");
    }
    double acc = 0;
    for (std::size_t j = 0; j < est.size(); ++j) {
        double d = truth[j] - est[j];
        acc += d * d;
    }
    return acc;
}

McResult summarize(const std::vector<double> &samples) {
    CompensatedSum sum;
    for (double x : samples) {
        sum.add(x);
    }
    const double n = static_cast<double>(samples.size());
    const double mean = sum.value() / n;
    CompensatedSum sq;
    for (double x : samples) {
        sq.add((x - mean) * (x - mean));
    }
    const double var = samples.size() > 1 ? sq.value() / (n - 1.0) : 0.0;
    return McResult{mean, std::sqrt(var / n), static_cast<std::int64_t>(samples.size())};
}

template <typename TrialFn>
std::vector<double> run_trials(std::int64_t trials, Execution exec, TrialFn &&trial) {
    std::vector<double> out(static_cast<std::size_t>(trials));
    if (exec == Execution::Parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(static)
        for (std::int64_t t = 0; t < trials; ++t) {
            try {
                out[static_cast<std::size_t>(t)] = trial(t);
            } catch (...) {
#pragma omp critical(pcest_trial_failure)
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    } else {
        for (std::int64_t t = 0; t < trials; ++t) {
            out[static_cast<std::size_t>(t)] = trial(t);
        }
    }
    return out;
}

bool in_simplex(const double *x) {
    return x[0] >= 0.0 && x[1] >= 0.0 && x[2] >= 0.0 && x[0] + x[1] + x[2] <= 1.0;
}

struct ExcessObjective {
    double fidelity;
};

double nm_objective(const gsl_vector *v, void *params) {
    const double fidelity = static_cast<const ExcessObjective *>(params)->fidelity;
    const double x[3] = {gsl_vector_get(v, 0), gsl_vector_get(v, 1), gsl_vector_get(v, 2)};
    if (!in_simplex(x)) {
        double violation = std::max({0.0, -x[0], -x[1], -x[2], x[0] + x[1] + x[2] - 1.0});
        return 1e3 * (1.0 + violation);
    }
    return werner_excess(fidelity, PauliParams({x[0], x[1], x[2]}));
}

constexpr int kGridPoints = 50;

}  // namespace

std::string scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::Werner:
            return "werner";
        case Scheme::Separable:
            return "separable";
        case Scheme::BellDiagonal:
            return "belldiag";
        case Scheme::Ddim:
            return "ddim";
    }
    return "unknown";
}

double gbar_werner(double shots, double fidelity, const PauliParams &p) {
    require_positive_shots(shots);
    const double scale = 3.0 / werner_slope(fidelity);
    BellProbs probs = bell_probs_closed(fidelity, p);
    double acc = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        acc += probs[j] * (1.0 - probs[j]);
    }
    return scale * scale * acc / shots;
}

double gbar_werner_expanded(double shots, double fidelity, const PauliParams &p) {
    require_positive_shots(shots);
    const double scale = 3.0 / werner_slope(fidelity);
    const double mix = 1.0 - fidelity;
    double acc = 0;
    for (double pi : p.p()) {
        const double q = pi - 0.25;
        acc += pi * (1.0 - pi) + (4.0 / 3.0) * mix * q * (2.0 * pi - 1.0) - (16.0 / 9.0) * mix * mix * q * q;
    }
    return scale * scale * acc / shots;
}

double fbar(double shots_per_setting, const PauliParams &p) {
    require_positive_shots(shots_per_setting);
    const auto &x = p.p();
    double acc = 0;
    for (double pi : x) {
        acc += pi * (1.0 - pi);
    }
    acc -= x[0] * x[1] + x[1] * x[2] + x[0] * x[2];
    return 1.5 * acc / shots_per_setting;
}

double gbar_belldiag(double shots, const BellDiagonal &alpha, const PauliParams &p) {
    require_positive_shots(shots);
    const auto b = belldiag_inversion_matrix(alpha);
    const BellProbs probs = bell_probs_belldiag(alpha, p);
    // Cov(f)_{kl} = (P_k delta_kl - P_k P_l) / N; sum the diagonal of B Cov B^T.
    double acc = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        double second = 0;
        double first = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            second += b[i][k] * b[i][k] * probs[k];
            first += b[i][k] * probs[k];
        }
        acc += second - first * first;
    }
    return acc / shots;
}

double gbar_ddim(double shots, int d, double lambda, const GenPauliParams &p) {
    require_positive_shots(shots);
    IsotropicState state(d, lambda);
    if (lambda == 0.0) {
        throw NonIdentifiable("lambda = 0 carries no information about the channel");
    }
    if (p.d() != d) {
        throw std::invalid_argument("gbar_ddim: dimension mismatch");
    }
    const double uniform = 1.0 / (static_cast<double>(d) * d);
    const double mix = 1.0 - lambda;
    double acc = 0;
    for (double pe : p.nontrivial()) {
        const double r = pe - uniform;
        acc += pe * (1.0 - pe) - mix * r * (1.0 - 2.0 * pe) - mix * mix * r * r;
    }
    return acc / (shots * lambda * lambda);
}

double mean_error_simplex(const BellDiagonal &alpha, double shots) {
    require_positive_shots(shots);
    require_identifiable(alpha);
    double acc = -0.6;
    for (double w : walsh_coefficients(alpha)) {
        acc += 1.0 / (w * w);
    }
    return acc / (32.0 * shots);
}

double mean_error_simplex_moments(const BellDiagonal &alpha, double shots) {
    require_positive_shots(shots);
    constexpr double kFirst = 1.0 / 24.0;
    constexpr double kSecond = 1.0 / 60.0;
    const auto b = belldiag_inversion_matrix(alpha);
    // Every P_k is a convex combination of p1..p4, each with simplex integral 1/24.
    const auto a = alpha.by_syndrome();
    std::array<double, 4> p_moment{};
    for (int s = 0; s < 4; ++s) {
        for (int e = 0; e < 4; ++e) {
            p_moment[static_cast<std::size_t>(s)] += kFirst * a[static_cast<std::size_t>(s ^ e)];
        }
    }
    double acc = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            acc += b[i][j] * b[i][j] * p_moment[static_cast<std::size_t>(kOutcomeSyndrome[j])];
        }
        acc -= kSecond;
    }
    return acc / shots;
}

double gbar_oracle(std::int64_t shots, const BellProbs &probs, const Estimator &estimator,
                   std::span<const double> true_p, std::size_t cap) {
    OutcomeEnumeration outcomes(static_cast<int>(probs.size()), shots, cap);
    CompensatedSum total;
    outcomes.for_each([&](std::span<const std::int64_t> c) {
        double w = multinomial_weight(c, probs.values());
        if (w == 0.0) {
            return;
        }
        ParamEstimate est = estimator(OutcomeCounts({c.begin(), c.end()}));
        total.add(w * squared_deviation(est.p_est, true_p));
    });
    return total.value();
}

std::vector<double> expected_estimate(std::int64_t shots, const BellProbs &probs, const Estimator &estimator,
                                      std::size_t cap) {
    OutcomeEnumeration outcomes(static_cast<int>(probs.size()), shots, cap);
    std::vector<CompensatedSum> acc;
    outcomes.for_each([&](std::span<const std::int64_t> c) {
        double w = multinomial_weight(c, probs.values());
        ParamEstimate est = estimator(OutcomeCounts({c.begin(), c.end()}));
        acc.resize(est.p_est.size());
        for (std::size_t j = 0; j < est.p_est.size(); ++j) {
            acc[j].add(w * est.p_est[j]);
        }
    });
    std::vector<double> out;
    for (const auto &a : acc) {
        out.push_back(a.value());
    }
    return out;
}

std::array<double, 3> separable_plus_probabilities(const PauliParams &p) {
    return {1.0 - p[1] - p[2], 1.0 - p[0] - p[2], 1.0 - p[0] - p[1]};
}

namespace {

std::vector<double> binomial_pmf(std::int64_t n, double q) {
    std::vector<double> pmf(static_cast<std::size_t>(n + 1));
    for (std::int64_t k = 0; k <= n; ++k) {
        std::int64_t c[2] = {k, n - k};
        double probs[2] = {q, 1.0 - q};
        pmf[static_cast<std::size_t>(k)] = multinomial_weight(c, probs);
    }
    return pmf;
}

template <typename Fn>
void for_each_separable_outcome(std::int64_t m, const PauliParams &p, Fn &&fn) {
    if (m < 1) {
        throw std::invalid_argument("separable scheme needs at least one shot per setting");
    }
    const auto q = separable_plus_probabilities(p);
    const auto pmf0 = binomial_pmf(m, std::clamp(q[0], 0.0, 1.0));
    const auto pmf1 = binomial_pmf(m, std::clamp(q[1], 0.0, 1.0));
    const auto pmf2 = binomial_pmf(m, std::clamp(q[2], 0.0, 1.0));
    for (std::int64_t a = 0; a <= m; ++a) {
        for (std::int64_t b = 0; b <= m; ++b) {
            for (std::int64_t c = 0; c <= m; ++c) {
                double w = pmf0[static_cast<std::size_t>(a)] * pmf1[static_cast<std::size_t>(b)] *
                           pmf2[static_cast<std::size_t>(c)];
                if (w != 0.0) {
                    fn(w, estimate_separable(SeparableCounts{m, {a, b, c}}));
                }
            }
        }
    }
}

}  // namespace

double fbar_oracle(std::int64_t shots_per_setting, const PauliParams &p) {
    CompensatedSum total;
    for_each_separable_outcome(shots_per_setting, p, [&](double w, const ParamEstimate &est) {
        total.add(w * squared_deviation(est.p_est, p.p()));
    });
    return total.value();
}

std::array<double, 3> separable_expected_estimate(std::int64_t shots_per_setting, const PauliParams &p) {
    std::array<CompensatedSum, 3> acc;
    for_each_separable_outcome(shots_per_setting, p, [&](double w, const ParamEstimate &est) {
        for (std::size_t j = 0; j < 3; ++j) {
            acc[j].add(w * est.p_est[j]);
        }
    });
    return {acc[0].value(), acc[1].value(), acc[2].value()};
}

McResult gbar_mc(std::int64_t shots, const BellProbs &probs, const Estimator &estimator,
                 std::span<const double> true_p, std::int64_t trials, SeedSpec seed, Execution exec) {
    if (trials < 2) {
        throw std::invalid_argument("Monte Carlo needs at least two trials");
    }
    if (shots < 1) {
        throw std::invalid_argument("number of shots must be positive");
    }
    const std::span<const double> pv(probs.values());
    auto samples = run_trials(trials, exec, [&](std::int64_t t) {
        CounterRng rng(seed.derive(static_cast<std::uint64_t>(t)));
        ParamEstimate est = estimator(sample_counts(pv, shots, rng));
        return squared_deviation(est.p_est, true_p);
    });
    return summarize(samples);
}

McResult fbar_mc(std::int64_t shots_per_setting, const PauliParams &p, std::int64_t trials, SeedSpec seed,
                 bool clip, Execution exec) {
    if (trials < 2) {
        throw std::invalid_argument("Monte Carlo needs at least two trials");
    }
    if (shots_per_setting < 1) {
        throw std::invalid_argument("separable scheme needs at least one shot per setting");
    }
    const auto q = separable_plus_probabilities(p);
    auto samples = run_trials(trials, exec, [&](std::int64_t t) {
        CounterRng rng(seed.derive(static_cast<std::uint64_t>(t)));
        SeparableCounts counts{shots_per_setting, {}};
        for (std::size_t a = 0; a < 3; ++a) {
            counts.plus_counts[a] = sample_binomial(rng, shots_per_setting, q[a]);
        }
        ParamEstimate est = estimate_separable(counts);
        if (clip) {
            est = est.clip();
        }
        return squared_deviation(est.p_est, p.p());
    });
    return summarize(samples);
}

double gain(std::int64_t resources, double fidelity, const PauliParams &p) {
    if (resources < 6 || resources % 6 != 0) {
        throw std::invalid_argument("resources R must be a positive multiple of 6");
    }
    const double r = static_cast<double>(resources);
    return fbar(r / 3.0, p) - gbar_werner(r / 2.0, fidelity, p);
}

double werner_excess(double fidelity, const PauliParams &p) {
    return 2.0 * gbar_werner(1.0, fidelity, p) - 3.0 * fbar(1.0, p);
}

double delta_R(double fidelity, const PauliParams &p, double target_error) {
    if (!(target_error > 0.0)) {
        throw std::invalid_argument("target error must be positive");
    }
    if (p[0] == 0.0 && p[1] == 0.0 && p[2] == 0.0) {
        throw std::invalid_argument("noiseless channel: no resource count is defined");
    }
    // f(M) = f(1)/M and g(N) = g(1)/N, so R_f = 3 f(1)/eps and R_g = 2 g(1)/eps.
    const double r_f = 3.0 * fbar(1.0, p) / target_error;
    const double r_g = 2.0 * gbar_werner(1.0, fidelity, p) / target_error;
    return r_f - r_g;
}

ComparisonPoint compare(double fidelity, const PauliParams &p, std::int64_t resources, double target_error) {
    return ComparisonPoint{fidelity, p, gain(resources, fidelity, p), delta_R(fidelity, p, target_error),
                           target_error};
}

double equivalent_shots(double fidelity, double shots) {
    const double scale = 3.0 / werner_slope(fidelity);
    return scale * scale * shots;
}

ExcessMinimum min_excess(double fidelity) {
    werner_slope(fidelity);
    // Grid seed; strict < keeps the first hit on ties.
    double best = std::numeric_limits<double>::infinity();
    std::array<double, 3> best_x{};
    const double h = 1.0 / (kGridPoints - 1);
    for (int i = 0; i < kGridPoints; ++i) {
        for (int j = 0; i + j < kGridPoints; ++j) {
            for (int k = 0; i + j + k < kGridPoints; ++k) {
                std::array<double, 3> x{i * h, j * h, k * h};
                double v = werner_excess(fidelity, PauliParams({x[0], x[1], std::min(x[2], 1.0 - x[0] - x[1])}));
                if (v < best) {
                    best = v;
                    best_x = x;
                }
            }
        }
    }

    ExcessObjective params{fidelity};
    gsl_multimin_function fn{&nm_objective, 3, &params};
    std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_alloc(3), &gsl_vector_free);
    std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> step(gsl_vector_alloc(3), &gsl_vector_free);
    for (std::size_t i = 0; i < 3; ++i) {
        gsl_vector_set(x.get(), i, best_x[i]);
    }
    gsl_vector_set_all(step.get(), 0.5 * h);
    std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> solver(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3), &gsl_multimin_fminimizer_free);
    gsl_multimin_fminimizer_set(solver.get(), &fn, x.get(), step.get());
    for (int iter = 0; iter < 5000; ++iter) {
        if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver.get()), 1e-12) == GSL_SUCCESS) {
            break;
        }
    }
    const gsl_vector *xm = gsl_multimin_fminimizer_x(solver.get());
    const double refined[3] = {gsl_vector_get(xm, 0), gsl_vector_get(xm, 1), gsl_vector_get(xm, 2)};
    if (in_simplex(refined) && solver->fval < best) {
        best_x = {refined[0], refined[1], refined[2]};
        best = solver->fval;
    }
    return ExcessMinimum{best, PauliParams({best_x[0], best_x[1], std::min(best_x[2], 1.0 - best_x[0] - best_x[1])})};
}

ExcessMinimum min_excess_symmetric(double fidelity) {
    werner_slope(fidelity);
    auto f = [fidelity](double p) { return werner_excess(fidelity, PauliParams({p, p, p})); };
    auto [p, v] = boost::math::tools::brent_find_minima(f, 0.0, 1.0 / 3.0, 40);
    return ExcessMinimum{v, PauliParams({p, p, p})};
}

FminResult find_fmin(double tolerance) {
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    // excess(F) is positive near F = 1/2 and negative at F = 1.
    double lo = 0.5;
    double hi = 1.0;
    ExcessMinimum at_hi = min_excess(hi);
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        ExcessMinimum m = min_excess(mid);
        if (m.excess <= 0.0) {
            hi = mid;
            at_hi = m;
        } else {
            lo = mid;
        }
    }
    return FminResult{hi, at_hi.argmin};
}

std::vector<double> symmetric_gain_roots(double fidelity) {
    werner_slope(fidelity);
    auto f = [fidelity](double p) { return -werner_excess(fidelity, PauliParams({p, p, p})); };
    constexpr int kScan = 2000;
    const double hi = 1.0 / 3.0;
    std::vector<double> roots;
    double prev_x = 0.0;
    double prev_v = f(prev_x);
    for (int i = 1; i <= kScan; ++i) {
        double x = hi * i / kScan;
        double v = f(x);
        if (prev_v == 0.0 && i > 1) {
            roots.push_back(prev_x);
        } else if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
            boost::uintmax_t iters = 200;
            auto bracket = boost::math::tools::toms748_solve(
                f, prev_x, x, prev_v, v, boost::math::tools::eps_tolerance<double>(50), iters);
            roots.push_back(0.5 * (bracket.first + bracket.second));
        }
        prev_x = x;
        prev_v = v;
    }
    return roots;
}

}  // namespace pcest
