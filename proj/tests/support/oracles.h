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

#ifndef PCEST_TESTS_ORACLES_H
#define PCEST_TESTS_ORACLES_H

// Test-only reference computations. Nothing here calls the closed forms
// under test.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "pcest/channels.h"
#include "pcest/estimation.h"
#include "pcest/states.h"

namespace pcest::oracle {

/// Uniform point of the probability simplex with k components.
inline std::vector<double> random_simplex(std::mt19937_64 &rng, int k) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> v(static_cast<std::size_t>(k));
    double s = 0;
    for (auto &x : v) {
        x = e(rng);
        s += x;
    }
    for (auto &x : v) {
        x /= s;
    }
    double rest = 1.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        rest -= v[i];
    }
    v.back() = std::max(rest, 0.0);
    return v;
}

inline PauliParams random_pauli(std::mt19937_64 &rng) {
    auto v = random_simplex(rng, 4);
    return PauliParams({v[0], v[1], v[2]});
}

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random Bell-diagonal state whose Walsh coefficients all have |w| >= min_walsh.
inline BellDiagonal random_identifiable_alpha(std::mt19937_64 &rng, double min_walsh = 0.1) {
    while (true) {
        auto v = random_simplex(rng, 4);
        double w[3] = {1 - 2 * v[0] - 2 * v[1], 1 - 2 * v[0] - 2 * v[2], 1 - 2 * v[1] - 2 * v[2]};
        if (std::abs(w[0]) >= min_walsh && std::abs(w[1]) >= min_walsh && std::abs(w[2]) >= min_walsh) {
            return BellDiagonal({v[0], v[1], v[2], v[3]});
        }
    }
}

/// Werner error with the last bracket term added instead of subtracted.
inline double gbar_werner_plus_sign(double n, double f, const PauliParams &p) {
    double scale = 3.0 / (4.0 * f - 1.0);
    double acc = 0;
    for (double x : p.p()) {
        double q = x - 0.25;
        acc += x * (1 - x) + (4.0 / 3.0) * (1 - f) * q * (2 * x - 1) + (16.0 / 9.0) * (1 - f) * (1 - f) * q * q;
    }
    return scale * scale * acc / n;
}

/// a! b! c! / (a + b + c + 3)!: integral of p1^a p2^b p3^c over 0 <= p1+p2+p3 <= 1.
inline double dirichlet_monomial(int a, int b, int c) {
    return std::tgamma(a + 1.0) * std::tgamma(b + 1.0) * std::tgamma(c + 1.0) / std::tgamma(a + b + c + 4.0);
}

/// Integral over the simplex of a function known to be a polynomial of
/// degree <= 2 in (p1, p2, p3). The ten coefficients are recovered from
/// values at 0, h e_i, 2h e_i and h(e_i + e_j), all inside the simplex.
inline double integrate_quadratic_on_simplex(const std::function<double(std::array<double, 3>)> &fn,
                                             double h = 0.25) {
    auto at = [&](std::array<int, 3> k) { return fn({k[0] * h, k[1] * h, k[2] * h}); };
    const double c0 = at({0, 0, 0});
    std::array<double, 3> lin{};
    std::array<std::array<double, 3>, 3> quad{};
    std::array<double, 3> f1{};
    for (int i = 0; i < 3; ++i) {
        std::array<int, 3> one{};
        std::array<int, 3> two{};
        one[i] = 1;
        two[i] = 2;
        f1[i] = at(one);
        double f2 = at(two);
        // f(t) = c0 + b t + a t^2 along the axis, t in units of h.
        double a = (f2 - 2 * f1[i] + c0) / 2.0;
        double b = f1[i] - c0 - a;
        quad[i][i] = a / (h * h);
        lin[i] = b / h;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            std::array<int, 3> k{};
            k[i] = 1;
            k[j] = 1;
            quad[i][j] = (at(k) - f1[i] - f1[j] + c0) / (h * h);
        }
    }
    double total = c0 * dirichlet_monomial(0, 0, 0);
    for (int i = 0; i < 3; ++i) {
        std::array<int, 3> e{};
        e[i] = 1;
        total += lin[i] * dirichlet_monomial(e[0], e[1], e[2]);
        e[i] = 2;
        total += quad[i][i] * dirichlet_monomial(e[0], e[1], e[2]);
        for (int j = i + 1; j < 3; ++j) {
            std::array<int, 3> m{};
            m[i] = 1;
            m[j] = 1;
            total += quad[i][j] * dirichlet_monomial(m[0], m[1], m[2]);
        }
    }
    return total;
}

/// Werner probe error from the per-component multinomial variance, computed
/// straight from Bell probabilities obtained through density matrices.
inline double gbar_werner_from_matrices(double n, double f, const PauliParams &p) {
    BellProbs probs = measure_bell(apply_pauli(to_density(werner(f)), p));
    double scale = 3.0 / (4.0 * f - 1.0);
    double acc = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        acc += probs[j] * (1 - probs[j]);
    }
    return scale * scale * acc / n;
}

inline double binomial_pmf(std::int64_t n, std::int64_t k, double q) {
    if (q == 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    if (q == 1.0) {
        return k == n ? 1.0 : 0.0;
    }
    double lc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    return std::exp(lc + k * std::log(q) + (n - k) * std::log1p(-q));
}

/// Mean squared deviation over four Bell outcomes by nested loops, weights
/// from plain factorials.
template <typename Est>
double gbar_nested_loops(int n, const std::vector<double> &probs, Est &&estimate, const std::vector<double> &truth) {
    double total = 0;
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) {
            for (int c = 0; a + b + c <= n; ++c) {
                int d = n - a - b - c;
                double w = std::tgamma(n + 1.0) / (std::tgamma(a + 1.0) * std::tgamma(b + 1.0) *
                                                   std::tgamma(c + 1.0) * std::tgamma(d + 1.0));
                w *= std::pow(probs[0], a) * std::pow(probs[1], b) * std::pow(probs[2], c) * std::pow(probs[3], d);
                auto est = estimate(OutcomeCounts({a, b, c, d})).p_est;
                double sq = 0;
                for (std::size_t j = 0; j < truth.size(); ++j) {
                    sq += (est[j] - truth[j]) * (est[j] - truth[j]);
                }
                total += w * sq;
            }
        }
    }
    return total;
}

/// Visits every way of splitting n shots over probs.size() outcomes by
/// recursion on the first outcome, with weight C(rest, i) P^i accumulated
/// one outcome at a time.
template <typename Visit>
void for_each_outcome(int n, const std::vector<double> &probs, Visit &&visit) {
    std::vector<std::int64_t> counts(probs.size(), 0);
    std::function<void(std::size_t, int, double)> rec = [&](std::size_t slot, int rest, double w) {
        if (slot + 1 == probs.size()) {
            counts[slot] = rest;
            visit(counts, w * std::pow(probs[slot], rest));
            return;
        }
        for (int i = 0; i <= rest; ++i) {
            counts[slot] = i;
            double choose = std::round(std::exp(std::lgamma(rest + 1.0) - std::lgamma(i + 1.0) -
                                                std::lgamma(rest - i + 1.0)));
            rec(slot + 1, rest - i, w * choose * std::pow(probs[slot], i));
        }
    };
    rec(0, n, 1.0);
}

template <typename Est>
double gbar_recursive(int n, const std::vector<double> &probs, Est &&estimate, const std::vector<double> &truth) {
    double total = 0;
    for_each_outcome(n, probs, [&](const std::vector<std::int64_t> &c, double w) {
        if (w == 0.0) {
            return;
        }
        auto est = estimate(OutcomeCounts(c)).p_est;
        double sq = 0;
        for (std::size_t j = 0; j < truth.size(); ++j) {
            sq += (est[j] - truth[j]) * (est[j] - truth[j]);
        }
        total += w * sq;
    });
    return total;
}

template <typename Est>
std::vector<double> mean_estimate_recursive(int n, const std::vector<double> &probs, Est &&estimate) {
    std::vector<double> mean;
    for_each_outcome(n, probs, [&](const std::vector<std::int64_t> &c, double w) {
        auto est = estimate(OutcomeCounts(c)).p_est;
        mean.resize(est.size(), 0.0);
        for (std::size_t j = 0; j < est.size(); ++j) {
            mean[j] += w * est[j];
        }
    });
    return mean;
}

/// Separable-scheme mean estimate over three independent binomials.
inline std::array<double, 3> separable_mean_nested_loops(int m, const PauliParams &p) {
    const double q[3] = {1 - p[1] - p[2], 1 - p[0] - p[2], 1 - p[0] - p[1]};
    std::array<double, 3> mean{};
    for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= m; ++b) {
            for (int c = 0; c <= m; ++c) {
                double w = binomial_pmf(m, a, q[0]) * binomial_pmf(m, b, q[1]) * binomial_pmf(m, c, q[2]);
                auto est = estimate_separable(SeparableCounts{m, {a, b, c}}).p_est;
                for (std::size_t j = 0; j < 3; ++j) {
                    mean[j] += w * est[j];
                }
            }
        }
    }
    return mean;
}

/// Separable-scheme mean squared deviation over three independent binomials.
inline double fbar_nested_loops(int m, const PauliParams &p) {
    const double q[3] = {1 - p[1] - p[2], 1 - p[0] - p[2], 1 - p[0] - p[1]};
    double total = 0;
    for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= m; ++b) {
            for (int c = 0; c <= m; ++c) {
                double w = binomial_pmf(m, a, q[0]) * binomial_pmf(m, b, q[1]) * binomial_pmf(m, c, q[2]);
                auto est = estimate_separable(SeparableCounts{m, {a, b, c}}).p_est;
                double sq = 0;
                for (std::size_t j = 0; j < 3; ++j) {
                    sq += (est[j] - p[j]) * (est[j] - p[j]);
                }
                total += w * sq;
            }
        }
    }
    return total;
}

}  // namespace pcest::oracle

#endif
