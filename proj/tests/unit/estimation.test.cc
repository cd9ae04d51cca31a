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

#include <random>

#include "gtest/gtest.h"

#include "../support/oracles.h"
#include "pcest/analysis.h"

using namespace pcest;

namespace {

// Counts equal to N times the given probabilities, which must be multiples of 1/N.
OutcomeCounts exact_counts(const BellProbs &probs, std::int64_t n) {
    std::vector<std::int64_t> c(probs.size());
    for (std::size_t j = 0; j < probs.size(); ++j) {
        c[j] = std::llround(probs[j] * static_cast<double>(n));
    }
    return OutcomeCounts(std::move(c));
}

OutcomeCounts random_counts(std::mt19937_64 &rng, std::size_t k, std::int64_t n) {
    std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(k) - 1);
    std::vector<std::int64_t> c(k, 0);
    for (std::int64_t s = 0; s < n; ++s) {
        c[static_cast<std::size_t>(pick(rng))]++;
    }
    return OutcomeCounts(std::move(c));
}

}  // namespace

TEST(estimation, werner_round_trip) {
    // P = (0.12, 0.62/3, 0.88/3, 0.38) at F = 0.9, p = (0.1, 0.2, 0.3).
    auto est = estimate_werner(OutcomeCounts({36, 62, 88, 114}), 0.9);
    EXPECT_NEAR(est.p_est[0], 0.1, 1e-15);
    EXPECT_NEAR(est.p_est[1], 0.2, 1e-15);
    EXPECT_NEAR(est.p_est[2], 0.3, 1e-15);
    EXPECT_FALSE(est.clipped);

    auto rounded = estimate_werner(OutcomeCounts({12, 20, 28, 40}), 0.9);
    EXPECT_NEAR(rounded.p_est[0], 0.1, 1e-15);
    EXPECT_NEAR(rounded.p_est[1], 0.5 / 2.6, 1e-15);
    EXPECT_NEAR(rounded.p_est[2], 0.74 / 2.6, 1e-15);
}

TEST(estimation, werner_pure_probe) {
    auto est = estimate_werner(OutcomeCounts({3, 1, 4, 2}), 1.0);
    EXPECT_DOUBLE_EQ(est.p_est[0], 0.3);
    EXPECT_DOUBLE_EQ(est.p_est[1], 0.1);
    EXPECT_DOUBLE_EQ(est.p_est[2], 0.4);
}

TEST(estimation, werner_negative_estimates_kept) {
    auto est = estimate_werner(OutcomeCounts({0, 0, 0, 4}), 0.6);
    for (double x : est.p_est) {
        EXPECT_NEAR(x, -0.4 / 1.4, 1e-15);
    }
    auto c = est.clip();
    EXPECT_TRUE(c.clipped);
    EXPECT_EQ(c.p_est, (std::vector<double>{0, 0, 0}));
}

TEST(estimation, werner_singular) {
    EXPECT_THROW(estimate_werner(OutcomeCounts({1, 1, 1, 1}), 0.25), NonIdentifiable);
    EXPECT_THROW(estimate_werner(OutcomeCounts({1, 1, 1, 1}), 1.5), std::invalid_argument);
    EXPECT_THROW(estimate_werner(OutcomeCounts({1, 1, 1}), 0.9), std::invalid_argument);
}

TEST(estimation, separable_examples) {
    auto noiseless = estimate_separable(SeparableCounts{10, {10, 10, 10}});
    EXPECT_EQ(noiseless.p_est, (std::vector<double>{0, 0, 0}));

    auto flat = estimate_separable(SeparableCounts{10, {5, 5, 5}});
    for (double x : flat.p_est) {
        EXPECT_DOUBLE_EQ(x, 0.25);
    }

    // <sigma> = (0.8, 0.6, 0.4).
    auto est = estimate_separable(SeparableCounts{10, {9, 8, 7}});
    EXPECT_NEAR(est.p_est[0], 0.2, 1e-15);
    EXPECT_NEAR(est.p_est[1], 0.1, 1e-15);
    EXPECT_NEAR(est.p_est[2], 0.0, 1e-15);

    EXPECT_THROW(estimate_separable(SeparableCounts{0, {0, 0, 0}}), std::invalid_argument);
    EXPECT_THROW(estimate_separable(SeparableCounts{3, {4, 0, 0}}), std::invalid_argument);
}

TEST(estimation, separable_signal_matches_channel) {
    // <sigma_a> after the channel on (1 + sigma_a)/2, computed with matrices.
    std::mt19937_64 rng(61);
    const ComplexMatrix sig[3] = {sigma1(), sigma2(), sigma3()};
    for (int trial = 0; trial < 20; ++trial) {
        auto p = oracle::random_pauli(rng);
        auto plus = separable_plus_probabilities(p);
        const ComplexMatrix ops[4] = {sig[0], sig[1], sig[2], ComplexMatrix::identity(2)};
        for (int a = 0; a < 3; ++a) {
            Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
            auto in = (ComplexMatrix::identity(2) + sig[a]) * Complex(0.5);
            for (int e = 0; e < 4; ++e) {
                double w = e < 3 ? p[e] : p.p4();
                out += w * (ops[e] * in * adjoint(ops[e])).eigen();
            }
            double expectation = (ComplexMatrix(out) * sig[a]).trace().real();
            EXPECT_NEAR(expectation, 2 * plus[a] - 1, 1e-14);
        }
    }
}

TEST(estimation, walsh_coefficients) {
    auto w = walsh_coefficients(werner(0.7));
    EXPECT_NEAR(w[0], -0.6, 1e-15);
    EXPECT_NEAR(w[1], -0.6, 1e-15);
    EXPECT_NEAR(w[2], 0.6, 1e-15);
    auto v = walsh_coefficients(BellDiagonal({0.4, 0.3, 0.2, 0.1}));
    EXPECT_NEAR(v[0], -0.4, 1e-15);
    EXPECT_NEAR(v[1], -0.2, 1e-15);
    EXPECT_NEAR(v[2], 0.0, 1e-15);
}

TEST(estimation, belldiag_singular) {
    BellDiagonal alpha({0.5, 0.5, 0.0, 0.0});
    try {
        estimate_belldiag(OutcomeCounts({1, 1, 1, 1}), alpha);
        FAIL() << "expected NonIdentifiable";
    } catch (const NonIdentifiable &e) {
        EXPECT_NE(std::string(e.what()).find("1 - 2a1 - 2a3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(estimate_belldiag(OutcomeCounts({1, 1, 1, 1}), werner(0.25)), NonIdentifiable);
}

TEST(estimation, belldiag_reduces_to_werner) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        double f = oracle::uniform(rng, 0.3, 1.0);
        auto counts = random_counts(rng, 4, 1 + trial % 17);
        auto a = estimate_belldiag(counts, werner(f));
        auto b = estimate_werner(counts, f);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_NEAR(a.p_est[i], b.p_est[i], 1e-12);
        }
    }
}

TEST(estimation, belldiag_inverts_exact_frequencies) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        auto alpha = oracle::random_identifiable_alpha(rng);
        auto p = oracle::random_pauli(rng);
        auto probs = bell_probs_belldiag(alpha, p);
        // Feed frequencies directly through the inversion matrix; counts would round.
        auto b = belldiag_inversion_matrix(alpha);
        for (std::size_t i = 0; i < 3; ++i) {
            double acc = 0;
            for (std::size_t j = 0; j < 4; ++j) {
                acc += b[i][j] * probs[j];
            }
            EXPECT_NEAR(acc, p[i], 1e-12);
        }
    }
}

TEST(estimation, belldiag_matrix_agrees_with_estimator) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 50; ++trial) {
        auto alpha = oracle::random_identifiable_alpha(rng);
        auto counts = random_counts(rng, 4, 9);
        auto est = estimate_belldiag(counts, alpha);
        auto b = belldiag_inversion_matrix(alpha);
        for (std::size_t i = 0; i < 3; ++i) {
            double acc = 0;
            for (std::size_t j = 0; j < 4; ++j) {
                acc += b[i][j] * counts.frequency(j);
            }
            EXPECT_NEAR(est.p_est[i], acc, 1e-12);
        }
    }
}

TEST(estimation, belldiag_round_trip_integer_counts) {
    // alpha = (1, 0, 0, 0) with p in tenths: exact frequencies at N = 10.
    auto probs = bell_probs_belldiag(BellDiagonal({1, 0, 0, 0}), PauliParams({0.1, 0.2, 0.3}));
    auto est = estimate_belldiag(exact_counts(probs, 10), BellDiagonal({1, 0, 0, 0}));
    EXPECT_NEAR(est.p_est[0], 0.1, 1e-15);
    EXPECT_NEAR(est.p_est[1], 0.2, 1e-15);
    EXPECT_NEAR(est.p_est[2], 0.3, 1e-15);
}

TEST(estimation, ddim_lambda_one) {
    std::vector<std::int64_t> c{2, 1, 0, 3, 0, 1, 0, 2, 1};
    auto est = estimate_ddim(OutcomeCounts(c), 3, 1.0);
    auto map = reference_error_outcome_map(3);
    ASSERT_EQ(est.p_est.size(), 8u);
    for (std::size_t e = 1; e < 9; ++e) {
        EXPECT_DOUBLE_EQ(est.p_est[e - 1], c[static_cast<std::size_t>(map[e])] / 10.0);
    }
}

TEST(estimation, ddim_singular_and_shape) {
    EXPECT_THROW(DdimEstimator(3, 0.0), NonIdentifiable);
    EXPECT_THROW(DdimEstimator(3, 2.0), std::invalid_argument);
    EXPECT_THROW(estimate_ddim(OutcomeCounts({1, 1, 1, 1}), 3, 0.5), std::invalid_argument);
}

TEST(estimation, ddim_d2_matches_werner) {
    // The Werner reference is psi- and the isotropic reference is phi+, so the
    // same channel lands on labels that differ by XOR with psi-.
    std::mt19937_64 rng(79);
    auto labels = qubit_labels_of_gen_bell();
    for (int trial = 0; trial < 100; ++trial) {
        double f = oracle::uniform(rng, 0.3, 1.0);
        double lambda = (4 * f - 1) / 3;
        auto bell = random_counts(rng, 4, 1 + trial % 11);
        std::vector<std::int64_t> gen(4);
        for (std::size_t k = 0; k < 4; ++k) {
            int s = (labels[k] ^ kPsiMinus).syndrome();
            for (std::size_t j = 0; j < 4; ++j) {
                if (kOutcomeSyndrome[j] == s) {
                    gen[k] = bell[j];
                }
            }
        }
        auto w = estimate_werner(bell, f);
        auto dd = estimate_ddim(OutcomeCounts(gen), 2, lambda);
        // Row-major (0,1), (1,0), (1,1) are Z, X and XZ.
        EXPECT_NEAR(w.p_est[0], dd.p_est[1], 1e-12);
        EXPECT_NEAR(w.p_est[1], dd.p_est[2], 1e-12);
        EXPECT_NEAR(w.p_est[2], dd.p_est[0], 1e-12);
    }
}

TEST(estimation, ddim_round_trip) {
    std::mt19937_64 rng(83);
    for (int d : {2, 3, 4}) {
        for (int trial = 0; trial < 10; ++trial) {
            double lambda = oracle::uniform(rng, 0.1, 1.0);
            GenPauliParams p(d, oracle::random_simplex(rng, d * d));
            auto probs = gen_bell_probs_closed(d, lambda, p);
            DdimEstimator est(d, lambda);
            // Linear in frequencies: evaluate on exact probabilities via a large common N.
            const auto &map = est.outcome_of_error();
            for (std::size_t e = 1; e < static_cast<std::size_t>(d * d); ++e) {
                double x = (probs[static_cast<std::size_t>(map[e])] - (1 - lambda) / (d * d)) / lambda;
                EXPECT_NEAR(x, p.probs()[e], 1e-13);
            }
        }
    }
    // Integer round trip: lambda = 1, probabilities in ninths.
    std::vector<double> ninths{2.0 / 9, 1.0 / 9, 0, 1.0 / 9, 2.0 / 9, 0, 1.0 / 9, 1.0 / 9, 1.0 / 9};
    GenPauliParams p(3, ninths);
    auto est = estimate_ddim(exact_counts(gen_bell_probs_closed(3, 1.0, p), 9), 3, 1.0);
    for (std::size_t e = 1; e < 9; ++e) {
        EXPECT_NEAR(est.p_est[e - 1], ninths[e], 1e-15);
    }
}

TEST(estimation, normalization) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 50; ++trial) {
        auto counts = random_counts(rng, 4, 7);
        double f = oracle::uniform(rng, 0.3, 1.0);
        double total = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            total += (3 * counts.frequency(j) + f - 1) / (4 * f - 1);
        }
        EXPECT_NEAR(total, 1.0, 1e-12);

        auto g = random_counts(rng, 9, 5);
        double lambda = oracle::uniform(rng, 0.1, 1.0);
        auto dd = estimate_ddim(g, 3, lambda);
        double zero = (g.frequency(0) - (1 - lambda) / 9) / lambda;
        double sum = zero;
        for (double x : dd.p_est) {
            sum += x;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(estimation, unbiased_by_enumeration) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = oracle::random_pauli(rng);
        double f = oracle::uniform(rng, 0.3, 1.0);
        Estimator werner_est = [f](const OutcomeCounts &c) { return estimate_werner(c, f); };
        auto mean = expected_estimate(1 + trial % 6, bell_probs_closed(f, p), werner_est);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_NEAR(mean[i], p[i], 1e-12);
        }
        auto alpha = oracle::random_identifiable_alpha(rng);
        Estimator bd = [alpha](const OutcomeCounts &c) { return estimate_belldiag(c, alpha); };
        auto mb = expected_estimate(1 + trial % 5, bell_probs_belldiag(alpha, p), bd);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_NEAR(mb[i], p[i], 1e-11);
        }
        auto ms = separable_expected_estimate(1 + trial % 6, p);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_NEAR(ms[i], p[i], 1e-12);
        }
    }
}
