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

#ifndef PCEST_MEASUREMENT_H
#define PCEST_MEASUREMENT_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pcest/channels.h"
#include "pcest/rng.h"

namespace pcest {

/// Tallies of k measurement outcomes over N shots. Same ordering as BellProbs.
class OutcomeCounts {
   public:
    /// Throws unless counts are non-negative and sum to a positive N.
    explicit OutcomeCounts(std::vector<std::int64_t> counts);

    const std::vector<std::int64_t> &counts() const {
        return counts_;
    }
    std::int64_t operator[](std::size_t i) const {
        return counts_[i];
    }
    std::size_t size() const {
        return counts_.size();
    }
    std::int64_t shots() const {
        return shots_;
    }
    double frequency(std::size_t i) const {
        return static_cast<double>(counts_[i]) / static_cast<double>(shots_);
    }

   private:
    std::vector<std::int64_t> counts_;
    std::int64_t shots_;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
   public:
    void add(double x);
    double value() const {
        return sum_ + carry_;
    }

   private:
    double sum_ = 0;
    double carry_ = 0;
};

/// Binomial(n, p) draw.
std::int64_t sample_binomial(CounterRng &rng, std::int64_t n, double p);

/// Multinomial draw by sequential conditional binomials.
OutcomeCounts sample_counts(std::span<const double> probs, std::int64_t shots, CounterRng &rng);
OutcomeCounts sample_counts(const BellProbs &probs, std::int64_t shots, SeedSpec seed);

/// log( N! / prod i_j! ). Exact integer arithmetic is not used; accurate to
/// a few ulps for N in the thousands.
double log_multinomial_coefficient(std::span<const std::int64_t> counts);

/// N!/(prod i_j!) prod P_j^{i_j}, evaluated in log space. Zero if some
/// P_j = 0 with i_j > 0.
double multinomial_weight(std::span<const std::int64_t> counts, std::span<const double> probs);

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

/// C(n, r) as a double, or +inf on overflow.
double binomial_coefficient(std::int64_t n, std::int64_t r);

/// Every composition of N into k non-negative parts, each visited once, in
/// lexicographic order of the count vector.
class OutcomeEnumeration {
   public:
    /// Throws std::length_error if C(N+k-1, k-1) exceeds cap, std::invalid_argument if k < 2 or N < 0.
    OutcomeEnumeration(int k, std::int64_t shots, std::size_t cap = kDefaultEnumerationCap);

    int k() const {
        return k_;
    }
    std::int64_t shots() const {
        return shots_;
    }
    std::size_t size() const {
        return size_;
    }

    /// Calls fn(std::span<const std::int64_t>) on each composition.
    template <typename Fn>
    void for_each(Fn &&fn) const {
        std::vector<std::int64_t> c(static_cast<std::size_t>(k_), 0);
        c.back() = shots_;
        while (true) {
            fn(std::span<const std::int64_t>(c));
            if (!advance(c)) {
                return;
            }
        }
    }

    /// Steps to the next composition; false after the last one.
    static bool advance(std::vector<std::int64_t> &c);

   private:
    int k_;
    std::int64_t shots_;
    std::size_t size_;
};

}  // namespace pcest

#endif
