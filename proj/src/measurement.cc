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

#include "pcest/measurement.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace pcest {

OutcomeCounts::OutcomeCounts(std::vector<std::int64_t> counts) : counts_(std::move(counts)), shots_(0) {
    for (auto c : counts_) {
        if (c < 0) {
            throw std::invalid_argument("outcome counts must be non-negative");
        }
        shots_ += c;
    }
    if (shots_ <= 0) {
        throw std::invalid_argument("outcome counts must cover at least one shot");
    }
}

void CompensatedSum::add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        carry_ += (sum_ - t) + x;
    } else {
        carry_ += (x - t) + sum_;
    }
    sum_ = t;
}

std::int64_t sample_binomial(CounterRng &rng, std::int64_t n, double p) {
    if (n <= 0 || p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return n;
    }
    std::binomial_distribution<std::int64_t> dist(n, p);
    return dist(rng);
}

OutcomeCounts sample_counts(std::span<const double> probs, std::int64_t shots, CounterRng &rng) {
    if (shots < 1) {
        throw std::invalid_argument("sample_counts needs at least one shot");
    }
    std::vector<std::int64_t> out(probs.size(), 0);
    std::int64_t remaining = shots;
    double mass = 1.0;
    for (std::size_t j = 0; j + 1 < probs.size() && remaining > 0; ++j) {
        double cond = mass > 0.0 ? std::clamp(probs[j] / mass, 0.0, 1.0) : 0.0;
        out[j] = sample_binomial(rng, remaining, cond);
        remaining -= out[j];
        mass -= probs[j];
    }
    out.back() += remaining;
    return OutcomeCounts(std::move(out));
}

OutcomeCounts sample_counts(const BellProbs &probs, std::int64_t shots, SeedSpec seed) {
    CounterRng rng(seed);
    return sample_counts(std::span<const double>(probs.values()), shots, rng);
}

double log_multinomial_coefficient(std::span<const std::int64_t> counts) {
    std::int64_t n = 0;
    double acc = 0;
    for (auto c : counts) {
        n += c;
        acc -= std::lgamma(static_cast<double>(c) + 1.0);
    }
    return acc + std::lgamma(static_cast<double>(n) + 1.0);
}

double multinomial_weight(std::span<const std::int64_t> counts, std::span<const double> probs) {
    if (counts.size() != probs.size()) {
        throw std::invalid_argument("multinomial_weight: size mismatch");
    }
    double log_w = log_multinomial_coefficient(counts);
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] == 0) {
            continue;
        }
        if (probs[j] <= 0.0) {
            return 0.0;
        }
        log_w += static_cast<double>(counts[j]) * std::log(probs[j]);
    }
    return std::exp(log_w);
}

double binomial_coefficient(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) {
        return 0.0;
    }
    r = std::min(r, n - r);
    double out = 1.0;
    for (std::int64_t i = 1; i <= r; ++i) {
        out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
        if (!std::isfinite(out)) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return std::round(out);
}

OutcomeEnumeration::OutcomeEnumeration(int k, std::int64_t shots, std::size_t cap) : k_(k), shots_(shots) {
    if (k < 2 || shots < 0) {
        throw std::invalid_argument("enumeration needs k >= 2 and N >= 0");
    }
    double n = binomial_coefficient(shots + k - 1, k - 1);
    if (!(n <= static_cast<double>(cap))) {
        throw std::length_error(
            "outcome enumeration for k=" + std::to_string(k) + ", N=" + std::to_string(shots) + " exceeds cap " +
            std::to_string(cap));
    }
    size_ = static_cast<std::size_t>(n);
}

bool OutcomeEnumeration::advance(std::vector<std::int64_t> &c) {
    std::size_t z = c.size();
    while (z > 0 && c[z - 1] == 0) {
        --z;
    }
    // z - 1 is now the last non-zero slot.
    if (z <= 1) {
        return false;
    }
    std::size_t last = z - 1;
    std::int64_t tail = c[last] - 1;
    c[last] = 0;
    c[last - 1] += 1;
    c.back() = tail;
    return true;
}

}  // namespace pcest
