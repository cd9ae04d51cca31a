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

#ifndef PCEST_RNG_H
#define PCEST_RNG_H

#include <cstdint>
#include <limits>

namespace pcest {

/// Identifies one random stream. Streams with different (master_seed,
/// stream_index) pairs share no state and can be consumed in any order.
struct SeedSpec {
    std::uint64_t master_seed = 20020131;
    std::uint64_t stream_index = 0;

    /// A child stream keyed by this stream and `child`. Used to give every
    /// Monte Carlo trial of a sweep cell its own stream.
    SeedSpec derive(std::uint64_t child) const;

    bool operator==(const SeedSpec &) const = default;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
}

/// Counter-based generator: output n is mix64(key + n * gamma), where the
/// key and odd increment are hashed from the SeedSpec. Satisfies
/// UniformRandomBitGenerator.
class CounterRng {
   public:
    using result_type = std::uint64_t;

    explicit CounterRng(SeedSpec seed);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }
    result_type operator()() {
        return mix64(key_ + (++counter_) * gamma_);
    }
    /// Output at an arbitrary counter position without advancing.
    result_type at(std::uint64_t counter) const {
        return mix64(key_ + counter * gamma_);
    }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

   private:
    std::uint64_t key_;
    std::uint64_t gamma_;
    std::uint64_t counter_ = 0;
};

}  // namespace pcest

#endif
