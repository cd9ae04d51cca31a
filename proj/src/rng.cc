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

#include "pcest/rng.h"

#include <bit>

namespace pcest {

namespace {

constexpr std::uint64_t kGolden = UINT64_C(0x9E3779B97F4A7C15);

// Same gamma conditioning as java.util.SplittableRandom: odd, and with enough
// bit transitions that consecutive keys do not look correlated.
std::uint64_t mix_gamma(std::uint64_t z) {
    z = (z ^ (z >> 33)) * UINT64_C(0xFF51AFD7ED558CCD);
    z = (z ^ (z >> 33)) * UINT64_C(0xC4CEB9FE1A85EC53);
    z = (z ^ (z >> 33)) | 1u;
    if (std::popcount(z ^ (z >> 1)) < 24) {
        z ^= UINT64_C(0xAAAAAAAAAAAAAAAA);
    }
    return z;
}

}  // namespace

SeedSpec SeedSpec::derive(std::uint64_t child) const {
    return SeedSpec{mix64(mix64(master_seed + kGolden) ^ mix64(stream_index + 2 * kGolden)), child};
}

CounterRng::CounterRng(SeedSpec seed) {
    std::uint64_t master = mix64(seed.master_seed + kGolden);
    std::uint64_t stream = mix64(seed.stream_index * kGolden + master);
    key_ = mix64(master ^ stream);
    gamma_ = mix_gamma(stream + master * 3);
}

}  // namespace pcest
