// Copyright 2026 The MGPD Simulator Authors
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

#ifndef MGPD_RNG_HPP
#define MGPD_RNG_HPP

#include <cstdint>
#include <limits>

namespace mgpd {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based SplitMix64 stream keyed by (master seed, block index, tag).
///
/// Every block owns an independent stream, so results do not depend on how
/// blocks are distributed across workers or in which order they run.
class BlockStream {
public:
    using result_type = std::uint64_t;

    BlockStream(std::uint64_t seed, std::uint64_t block, std::uint64_t tag = 0)
        : state_(splitmix64_mix(splitmix64_mix(seed) ^ splitmix64_mix(block + kGamma) ^
                                splitmix64_mix(~tag))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += kGamma;
        return splitmix64_mix(state_);
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t state_;
};

}  // namespace mgpd

#endif  // MGPD_RNG_HPP
