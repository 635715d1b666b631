// Copyright 2026 The comqel Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Seedable, platform-independent random streams.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. Distributions are implemented here rather than taken from
 * <random> because the standard library distributions are
 * implementation-defined.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace comqel {

inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; uniform = (u64 >> 11) * 2^-53; streams split with splitmix64";

/// One round of splitmix64, used to derive independent sub-stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

/// Seed for stream `stream` of experiment seed `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi].
    double uniform(double lo, double hi) {
        const double u = uniform01();
        const double v = lo + (hi - lo) * u;
        return v > hi ? hi : v;
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace comqel
