// Copyright 2026 The qmbqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qmbqc {

/// Reproducible random source, version 1.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not portable across library
/// implementations, so every derived quantity is computed here from raw
/// 64-bit draws:
///   - uniform():  top 53 bits scaled by 2^-53, in [0, 1)
///   - bit():      top bit of one draw
///   - below(k):   rejection sampling on the top bits
///   - normal():   Box-Muller on two uniform() draws, cosine branch only
class Rng {
public:
    static constexpr int kVersion = 1;

    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bit() { return (engine_() >> 63) != 0; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound <= 1) {
            return 0;
        }
        int bits = 64 - __builtin_clzll(bound - 1);
        for (;;) {
            std::uint64_t v = engine_() >> (64 - bits);
            if (v < bound) {
                return v;
            }
        }
    }

    double normal()
    {
        double u1 = 1.0 - uniform(); // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qmbqc
