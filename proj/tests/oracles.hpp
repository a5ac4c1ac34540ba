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

// Reference computations used by the tests. Nothing here calls into the
// library, so the two implementations can disagree.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Amp = std::complex<double>;
using Amps = std::vector<Amp>;

inline bool bit(std::size_t index, std::size_t q) { return ((index >> q) & 1U) != 0; }

/// Graph state amplitudes straight from the sum formula:
/// 2^{-N/2} (-1)^{sum_edges x_u x_v + sum_a k_a x_a}.
inline Amps graph_state(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges,
                        const std::vector<int> &k)
{
    Amps out(std::size_t{1} << n);
    const double scale = std::pow(2.0, -static_cast<double>(n) / 2.0);
    for (std::size_t x = 0; x < out.size(); ++x) {
        int parity = 0;
        for (auto [u, v] : edges) {
            parity ^= static_cast<int>(bit(x, u) && bit(x, v));
        }
        for (std::size_t a = 0; a < n; ++a) {
            parity ^= static_cast<int>(k[a] != 0 && bit(x, a));
        }
        out[x] = parity ? -scale : scale;
    }
    return out;
}

/// Dense 2x2 matrix on position q.
inline Amps apply_1q(const Amps &in, std::size_t q, Amp m00, Amp m01, Amp m10, Amp m11)
{
    Amps out(in.size());
    for (std::size_t x = 0; x < in.size(); ++x) {
        std::size_t x0 = x & ~(std::size_t{1} << q);
        std::size_t x1 = x0 | (std::size_t{1} << q);
        out[x] = bit(x, q) ? m10 * in[x0] + m11 * in[x1] : m00 * in[x0] + m01 * in[x1];
    }
    return out;
}

inline Amps hadamard(const Amps &in, std::size_t q)
{
    const double r = 1.0 / std::sqrt(2.0);
    return apply_1q(in, q, r, r, r, -r);
}

inline Amps cnot(const Amps &in, std::size_t control, std::size_t target)
{
    Amps out(in.size());
    for (std::size_t x = 0; x < in.size(); ++x) {
        std::size_t y = bit(x, control) ? x ^ (std::size_t{1} << target) : x;
        out[y] = in[x];
    }
    return out;
}

inline Amps ccz(const Amps &in, std::size_t a, std::size_t b, std::size_t c)
{
    Amps out = in;
    for (std::size_t x = 0; x < in.size(); ++x) {
        if (bit(x, a) && bit(x, b) && bit(x, c)) {
            out[x] = -out[x];
        }
    }
    return out;
}

/// |<a|b>|^2 / (|a|^2 |b|^2).
inline double fidelity(const Amps &a, const Amps &b)
{
    Amp ip{};
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ip += std::conj(a[i]) * b[i];
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    return std::norm(ip) / (na * nb);
}

} // namespace oracle
