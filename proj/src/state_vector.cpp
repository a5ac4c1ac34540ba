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

#include "qmbqc/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qmbqc/errors.hpp"

namespace qmbqc {

namespace {

void check_capacity(std::size_t n, std::size_t limit)
{
    if (n > limit) {
        throw CapacityError(fmt::format("state of {} qubits exceeds the simulation limit of {}", n, limit));
    }
}

void check_distinct(std::vector<SiteId> sites)
{
    std::sort(sites.begin(), sites.end());
    if (std::adjacent_find(sites.begin(), sites.end()) != sites.end()) {
        throw InvalidInput("state sites must be distinct");
    }
}

std::vector<SiteId> iota_sites(std::size_t n)
{
    std::vector<SiteId> sites(n);
    for (std::size_t i = 0; i < n; ++i) {
        sites[i] = static_cast<SiteId>(i);
    }
    return sites;
}

} // namespace

StateVector::StateVector(std::vector<SiteId> sites, std::size_t limit) : sites_(std::move(sites))
{
    check_capacity(sites_.size(), limit);
    check_distinct(sites_);
    amps_.assign(std::size_t{1} << sites_.size(), Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::zeros(std::size_t n, std::size_t limit)
{
    check_capacity(n, limit);
    return StateVector(iota_sites(n), limit);
}

StateVector StateVector::basis(std::span<const std::uint8_t> bits, std::size_t limit)
{
    StateVector s = zeros(bits.size(), limit);
    std::size_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            index |= std::size_t{1} << i;
        }
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps, std::vector<SiteId> sites)
{
    if (amps.size() != (std::size_t{1} << sites.size())) {
        throw InvalidInput(fmt::format("{} amplitudes do not match {} sites", amps.size(), sites.size()));
    }
    check_distinct(sites);
    StateVector s;
    s.amps_ = std::move(amps);
    s.sites_ = std::move(sites);
    return s;
}

bool StateVector::has_site(SiteId site) const
{
    return std::find(sites_.begin(), sites_.end(), site) != sites_.end();
}

std::size_t StateVector::position(SiteId site) const
{
    auto it = std::find(sites_.begin(), sites_.end(), site);
    if (it == sites_.end()) {
        throw InvalidInput(fmt::format("site {} is not part of the state", site));
    }
    return static_cast<std::size_t>(it - sites_.begin());
}

double StateVector::norm() const
{
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void StateVector::normalize()
{
    double n = norm();
    if (n == 0.0) {
        throw InvalidInput("cannot normalize the zero vector");
    }
    for (auto &a : amps_) {
        a /= n;
    }
}

void StateVector::apply_x(std::size_t q)
{
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) {
            std::swap(amps_[i], amps_[i | bit]);
        }
    }
}

void StateVector::apply_z(std::size_t q)
{
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_h(std::size_t q)
{
    const std::size_t bit = std::size_t{1} << q;
    const double r = std::numbers::sqrt2 / 2.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) {
            Complex a0 = amps_[i];
            Complex a1 = amps_[i | bit];
            amps_[i] = r * (a0 + a1);
            amps_[i | bit] = r * (a0 - a1);
        }
    }
}

void StateVector::apply_s(std::size_t q) { apply_phase(q, std::numbers::pi / 2.0); }

void StateVector::apply_phase(std::size_t q, double phi)
{
    const std::size_t bit = std::size_t{1} << q;
    const Complex w = std::polar(1.0, phi);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            amps_[i] *= w;
        }
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target)
{
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void StateVector::apply_cz(std::size_t a, std::size_t b)
{
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_toffoli(std::size_t c0, std::size_t c1, std::size_t target)
{
    const std::size_t cmask = (std::size_t{1} << c0) | (std::size_t{1} << c1);
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cmask) == cmask && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void StateVector::apply_ccz(std::size_t a, std::size_t b, std::size_t c)
{
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b) | (std::size_t{1} << c);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

StateVector StateVector::tensor(const StateVector &other) const
{
    StateVector out;
    out.sites_ = sites_;
    out.sites_.insert(out.sites_.end(), other.sites_.begin(), other.sites_.end());
    out.amps_.resize(amps_.size() * other.amps_.size());
    for (std::size_t hi = 0; hi < other.amps_.size(); ++hi) {
        for (std::size_t lo = 0; lo < amps_.size(); ++lo) {
            out.amps_[hi * amps_.size() + lo] = amps_[lo] * other.amps_[hi];
        }
    }
    return out;
}

double StateVector::project_out(std::size_t q, Complex b0, Complex b1)
{
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t low_mask = bit - 1;
    std::vector<Complex> next(amps_.size() / 2);
    double weight = 0.0;
    for (std::size_t j = 0; j < next.size(); ++j) {
        std::size_t i0 = ((j & ~low_mask) << 1) | (j & low_mask);
        Complex v = std::conj(b0) * amps_[i0] + std::conj(b1) * amps_[i0 | bit];
        next[j] = v;
        weight += std::norm(v);
    }
    amps_ = std::move(next);
    sites_.erase(sites_.begin() + static_cast<std::ptrdiff_t>(q));
    return weight;
}

double StateVector::projection_weight(std::size_t q, Complex b0, Complex b1) const
{
    const std::size_t bit = std::size_t{1} << q;
    double weight = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) {
            weight += std::norm(std::conj(b0) * amps_[i] + std::conj(b1) * amps_[i | bit]);
        }
    }
    return weight;
}

StateVector StateVector::permuted(std::span<const SiteId> order) const
{
    if (order.size() != sites_.size()) {
        throw InvalidInput("permutation must list every site exactly once");
    }
    std::vector<std::size_t> from(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        from[k] = position(order[k]);
    }
    std::vector<std::size_t> seen(from);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw InvalidInput("permutation lists a site twice");
    }
    StateVector out;
    out.sites_.assign(order.begin(), order.end());
    out.amps_.assign(amps_.size(), Complex{});
    for (std::size_t j = 0; j < amps_.size(); ++j) {
        std::size_t i = 0;
        for (std::size_t k = 0; k < from.size(); ++k) {
            if (j & (std::size_t{1} << k)) {
                i |= std::size_t{1} << from[k];
            }
        }
        out.amps_[j] = amps_[i];
    }
    return out;
}

Complex inner_product(const StateVector &a, const StateVector &b)
{
    if (a.dimension() != b.dimension()) {
        throw InvalidInput(fmt::format("dimension mismatch: {} vs {}", a.dimension(), b.dimension()));
    }
    Complex acc{};
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); ++i) {
        acc += std::conj(aa[i]) * bb[i];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b)
{
    double na = a.norm();
    double nb = b.norm();
    return std::norm(inner_product(a, b)) / (na * na * nb * nb);
}

} // namespace qmbqc
