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

#include "qmbqc/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qmbqc/errors.hpp"

namespace qmbqc {

GraphState::GraphState(std::vector<SiteId> vertices, std::vector<Edge> edges, std::vector<std::uint8_t> signs)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), signs_(std::move(signs))
{
    std::vector<SiteId> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("graph lists a vertex twice");
    }
    if (signs_.empty()) {
        signs_.assign(vertices_.size(), 0);
    }
    if (signs_.size() != vertices_.size()) {
        throw InvalidInput(fmt::format("{} sign bits for {} vertices", signs_.size(), vertices_.size()));
    }
    for (auto s : signs_) {
        if (s > 1) {
            throw InvalidInput("sign bits must be 0 or 1");
        }
    }
    for (auto &[u, v] : edges_) {
        if (u == v) {
            throw InvalidInput(fmt::format("self-loop on vertex {}", u));
        }
        if (!std::binary_search(sorted.begin(), sorted.end(), u) ||
            !std::binary_search(sorted.begin(), sorted.end(), v)) {
            throw InvalidInput(fmt::format("edge ({}, {}) references an unknown vertex", u, v));
        }
    }
}

GraphState GraphState::lattice(std::size_t rows, std::size_t cols)
{
    std::vector<SiteId> vertices;
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            auto id = static_cast<SiteId>(r * cols + c);
            vertices.push_back(id);
            if (c + 1 < cols) {
                edges.emplace_back(id, id + 1);
            }
            if (r + 1 < rows) {
                edges.emplace_back(id, static_cast<SiteId>(id + cols));
            }
        }
    }
    return GraphState(std::move(vertices), std::move(edges));
}

bool GraphState::contains(SiteId v) const
{
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t GraphState::index_of(SiteId v) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) {
        throw InvalidInput(fmt::format("vertex {} not in graph", v));
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<SiteId> GraphState::neighbors(SiteId v) const
{
    std::vector<SiteId> out;
    for (const auto &[a, b] : edges_) {
        if (a == v) {
            out.push_back(b);
        } else if (b == v) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool GraphState::adjacent(SiteId u, SiteId v) const
{
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge &e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    });
}

StateVector build_cluster(const GraphState &g, std::size_t qubit_limit)
{
    StateVector state(g.vertices(), qubit_limit);
    for (std::size_t q = 0; q < g.size(); ++q) {
        state.apply_h(q);
    }
    for (const auto &[u, v] : g.edges()) {
        state.apply_cz(g.index_of(u), g.index_of(v));
    }
    for (std::size_t q = 0; q < g.size(); ++q) {
        if (g.signs()[q]) {
            state.apply_z(q);
        }
    }
    state.normalize();
    return state;
}

namespace {

void check_state_matches(const StateVector &state, const GraphState &g)
{
    if (state.num_qubits() != g.size()) {
        throw InvalidInput(
            fmt::format("state has {} qubits but graph has {} vertices", state.num_qubits(), g.size()));
    }
    for (SiteId v : g.vertices()) {
        if (!state.has_site(v)) {
            throw InvalidInput(fmt::format("state is missing site {}", v));
        }
    }
}

double distance(const StateVector &a, const StateVector &b, double sign)
{
    double acc = 0.0;
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); ++i) {
        acc += std::norm(aa[i] - sign * bb[i]);
    }
    return std::sqrt(acc);
}

} // namespace

StateVector apply_correlation_operator(const StateVector &state, const GraphState &g, SiteId a)
{
    check_state_matches(state, g);
    StateVector out = state;
    out.apply_x(state.position(a));
    for (SiteId b : g.neighbors(a)) {
        out.apply_z(state.position(b));
    }
    return out;
}

std::optional<int> verify_correlation(const StateVector &state, const GraphState &g, SiteId a, double tolerance)
{
    StateVector image = apply_correlation_operator(state, g, a);
    if (distance(image, state, 1.0) <= tolerance) {
        return 1;
    }
    if (distance(image, state, -1.0) <= tolerance) {
        return -1;
    }
    return std::nullopt;
}

MeasurementBasis MeasurementBasis::y() { return {Kind::Y, std::numbers::pi / 2.0}; }

MeasurementBasis MeasurementBasis::xy(double angle)
{
    if (!std::isfinite(angle)) {
        throw InvalidInput("measurement angle must be finite");
    }
    return {Kind::XY, angle};
}

bool MeasurementBasis::is_pauli() const
{
    if (kind_ != Kind::XY) {
        return true;
    }
    double quarter = angle_ / (std::numbers::pi / 2.0);
    return std::abs(quarter - std::round(quarter)) < 1e-12;
}

std::array<Complex, 2> MeasurementBasis::vector(int outcome) const
{
    const double r = std::numbers::sqrt2 / 2.0;
    if (kind_ == Kind::Z) {
        return outcome == 0 ? std::array<Complex, 2>{1.0, 0.0} : std::array<Complex, 2>{0.0, 1.0};
    }
    Complex phase = std::polar(r, angle_);
    return {Complex{r, 0.0}, outcome == 0 ? phase : -phase};
}

bool MeasurementBasis::equivalent(const MeasurementBasis &other, double tolerance) const
{
    if (kind_ == Kind::Z || other.kind_ == Kind::Z) {
        return kind_ == other.kind_;
    }
    double diff = std::remainder(angle_ - other.angle_, 2.0 * std::numbers::pi);
    return std::abs(diff) <= tolerance;
}

OutcomeSource OutcomeSource::random(std::uint64_t seed)
{
    OutcomeSource s;
    s.rng_ = Rng(seed);
    return s;
}

OutcomeSource OutcomeSource::forced(std::vector<std::uint8_t> outcomes)
{
    OutcomeSource s;
    s.forced_ = true;
    for (auto o : outcomes) {
        if (o > 1) {
            throw InvalidInput("forced outcomes must be 0 or 1");
        }
    }
    s.outcomes_ = std::move(outcomes);
    return s;
}

int OutcomeSource::next(double p0)
{
    if (!forced_) {
        return rng_.uniform() < p0 ? 0 : 1;
    }
    if (cursor_ >= outcomes_.size()) {
        throw InvalidInput(fmt::format("forced outcome list exhausted after {} entries", outcomes_.size()));
    }
    int outcome = outcomes_[cursor_++];
    double p = outcome == 0 ? p0 : 1.0 - p0;
    if (p < 1e-12) {
        throw ImpossibleBranch(fmt::format("forced outcome {} has probability {:.3g}", outcome, p));
    }
    return outcome;
}

std::array<double, 2> outcome_probabilities(const StateVector &state, SiteId site, const MeasurementBasis &basis)
{
    if (!state.has_site(site)) {
        throw ContractError(fmt::format("site {} is not active (already measured?)", site));
    }
    std::size_t q = state.position(site);
    double total = state.norm();
    total *= total;
    std::array<double, 2> p{};
    for (int r = 0; r < 2; ++r) {
        auto v = basis.vector(r);
        p[static_cast<std::size_t>(r)] = state.projection_weight(q, v[0], v[1]) / total;
    }
    return p;
}

MeasurementResult measure_site(StateVector &state, SiteId site, const MeasurementBasis &basis,
                               OutcomeSource &source)
{
    auto p = outcome_probabilities(state, site, basis);
    int outcome = source.next(p[0]);
    auto v = basis.vector(outcome);
    double weight = state.project_out(state.position(site), v[0], v[1]);
    if (weight <= 0.0) {
        throw ImpossibleBranch(fmt::format("measurement of site {} produced an empty branch", site));
    }
    state.normalize();
    return {outcome, p[static_cast<std::size_t>(outcome)]};
}

StateVector canonical_phase(const StateVector &state)
{
    auto amps = state.amplitudes();
    // Pivot on the first amplitude above half the maximum.
    double largest = 0.0;
    for (const auto &a : amps) {
        largest = std::max(largest, std::abs(a));
    }
    std::size_t best = 0;
    while (best + 1 < amps.size() && std::abs(amps[best]) <= largest / 2.0) {
        ++best;
    }
    Complex rot = std::abs(amps[best]) > 0.0 ? std::conj(amps[best]) / std::abs(amps[best]) : Complex{1.0};
    std::vector<Complex> out(amps.begin(), amps.end());
    for (auto &a : out) {
        a *= rot;
    }
    return StateVector::from_amplitudes(std::move(out), state.sites());
}

StateVector random_state(std::vector<SiteId> sites, Rng &rng)
{
    std::vector<Complex> amps(std::size_t{1} << sites.size());
    for (auto &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = Complex{re, im};
    }
    StateVector s = StateVector::from_amplitudes(std::move(amps), std::move(sites));
    s.normalize();
    return s;
}

} // namespace qmbqc
