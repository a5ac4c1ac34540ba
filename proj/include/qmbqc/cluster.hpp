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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qmbqc/rng.hpp"
#include "qmbqc/state_vector.hpp"

namespace qmbqc {

using Edge = std::pair<SiteId, SiteId>;

/// Graph state description: vertices, undirected edges and one sign bit per
/// vertex. The state is CZ on every edge applied to |+>^V, followed by Z on
/// each vertex whose sign bit is set.
class GraphState {
public:
    /// Throws InvalidInput on self-loops, unknown endpoints, duplicate
    /// vertices or a sign vector of the wrong length. An empty sign vector
    /// means all zero.
    GraphState(std::vector<SiteId> vertices, std::vector<Edge> edges, std::vector<std::uint8_t> signs = {});

    /// rows x cols Manhattan lattice; site (r, c) has id r * cols + c.
    static GraphState lattice(std::size_t rows, std::size_t cols);

    const std::vector<SiteId> &vertices() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<std::uint8_t> &signs() const { return signs_; }
    std::size_t size() const { return vertices_.size(); }

    bool contains(SiteId v) const;
    std::size_t index_of(SiteId v) const;
    std::uint8_t sign(SiteId v) const { return signs_[index_of(v)]; }
    std::vector<SiteId> neighbors(SiteId v) const;
    bool adjacent(SiteId u, SiteId v) const;

private:
    std::vector<SiteId> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> signs_;
};

/// Statevector of the graph state; positions follow g.vertices().
/// Throws CapacityError above the qubit limit.
StateVector build_cluster(const GraphState &g, std::size_t qubit_limit = kDefaultQubitLimit);

/// X on site a, Z on every neighbour.
StateVector apply_correlation_operator(const StateVector &state, const GraphState &g, SiteId a);

/// +1 or -1 when the state is an eigenstate of the site-a correlation
/// operator within tolerance, otherwise nullopt. Throws InvalidInput when
/// the state does not cover exactly the graph's vertices.
std::optional<int> verify_correlation(const StateVector &state, const GraphState &g, SiteId a,
                                      double tolerance = 1e-10);

/// Single-qubit measurement basis. X and Y are the XY-plane angles 0 and pi/2.
class MeasurementBasis {
public:
    enum class Kind { X, Y, Z, XY };

    static MeasurementBasis x() { return {Kind::X, 0.0}; }
    static MeasurementBasis y();
    static MeasurementBasis z() { return {Kind::Z, 0.0}; }
    /// Throws InvalidInput for non-finite angles.
    static MeasurementBasis xy(double angle);

    Kind kind() const { return kind_; }
    /// XY-plane angle; meaningless for Z.
    double angle() const { return angle_; }
    bool in_xy_plane() const { return kind_ != Kind::Z; }
    /// True for X, Y and XY angles that are multiples of pi/2.
    bool is_pauli() const;

    /// Basis vector (c0, c1) for outcome 0 or 1.
    std::array<Complex, 2> vector(int outcome) const;

    /// Same measurement up to relabelling X <-> XY(0), Y <-> XY(pi/2) and
    /// angle wrap-around.
    bool equivalent(const MeasurementBasis &other, double tolerance = 1e-12) const;

private:
    MeasurementBasis(Kind kind, double angle) : kind_(kind), angle_(angle) {}

    Kind kind_;
    double angle_;
};

/// Where measurement outcomes come from: Born-rule sampling or a forced list.
class OutcomeSource {
public:
    static OutcomeSource random(std::uint64_t seed);
    static OutcomeSource forced(std::vector<std::uint8_t> outcomes);

    /// Picks the next outcome given the probability of outcome 0. Forced
    /// outcomes with probability below 1e-12 throw ImpossibleBranch.
    int next(double p0);

    bool is_forced() const { return forced_; }

private:
    OutcomeSource() = default;

    bool forced_ = false;
    Rng rng_;
    std::vector<std::uint8_t> outcomes_;
    std::size_t cursor_ = 0;
};

struct MeasurementResult {
    int outcome = 0;
    double probability = 0.0;
};

/// Probabilities of outcomes 0 and 1 for measuring a site in a basis.
std::array<double, 2> outcome_probabilities(const StateVector &state, SiteId site, const MeasurementBasis &basis);

/// Measures a site, removes it from the state and renormalizes the rest.
/// Throws ContractError when the site is not (or no longer) in the state.
MeasurementResult measure_site(StateVector &state, SiteId site, const MeasurementBasis &basis,
                               OutcomeSource &source);

/// Overall phase fixed so the first amplitude larger than half the maximum
/// magnitude is real positive.
StateVector canonical_phase(const StateVector &state);

/// Haar-random pure state on the given sites.
StateVector random_state(std::vector<SiteId> sites, Rng &rng);

} // namespace qmbqc
