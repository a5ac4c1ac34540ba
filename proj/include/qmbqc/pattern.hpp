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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "qmbqc/cluster.hpp"

namespace qmbqc {

/// XOR of the outcomes of a set of measured sites. Kept sorted and unique.
using Parity = std::vector<SiteId>;

/// Symmetric difference, in place.
void toggle(Parity &acc, const Parity &other);

/// Measured angle is (-1)^{s} * angle + t * pi, where s and t are the
/// parities of the listed outcomes.
struct AdaptRule {
    Parity s_domain;
    Parity t_domain;

    bool empty() const { return s_domain.empty() && t_domain.empty(); }
    friend bool operator==(const AdaptRule &, const AdaptRule &) = default;
};

struct PatternMeasurement {
    SiteId site = 0;
    int round = 1;
    MeasurementBasis basis = MeasurementBasis::x();
    AdaptRule adapt;
};

/// Byproduct X^{parity(x)} Z^{parity(z)} left on an output site.
struct OutputCorrection {
    SiteId site = 0;
    Parity x_domain;
    Parity z_domain;
};

/// A measurement pattern over an open graph.
///
/// All non-input sites start in |+>, every edge is entangled with CZ, and
/// measured sites are processed round by round. Output sites stay
/// unmeasured and carry the byproducts listed in corrections.
struct MeasurementPattern {
    std::string name;
    std::vector<SiteId> sites;
    std::vector<Edge> edges;
    std::vector<SiteId> inputs;
    std::vector<SiteId> outputs;
    std::vector<PatternMeasurement> measurements;
    std::vector<OutputCorrection> corrections; // parallel to outputs

    int rounds() const;
    GraphState graph() const;

    /// Throws ContractError unless rounds are contiguous from 1, adaptive
    /// rules only reference strictly earlier rounds, and the site roles are
    /// consistent.
    void validate() const;

    /// Basis to measure given the outcomes recorded so far.
    MeasurementBasis resolve_basis(const PatternMeasurement &m, const std::map<SiteId, int> &outcomes) const;
};

enum class Pauli { X, Z };

struct Byproduct {
    SiteId site;
    Pauli pauli;
};

/// Builds patterns from measurements and the byproducts they leave behind.
///
/// For each measurement the caller gives the ideal basis and the Pauli
/// byproduct a 1 outcome leaves on not-yet-measured sites. build() then
/// tracks accumulated byproducts symbolically. Pauli measurements absorb
/// them by reinterpreting outcomes and stay fixed in round 1; other angles
/// become adaptive and land one round after their latest dependency.
class PatternBuilder {
public:
    explicit PatternBuilder(std::string name) { pattern_.name = std::move(name); }

    SiteId add_site();
    void add_input(SiteId site) { pattern_.inputs.push_back(site); }
    void add_output(SiteId site) { pattern_.outputs.push_back(site); }
    void entangle(SiteId u, SiteId v) { pattern_.edges.emplace_back(u, v); }
    void measure(SiteId site, MeasurementBasis ideal, std::vector<Byproduct> on_one);

    /// Throws ContractError when a byproduct targets an already-measured site.
    MeasurementPattern build() const;

private:
    struct Step {
        SiteId site;
        MeasurementBasis ideal;
        std::vector<Byproduct> on_one;
    };

    MeasurementPattern pattern_;
    std::vector<Step> steps_;
};

enum class PatternGate { Wire, Hadamard, Cnot };

/// Linear chain of `length` sites measured in X; implements H^(length-1).
MeasurementPattern wire_pattern(std::size_t length);
/// Two-site chain implementing H.
MeasurementPattern hadamard_pattern();
/// Four-site pattern; inputs (control, target), outputs (control, target').
MeasurementPattern cnot_pattern();
MeasurementPattern pattern_for_gate(PatternGate gate, std::size_t wire_length = 5);

/// Doubly-controlled phase on three logical sites in two rounds.
///
/// The phase (-1)^{x0 x1 x2} is split into seven parity phases
/// exp(i pi/4 * c_S * parity_S(x)), c_S = +1 for odd |S| and -1 otherwise.
/// Each parity is a gadget: a site g joined to the qubits of S and a leaf h
/// joined to g. Round 1 measures every g in X; round 2 measures every h in
/// the XY plane at +-pi/4, the sign set by the outcome of its g.
MeasurementPattern toffoli_phase_pattern();

/// Output bit-flip and phase-flip exponents, one entry per output site.
struct PauliFrame {
    std::vector<SiteId> sites;
    std::vector<std::uint8_t> x;
    std::vector<std::uint8_t> z;

    bool trivial() const;
    /// Exponent-wise XOR; sites must match.
    PauliFrame compose(const PauliFrame &other) const;
    /// Applies the inverse byproduct Z^z X^x to a state over the same sites.
    void correct(StateVector &state) const;
};

struct PatternRun {
    StateVector output; // positions follow pattern.outputs, uncorrected
    PauliFrame frame;
    std::map<SiteId, int> outcomes;
    std::vector<MeasurementBasis> bases; // as measured, in execution order
};

/// Executes the pattern on a graph and an input state over the pattern's
/// input sites (positions in input order).
///
/// The graph restricted to the pattern's sites must have exactly the
/// pattern's edges and all sign bits zero. Throws ContractError otherwise,
/// CapacityError when the pattern exceeds the qubit limit.
PatternRun run_pattern(const GraphState &g, const MeasurementPattern &p, const StateVector &input,
                       OutcomeSource &source, std::size_t qubit_limit = kDefaultQubitLimit);

/// run_pattern followed by frame correction.
StateVector run_corrected(const MeasurementPattern &p, const StateVector &input, OutcomeSource &source);

nlohmann::json to_json(const MeasurementPattern &p);
MeasurementPattern pattern_from_json(const nlohmann::json &j);

} // namespace qmbqc
