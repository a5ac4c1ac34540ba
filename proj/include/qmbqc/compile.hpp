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
#include <string>
#include <string_view>
#include <vector>

#include "qmbqc/adders.hpp"
#include "qmbqc/circuit.hpp"

namespace qmbqc {

/// MBQC time steps for one layer of Clifford gates (wires and swaps included).
inline constexpr int kCliffordSteps = 1;
/// MBQC time steps for a layer containing Toffoli gates.
inline constexpr int kToffoliSteps = 2;
/// Lattice rows between adjacent logical rails.
inline constexpr std::size_t kRailPitch = 4;

/// Stable hash of a circuit's width and gate list.
std::uint64_t circuit_fingerprint(const Circuit &circuit);

struct ScheduleRound {
    std::vector<std::size_t> gates; // indices into the circuit's gate list
    bool toffoli = false;
    int steps = kCliffordSteps;
};

struct Schedule {
    std::vector<ScheduleRound> rounds;
    int total_steps = 0;
    std::uint64_t fingerprint = 0;
};

/// Greedy as-soon-as-possible layering.
///
/// A gate goes to the first layer after every earlier gate sharing a qubit
/// with it, skipping layers of the other kind: Toffoli layers never hold
/// Clifford gates and vice versa. Gates in one layer have disjoint supports.
Schedule schedule(const Circuit &circuit);
Schedule schedule(const LabeledCircuit &circuit);

/// Replays the schedule layer by layer; used to check it preserves semantics.
Bitstring replay(const Circuit &circuit, const Schedule &sched, const Bitstring &input);

struct PlacementOptions {
    /// Lattice columns consumed per rail for each MBQC time step.
    std::size_t band_width = 4;
};

struct BoxLayer {
    std::size_t column = 0; // first lattice column
    int steps = kCliffordSteps;
    std::vector<std::vector<Qubit>> supports;
};

/// One labelled round of the circuit on the lattice. Boxes span every row.
struct BoxRegion {
    RoundLabel label;
    std::size_t column_begin = 0;
    std::size_t column_end = 0; // exclusive
    int steps = 0;
    std::vector<BoxLayer> layers;

    std::size_t width() const { return column_end - column_begin; }
};

/// Rails on a Manhattan lattice: logical qubit q runs along row 4q.
/// Column 0 holds the input sites; round boxes tile the columns after it,
/// left to right in circuit order.
struct Layout {
    std::size_t width = 0;  // columns
    std::size_t height = 0; // rows, 4 (Q - 1) + 1
    std::size_t band_width = 4;
    std::size_t bit_width = 0; // size of the a register
    std::vector<std::size_t> rail_rows;
    std::vector<BoxRegion> boxes;
    Qubit highlighted = 0;
    std::uint64_t fingerprint = 0;

    std::size_t logical_qubits() const { return rail_rows.size(); }
};

/// Throws ContractError for unlabeled circuits or circuits without qubits.
Layout place(const LabeledCircuit &circuit, const PlacementOptions &options = {});

struct ResourceEstimate {
    std::size_t n = 0;
    std::size_t logical_qubits = 0;
    std::size_t lattice_sites = 0;
    int mbqc_depth = 0;
};

/// Sites are height x width of the layout; depth is the scheduled step
/// count. Throws ContractError when the two derive from different circuits.
ResourceEstimate count_resources(const Layout &layout, const Schedule &sched);

enum class RenderFormat { Ascii, Svg };

/// "ascii" or "svg"; throws UsageError otherwise.
RenderFormat render_format_from_string(std::string_view name);

/// Deterministic drawing of a layout.
///
/// ASCII: two staggered header rows of round labels, then the lattice
/// framed by '+', '-' and '|' box borders. Inside, one character per site:
/// '-' rail, '·' unused, '#' measured. The highlighted qubit's rail uses '='
/// and '@'.
std::string render_layout(const Layout &layout, RenderFormat format);

struct CompiledAdder {
    LabeledCircuit circuit;
    Layout layout;
    Schedule sched;
    ResourceEstimate estimate;
};

CompiledAdder compile_adder(AdderKind kind, std::size_t n, const PlacementOptions &options = {});

} // namespace qmbqc
