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

#include "qmbqc/compile.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "qmbqc/errors.hpp"

namespace qmbqc {

std::uint64_t circuit_fingerprint(const Circuit &circuit)
{
    // FNV-1a, 64 bit.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(circuit.width());
    for (const Gate &g : circuit.gates()) {
        mix(static_cast<std::uint64_t>(g.kind()));
        for (Qubit q : g.operands()) {
            mix(q);
        }
    }
    return h;
}

namespace {

std::vector<ScheduleRound> layer_gates(const Circuit &circuit, std::size_t begin, std::size_t end)
{
    std::vector<ScheduleRound> layers;
    std::vector<long> last(circuit.width(), -1);
    for (std::size_t i = begin; i < end; ++i) {
        const Gate &g = circuit.gates()[i];
        long earliest = 0;
        for (Qubit q : g.operands()) {
            earliest = std::max(earliest, last[q] + 1);
        }
        const bool toffoli = !g.is_clifford();
        auto k = static_cast<std::size_t>(earliest);
        while (k < layers.size() && layers[k].toffoli != toffoli) {
            ++k;
        }
        if (k == layers.size()) {
            layers.push_back({{}, toffoli, toffoli ? kToffoliSteps : kCliffordSteps});
        }
        layers[k].gates.push_back(i);
        for (Qubit q : g.operands()) {
            last[q] = static_cast<long>(k);
        }
    }
    return layers;
}

int total_steps(const std::vector<ScheduleRound> &layers)
{
    int steps = 0;
    for (const auto &l : layers) {
        steps += l.steps;
    }
    return steps;
}

} // namespace

Schedule schedule(const Circuit &circuit)
{
    Schedule s;
    s.rounds = layer_gates(circuit, 0, circuit.size());
    s.total_steps = total_steps(s.rounds);
    s.fingerprint = circuit_fingerprint(circuit);
    return s;
}

Schedule schedule(const LabeledCircuit &circuit) { return schedule(circuit.circuit); }

Bitstring replay(const Circuit &circuit, const Schedule &sched, const Bitstring &input)
{
    if (sched.fingerprint != circuit_fingerprint(circuit)) {
        throw ContractError("schedule was built for a different circuit");
    }
    if (input.size() != circuit.width()) {
        throw InvalidInput("input width does not match circuit");
    }
    std::vector<std::uint8_t> bits(input.bits().begin(), input.bits().end());
    for (const auto &round : sched.rounds) {
        for (std::size_t gi : round.gates) {
            classical_apply(std::span<const Gate>(&circuit.gates()[gi], 1), bits);
        }
    }
    return Bitstring(std::move(bits));
}

Layout place(const LabeledCircuit &circuit, const PlacementOptions &options)
{
    circuit.check();
    const Circuit &c = circuit.circuit;
    if (c.width() == 0) {
        throw ContractError("cannot place a circuit without qubits");
    }
    if (options.band_width == 0) {
        throw InvalidInput("band width must be positive");
    }

    Layout layout;
    layout.band_width = options.band_width;
    layout.bit_width = c.registers().a.size();
    layout.height = kRailPitch * (c.width() - 1) + 1;
    layout.fingerprint = circuit_fingerprint(c);
    for (std::size_t q = 0; q < c.width(); ++q) {
        layout.rail_rows.push_back(kRailPitch * q);
    }

    std::vector<std::size_t> uses(c.width(), 0);
    for (const Gate &g : c.gates()) {
        for (Qubit q : g.operands()) {
            ++uses[q];
        }
    }
    layout.highlighted = static_cast<Qubit>(std::max_element(uses.begin(), uses.end()) - uses.begin());

    std::size_t column = 1; // column 0 holds the inputs
    std::size_t begin = 0;
    for (const auto &[label, count] : round_structure(circuit)) {
        const std::size_t end = begin + count;
        BoxRegion box;
        box.label = label;
        box.column_begin = column;
        for (const ScheduleRound &round : layer_gates(c, begin, end)) {
            BoxLayer layer;
            layer.column = column;
            layer.steps = round.steps;
            for (std::size_t gi : round.gates) {
                auto ops = c.gates()[gi].operands();
                layer.supports.emplace_back(ops.begin(), ops.end());
            }
            column += options.band_width * static_cast<std::size_t>(round.steps);
            box.steps += round.steps;
            box.layers.push_back(std::move(layer));
        }
        box.column_end = column;
        layout.boxes.push_back(std::move(box));
        begin = end;
    }
    layout.width = column;
    return layout;
}

ResourceEstimate count_resources(const Layout &layout, const Schedule &sched)
{
    if (layout.fingerprint != sched.fingerprint) {
        throw ContractError("layout and schedule were derived from different circuits");
    }
    ResourceEstimate e;
    e.n = layout.bit_width;
    e.logical_qubits = layout.logical_qubits();
    e.lattice_sites = layout.height * layout.width;
    e.mbqc_depth = sched.total_steps;
    return e;
}

RenderFormat render_format_from_string(std::string_view name)
{
    if (name == "ascii") {
        return RenderFormat::Ascii;
    }
    if (name == "svg") {
        return RenderFormat::Svg;
    }
    throw UsageError(fmt::format("unsupported layout format '{}'", name));
}

namespace {

constexpr char kUnused = '.'; // rendered as U+00B7

std::vector<std::string> site_grid(const Layout &layout)
{
    const std::size_t hl_row = layout.rail_rows[layout.highlighted];
    std::vector<std::string> grid(layout.height, std::string(layout.width, kUnused));
    for (std::size_t row : layout.rail_rows) {
        std::fill(grid[row].begin(), grid[row].end(), row == hl_row ? '=' : '-');
    }
    auto mark = [&](std::size_t row, std::size_t col) { grid[row][col] = row == hl_row ? '@' : '#'; };

    for (const BoxRegion &box : layout.boxes) {
        for (const BoxLayer &layer : box.layers) {
            const std::size_t cols = layout.band_width * static_cast<std::size_t>(layer.steps);
            for (std::size_t k = 0; k < layer.supports.size(); ++k) {
                const auto &support = layer.supports[k];
                std::size_t lo = layout.height;
                std::size_t hi = 0;
                for (Qubit q : support) {
                    std::size_t row = layout.rail_rows[q];
                    lo = std::min(lo, row);
                    hi = std::max(hi, row);
                    for (std::size_t c = 0; c < cols; ++c) {
                        mark(row, layer.column + c);
                    }
                }
                // Stagger connectors so interleaved gates stay distinguishable.
                std::size_t inner = cols > 2 ? cols - 2 : 1;
                std::size_t col = layer.column + (cols > 2 ? 1 : 0) + k % inner;
                for (std::size_t row = lo; row <= hi; ++row) {
                    mark(row, col);
                }
            }
        }
    }
    return grid;
}

std::string render_ascii(const Layout &layout)
{
    // Segment 0 is the input column, then one per box.
    std::vector<std::pair<std::size_t, std::size_t>> segments{{0, 1}};
    for (const BoxRegion &box : layout.boxes) {
        segments.emplace_back(box.column_begin, box.column_end);
    }
    std::vector<std::size_t> offset; // text column where each segment starts
    std::size_t pos = 1;
    for (const auto &[b, e] : segments) {
        offset.push_back(pos);
        pos += (e - b) + 1;
    }
    const std::size_t line_width = pos;

    std::string out;
    std::string headers[2] = {std::string(line_width, ' '), std::string(line_width, ' ')};
    for (std::size_t i = 0; i < layout.boxes.size(); ++i) {
        std::string name = layout.boxes[i].label.name();
        std::string &h = headers[i % 2];
        std::size_t at = offset[i + 1];
        if (h.size() < at + name.size()) {
            h.resize(at + name.size(), ' ');
        }
        h.replace(at, name.size(), name);
    }
    for (auto &h : headers) {
        h.erase(h.find_last_not_of(' ') + 1);
        out += h;
        out += '\n';
    }

    std::string border(line_width, '-');
    for (std::size_t s = 0; s < segments.size(); ++s) {
        border[offset[s] - 1] = '+';
    }
    border[line_width - 1] = '+';

    auto grid = site_grid(layout);
    out += border + '\n';
    for (const std::string &row : grid) {
        std::string line;
        for (std::size_t s = 0; s < segments.size(); ++s) {
            line += '|';
            for (std::size_t c = segments[s].first; c < segments[s].second; ++c) {
                if (row[c] == kUnused) {
                    line += "·";
                } else {
                    line += row[c];
                }
            }
        }
        line += '|';
        out += line + '\n';
    }
    out += border + '\n';
    return out;
}

std::string render_svg(const Layout &layout)
{
    constexpr int cell = 10;
    constexpr int header = 30;
    const auto width = static_cast<int>(layout.width) * cell;
    const auto height = static_cast<int>(layout.height) * cell + header;
    const std::size_t hl_row = layout.rail_rows[layout.highlighted];

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n", width,
        height, width, height);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
    for (std::size_t row : layout.rail_rows) {
        int y = header + static_cast<int>(row) * cell + cell / 2;
        out += fmt::format("<line class=\"rail\" x1=\"0\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" "
                           "stroke-width=\"{}\"/>\n",
                           y, width, y, row == hl_row ? "gold" : "gray", row == hl_row ? 3 : 1);
    }
    for (const BoxRegion &box : layout.boxes) {
        int x = static_cast<int>(box.column_begin) * cell;
        out += fmt::format("<rect class=\"box\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                           "stroke=\"black\"/>\n",
                           x, header, static_cast<int>(box.width()) * cell, static_cast<int>(layout.height) * cell);
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\">{}</text>\n", x + 2,
                           header - 8, box.label.name());
        for (const BoxLayer &layer : box.layers) {
            const int cols = static_cast<int>(layout.band_width) * layer.steps;
            for (const auto &support : layer.supports) {
                std::size_t lo = layout.height;
                std::size_t hi = 0;
                bool highlighted = false;
                for (Qubit q : support) {
                    lo = std::min(lo, layout.rail_rows[q]);
                    hi = std::max(hi, layout.rail_rows[q]);
                    highlighted = highlighted || q == layout.highlighted;
                }
                out += fmt::format("<rect class=\"band\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" "
                                   "fill=\"{}\" fill-opacity=\"0.6\" stroke=\"black\"/>\n",
                                   static_cast<int>(layer.column) * cell, header + static_cast<int>(lo) * cell,
                                   cols * cell, static_cast<int>(hi - lo + 1) * cell,
                                   highlighted ? "yellow" : "steelblue");
            }
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace

std::string render_layout(const Layout &layout, RenderFormat format)
{
    if (layout.rail_rows.empty()) {
        throw ContractError("layout has no rails");
    }
    switch (format) {
    case RenderFormat::Ascii:
        return render_ascii(layout);
    case RenderFormat::Svg:
        return render_svg(layout);
    }
    throw UsageError("unsupported layout format");
}

CompiledAdder compile_adder(AdderKind kind, std::size_t n, const PlacementOptions &options)
{
    CompiledAdder out{generate_adder(kind, n), {}, {}, {}};
    out.layout = place(out.circuit, options);
    out.sched = schedule(out.circuit);
    out.estimate = count_resources(out.layout, out.sched);
    return out;
}

} // namespace qmbqc
