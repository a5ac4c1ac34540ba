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

#include "qmbqc/circuit.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "qmbqc/errors.hpp"

namespace qmbqc {

std::string_view to_string(GateKind kind)
{
    switch (kind) {
    case GateKind::X:
        return "X";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::Toffoli:
        return "Toffoli";
    }
    return "?";
}

GateKind gate_kind_from_string(std::string_view name)
{
    if (name == "X") {
        return GateKind::X;
    }
    if (name == "CNOT") {
        return GateKind::CNOT;
    }
    if (name == "Toffoli") {
        return GateKind::Toffoli;
    }
    throw InvalidInput(fmt::format("unknown gate kind '{}'", name));
}

Gate::Gate(GateKind kind, std::initializer_list<Qubit> operands)
    : Gate(kind, std::span<const Qubit>(operands.begin(), operands.size()))
{
}

Gate::Gate(GateKind kind, std::span<const Qubit> operands) : kind_(kind)
{
    if (operands.size() != arity(kind)) {
        throw InvalidInput(fmt::format("{} takes {} operands, got {}", to_string(kind), arity(kind),
                                       operands.size()));
    }
    for (std::size_t i = 0; i < operands.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (operands[i] == operands[j]) {
                throw InvalidInput(fmt::format("{} operands must be distinct", to_string(kind)));
            }
        }
        operands_[i] = operands[i];
    }
}

bool Gate::touches(Qubit q) const
{
    auto ops = operands();
    return std::find(ops.begin(), ops.end(), q) != ops.end();
}

Circuit::Circuit(std::size_t width) : width_(width)
{
    registers_.ancilla.resize(width);
    for (std::size_t i = 0; i < width; ++i) {
        registers_.ancilla[i] = static_cast<Qubit>(i);
    }
}

Circuit::Circuit(std::size_t width, Registers registers) : width_(width), registers_(std::move(registers))
{
    std::vector<std::uint8_t> seen(width, 0);
    auto mark = [&](const std::vector<Qubit> &reg, std::string_view name) {
        for (Qubit q : reg) {
            if (q >= width) {
                throw InvalidInput(fmt::format("register {} index {} outside width {}", name, q, width));
            }
            if (seen[q]++) {
                throw InvalidInput(fmt::format("qubit {} assigned to more than one register", q));
            }
        }
    };
    mark(registers_.a, "a");
    mark(registers_.b, "b");
    mark(registers_.z, "z");
    mark(registers_.ancilla, "ancilla");
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw InvalidInput("registers do not cover every qubit");
    }
}

void Circuit::add(const Gate &gate)
{
    for (Qubit q : gate.operands()) {
        if (q >= width_) {
            throw InvalidInput(fmt::format("gate operand {} outside width {}", q, width_));
        }
    }
    gates_.push_back(gate);
}

std::size_t Circuit::count(GateKind kind) const
{
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate &g) { return g.kind() == kind; }));
}

Circuit Circuit::slice(std::size_t begin, std::size_t end) const
{
    if (begin > end || end > gates_.size()) {
        throw InvalidInput(fmt::format("slice [{}, {}) outside {} gates", begin, end, gates_.size()));
    }
    Circuit out(width_, registers_);
    out.gates_.assign(gates_.begin() + static_cast<std::ptrdiff_t>(begin),
                      gates_.begin() + static_cast<std::ptrdiff_t>(end));
    return out;
}

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
{
    for (auto &b : bits_) {
        if (b > 1) {
            throw InvalidInput("bit values must be 0 or 1");
        }
    }
}

Bitstring Bitstring::parse(std::string_view text)
{
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw InvalidInput(fmt::format("invalid bit character '{}'", c));
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Bitstring(std::move(bits));
}

std::uint64_t Bitstring::read(std::span<const Qubit> indices) const
{
    if (indices.size() > 64) {
        throw InvalidInput("register wider than 64 bits");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (bits_.at(indices[i])) {
            v |= std::uint64_t{1} << i;
        }
    }
    return v;
}

void Bitstring::write(std::span<const Qubit> indices, std::uint64_t value)
{
    for (std::size_t i = 0; i < indices.size(); ++i) {
        bits_.at(indices[i]) = (i < 64 && ((value >> i) & 1U)) ? 1 : 0;
    }
}

std::string Bitstring::to_string() const
{
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

void classical_apply(std::span<const Gate> gates, std::span<std::uint8_t> bits)
{
    for (const Gate &g : gates) {
        auto ops = g.operands();
        switch (g.kind()) {
        case GateKind::X:
            bits[ops[0]] ^= 1;
            break;
        case GateKind::CNOT:
            bits[ops[1]] ^= bits[ops[0]];
            break;
        case GateKind::Toffoli:
            bits[ops[2]] ^= bits[ops[0]] & bits[ops[1]];
            break;
        }
    }
}

Bitstring classical_eval(const Circuit &circuit, const Bitstring &input)
{
    if (input.size() != circuit.width()) {
        throw InvalidInput(
            fmt::format("input has {} bits but circuit width is {}", input.size(), circuit.width()));
    }
    std::vector<std::uint8_t> bits(input.bits().begin(), input.bits().end());
    classical_apply(circuit.gates(), bits);
    return Bitstring(std::move(bits));
}

void apply_gate(StateVector &state, const Gate &gate)
{
    auto ops = gate.operands();
    switch (gate.kind()) {
    case GateKind::X:
        state.apply_x(ops[0]);
        break;
    case GateKind::CNOT:
        state.apply_cnot(ops[0], ops[1]);
        break;
    case GateKind::Toffoli:
        state.apply_toffoli(ops[0], ops[1], ops[2]);
        break;
    }
}

StateVector statevector_eval(const Circuit &circuit, const Bitstring &input, std::size_t qubit_limit)
{
    if (input.size() != circuit.width()) {
        throw InvalidInput(
            fmt::format("input has {} bits but circuit width is {}", input.size(), circuit.width()));
    }
    StateVector state = StateVector::basis(input.bits(), qubit_limit);
    for (const Gate &g : circuit.gates()) {
        apply_gate(state, g);
    }
    return state;
}

Circuit invert(const Circuit &circuit)
{
    Circuit out = circuit.slice(0, 0);
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        out.add(*it);
    }
    return out;
}

} // namespace qmbqc
