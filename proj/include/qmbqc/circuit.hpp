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
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmbqc/state_vector.hpp"

namespace qmbqc {

using Qubit = std::uint32_t;

enum class GateKind { X, CNOT, Toffoli };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/// Number of operands a gate of this kind takes.
constexpr std::size_t arity(GateKind kind)
{
    switch (kind) {
    case GateKind::X:
        return 1;
    case GateKind::CNOT:
        return 2;
    case GateKind::Toffoli:
        return 3;
    }
    return 0;
}

/// Reversible gate. Operands are controls first, target last.
class Gate {
public:
    Gate(GateKind kind, std::initializer_list<Qubit> operands);
    Gate(GateKind kind, std::span<const Qubit> operands);

    static Gate x(Qubit target) { return Gate(GateKind::X, {target}); }
    static Gate cnot(Qubit control, Qubit target) { return Gate(GateKind::CNOT, {control, target}); }
    static Gate toffoli(Qubit c0, Qubit c1, Qubit target) { return Gate(GateKind::Toffoli, {c0, c1, target}); }

    GateKind kind() const { return kind_; }
    std::size_t size() const { return arity(kind_); }
    std::span<const Qubit> operands() const { return {operands_.data(), size()}; }
    std::span<const Qubit> controls() const { return {operands_.data(), size() - 1}; }
    Qubit target() const { return operands_[size() - 1]; }
    bool is_clifford() const { return kind_ != GateKind::Toffoli; }
    bool touches(Qubit q) const;

    friend bool operator==(const Gate &, const Gate &) = default;

private:
    GateKind kind_;
    std::array<Qubit, 3> operands_{};
};

/// Role-tagged qubit index sets.
struct Registers {
    std::vector<Qubit> a;
    std::vector<Qubit> b;
    std::vector<Qubit> z;
    std::vector<Qubit> ancilla;

    friend bool operator==(const Registers &, const Registers &) = default;
};

/// Ordered list of reversible gates over a fixed number of qubits.
class Circuit {
public:
    /// Circuit whose qubits are all ancillas.
    explicit Circuit(std::size_t width);
    /// Throws InvalidInput unless the registers partition [0, width).
    Circuit(std::size_t width, Registers registers);

    std::size_t width() const { return width_; }
    const Registers &registers() const { return registers_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Appends a gate; throws InvalidInput on out-of-range or repeated operands.
    void add(const Gate &gate);

    std::size_t count(GateKind kind) const;

    /// Gates [begin, end) over the same registers.
    Circuit slice(std::size_t begin, std::size_t end) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

private:
    std::size_t width_;
    Registers registers_;
    std::vector<Gate> gates_;
};

/// Fixed-length bit sequence; index 0 is the least-significant bit of its
/// register and is printed leftmost.
class Bitstring {
public:
    Bitstring() = default;
    explicit Bitstring(std::size_t length) : bits_(length, 0) {}
    explicit Bitstring(std::vector<std::uint8_t> bits);

    /// Parses "0110..." (index 0 first). Throws InvalidInput on other characters.
    static Bitstring parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }
    std::span<const std::uint8_t> bits() const { return bits_; }

    /// Little-endian value of the bits at the given indices (at most 64).
    std::uint64_t read(std::span<const Qubit> indices) const;
    /// Writes the low indices.size() bits of value, little-endian.
    void write(std::span<const Qubit> indices, std::uint64_t value);

    std::string to_string() const;

    friend bool operator==(const Bitstring &, const Bitstring &) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Applies every gate in order to a basis state.
Bitstring classical_eval(const Circuit &circuit, const Bitstring &input);

/// In-place variant over a raw bit buffer, for hot verification loops.
void classical_apply(std::span<const Gate> gates, std::span<std::uint8_t> bits);

/// Evolves the basis state |input> through the circuit as a state vector.
StateVector statevector_eval(const Circuit &circuit, const Bitstring &input,
                             std::size_t qubit_limit = kDefaultQubitLimit);

/// Applies one gate to a state whose positions are the circuit's qubits.
void apply_gate(StateVector &state, const Gate &gate);

/// Reverses gate order. Every gate in the set is self-inverse.
Circuit invert(const Circuit &circuit);

} // namespace qmbqc
