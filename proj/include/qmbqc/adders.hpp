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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmbqc/circuit.hpp"

namespace qmbqc {

/// Network phases, in the order they appear in a generated adder.
enum class Phase { Init, P, G, C, InverseP, Sum };

std::string_view to_string(Phase phase);

/// Which round of which network a gate belongs to.
struct RoundLabel {
    Phase phase = Phase::Init;
    int level = 0;

    /// Throws InvalidInput when the level is not valid for the phase.
    static RoundLabel make(Phase phase, int level);

    /// "Init", "P1", "G3", "C2", "InverseP1", "Sum".
    std::string name() const;
    /// Inverse of name().
    static RoundLabel parse(std::string_view text);

    friend bool operator==(const RoundLabel &, const RoundLabel &) = default;
};

/// A circuit in which every gate carries the round it belongs to.
struct LabeledCircuit {
    Circuit circuit;
    std::vector<RoundLabel> labels;

    /// Throws ContractError unless every gate has a label and phases are
    /// non-decreasing along the gate list.
    void check() const;
};

/// Out-of-place carry-lookahead adder: |a, b, 0, 0> -> |a, b, a+b, 0>.
///
/// Register layout: a = [0, n), b = [n, 2n), z = [2n, 3n+1), followed by one
/// ancilla per span-propagate value P_t[m], t = 1..floor(log2 n),
/// m = 0..floor(n / 2^t) - 1, allocated round by round.
///
/// Phases:
///   Init      z[i+1] ^= a_i & b_i, then b_i ^= a_i (b now holds p_i)
///   P t       P_t[m] = P_{t-1}[2m] & P_{t-1}[2m+1], with P_0 = b
///   G t       z[2^t m + 2^t] ^= z[2^t m + 2^{t-1}] & P_{t-1}[2m+1]
///   C t       z[2^t m + 2^{t-1}] ^= z[2^t m] & P_{t-1}[2m], t descending
///   InverseP  P rounds replayed in reverse
///   Sum       z_i ^= b_i, then b_i ^= a_i
///
/// Throws DomainError for n == 0.
LabeledCircuit qcla_out_of_place(std::size_t n);

/// Ripple-carry adder with the same register contract as the QCLA.
///
/// Register layout: a = [0, n), b = [n, 2n), z = [2n, 3n+1), carry ancillas
/// c_1..c_{n-1} after that. The forward pass runs one carry cell per bit
/// (labelled C i+1); the carry out of the top bit lands in z_n directly. The
/// return pass (labelled Sum) writes each sum bit and uncomputes the carries.
///
/// Throws DomainError for n == 0.
LabeledCircuit vbe_ripple(std::size_t n);

enum class AdderKind { Qcla, Vbe };

/// "qcla" or "vbe"; throws UsageError otherwise.
AdderKind adder_kind_from_string(std::string_view name);
std::string_view to_string(AdderKind kind);

LabeledCircuit generate_adder(AdderKind kind, std::size_t n);

/// Consecutive runs of equally-labelled gates, in circuit order.
std::vector<std::pair<RoundLabel, std::size_t>> round_structure(const LabeledCircuit &c);

/// Number of distinct rounds of the given phase in a round structure.
std::size_t count_rounds(const std::vector<std::pair<RoundLabel, std::size_t>> &structure, Phase phase);

/// floor(log2 n) for n >= 1.
int floor_log2(std::size_t n);

} // namespace qmbqc
