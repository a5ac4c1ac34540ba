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

#include <filesystem>
#include <span>

#include "json.hpp"

#include "qmbqc/adders.hpp"
#include "qmbqc/circuit.hpp"

namespace qmbqc {

// Circuit interchange format:
//
//   { "width": 7,
//     "registers": {"a": [0], "b": [1], "z": [2, 3], "ancilla": []},
//     "gates": [{"kind": "Toffoli", "qubits": [0, 1, 3], "round": "Init"}, ...] }
//
// Gates apply in array order. "round" is optional, but when present it must
// be present on every gate.

nlohmann::json to_json(const Circuit &circuit, std::span<const RoundLabel> labels = {});
nlohmann::json to_json(const LabeledCircuit &circuit);

/// Labels are left empty when the document carries none.
/// Throws InvalidInput on malformed documents.
LabeledCircuit circuit_from_json(const nlohmann::json &j);

LabeledCircuit read_circuit(const std::filesystem::path &path);
void write_circuit(const std::filesystem::path &path, const LabeledCircuit &circuit);

} // namespace qmbqc
