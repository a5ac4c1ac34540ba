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

#include "qmbqc/circuit_io.hpp"

#include <fstream>

#include <fmt/format.h>

#include "qmbqc/errors.hpp"

namespace qmbqc {

nlohmann::json to_json(const Circuit &circuit, std::span<const RoundLabel> labels)
{
    if (!labels.empty() && labels.size() != circuit.size()) {
        throw InvalidInput("label count does not match gate count");
    }
    const Registers &r = circuit.registers();
    nlohmann::json gates = nlohmann::json::array();
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate &g = circuit.gates()[i];
        auto ops = g.operands();
        nlohmann::json jg{{"kind", std::string(to_string(g.kind()))},
                          {"qubits", std::vector<Qubit>(ops.begin(), ops.end())}};
        if (!labels.empty()) {
            jg["round"] = labels[i].name();
        }
        gates.push_back(std::move(jg));
    }
    return {{"width", circuit.width()},
            {"registers", {{"a", r.a}, {"b", r.b}, {"z", r.z}, {"ancilla", r.ancilla}}},
            {"gates", std::move(gates)}};
}

nlohmann::json to_json(const LabeledCircuit &circuit) { return to_json(circuit.circuit, circuit.labels); }

LabeledCircuit circuit_from_json(const nlohmann::json &j)
{
    try {
        auto width = j.at("width").get<std::size_t>();
        Registers regs;
        const auto &jr = j.at("registers");
        regs.a = jr.value("a", std::vector<Qubit>{});
        regs.b = jr.value("b", std::vector<Qubit>{});
        regs.z = jr.value("z", std::vector<Qubit>{});
        regs.ancilla = jr.value("ancilla", std::vector<Qubit>{});
        LabeledCircuit out{Circuit(width, std::move(regs)), {}};

        const auto &gates = j.at("gates");
        std::size_t labelled = 0;
        for (const auto &jg : gates) {
            auto qubits = jg.at("qubits").get<std::vector<Qubit>>();
            out.circuit.add(Gate(gate_kind_from_string(jg.at("kind").get<std::string>()), qubits));
            if (jg.contains("round")) {
                out.labels.push_back(RoundLabel::parse(jg.at("round").get<std::string>()));
                ++labelled;
            }
        }
        if (labelled != 0 && labelled != out.circuit.size()) {
            throw InvalidInput(fmt::format("{} of {} gates carry a round label", labelled, out.circuit.size()));
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(fmt::format("malformed circuit JSON: {}", e.what()));
    }
}

LabeledCircuit read_circuit(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput(fmt::format("cannot open {}", path.string()));
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(fmt::format("{}: {}", path.string(), e.what()));
    }
    return circuit_from_json(j);
}

void write_circuit(const std::filesystem::path &path, const LabeledCircuit &circuit)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error(fmt::format("cannot write {}", path.string()));
    }
    out << to_json(circuit).dump(1) << '\n';
    if (!out) {
        throw std::runtime_error(fmt::format("write to {} failed", path.string()));
    }
}

} // namespace qmbqc
