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

#include "qmbqc/adders.hpp"

#include <bit>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "qmbqc/errors.hpp"

namespace qmbqc {

std::string_view to_string(Phase phase)
{
    switch (phase) {
    case Phase::Init:
        return "Init";
    case Phase::P:
        return "P";
    case Phase::G:
        return "G";
    case Phase::C:
        return "C";
    case Phase::InverseP:
        return "InverseP";
    case Phase::Sum:
        return "Sum";
    }
    return "?";
}

RoundLabel RoundLabel::make(Phase phase, int level)
{
    bool leveled = phase != Phase::Init && phase != Phase::Sum;
    if (leveled ? level < 1 : level != 0) {
        throw InvalidInput(fmt::format("invalid level {} for phase {}", level, to_string(phase)));
    }
    return RoundLabel{phase, level};
}

std::string RoundLabel::name() const
{
    if (phase == Phase::Init || phase == Phase::Sum) {
        return std::string(to_string(phase));
    }
    return fmt::format("{}{}", to_string(phase), level);
}

RoundLabel RoundLabel::parse(std::string_view text)
{
    std::size_t split = text.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(text[split - 1]))) {
        --split;
    }
    std::string_view head = text.substr(0, split);
    std::string_view digits = text.substr(split);
    int level = 0;
    if (!digits.empty()) {
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), level);
        if (ec != std::errc{}) {
            throw InvalidInput(fmt::format("bad round label '{}'", text));
        }
    }
    for (Phase p : {Phase::Init, Phase::P, Phase::G, Phase::C, Phase::InverseP, Phase::Sum}) {
        if (head == to_string(p)) {
            return make(p, level);
        }
    }
    throw InvalidInput(fmt::format("bad round label '{}'", text));
}

void LabeledCircuit::check() const
{
    if (labels.size() != circuit.size()) {
        throw ContractError(
            fmt::format("circuit has {} gates but {} round labels", circuit.size(), labels.size()));
    }
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (labels[i].phase < labels[i - 1].phase) {
            throw ContractError(fmt::format("round label {} follows {} at gate {}", labels[i].name(),
                                            labels[i - 1].name(), i));
        }
    }
}

int floor_log2(std::size_t n)
{
    if (n == 0) {
        throw DomainError("floor_log2 of zero");
    }
    return static_cast<int>(std::bit_width(n)) - 1;
}

namespace {

Registers adder_registers(std::size_t n, std::size_t ancillas)
{
    Registers r;
    for (std::size_t i = 0; i < n; ++i) {
        r.a.push_back(static_cast<Qubit>(i));
        r.b.push_back(static_cast<Qubit>(n + i));
    }
    for (std::size_t i = 0; i <= n; ++i) {
        r.z.push_back(static_cast<Qubit>(2 * n + i));
    }
    for (std::size_t i = 0; i < ancillas; ++i) {
        r.ancilla.push_back(static_cast<Qubit>(3 * n + 1 + i));
    }
    return r;
}

class Emitter {
public:
    explicit Emitter(LabeledCircuit &out) : out_(out) {}

    void label(Phase phase, int level) { current_ = RoundLabel::make(phase, level); }

    void add(const Gate &g)
    {
        out_.circuit.add(g);
        out_.labels.push_back(current_);
    }

private:
    LabeledCircuit &out_;
    RoundLabel current_;
};

} // namespace

LabeledCircuit qcla_out_of_place(std::size_t n)
{
    if (n == 0) {
        throw DomainError("adder bit width must be at least 1");
    }
    const int levels = floor_log2(n);

    // span[t][m] is the qubit holding P_t[m]; P_0 lives in the b register.
    std::vector<std::vector<Qubit>> span(static_cast<std::size_t>(levels) + 1);
    for (std::size_t i = 0; i < n; ++i) {
        span[0].push_back(static_cast<Qubit>(n + i));
    }
    Qubit next = static_cast<Qubit>(3 * n + 1);
    for (int t = 1; t <= levels; ++t) {
        std::size_t count = n >> t;
        for (std::size_t m = 0; m < count; ++m) {
            span[t].push_back(next++);
        }
    }
    const std::size_t ancillas = next - (3 * n + 1);

    LabeledCircuit out{Circuit(3 * n + 1 + ancillas, adder_registers(n, ancillas)), {}};
    Emitter emit(out);
    const auto &reg = out.circuit.registers();
    auto a = [&](std::size_t i) { return reg.a[i]; };
    auto b = [&](std::size_t i) { return reg.b[i]; };
    auto z = [&](std::size_t i) { return reg.z[i]; };

    emit.label(Phase::Init, 0);
    for (std::size_t i = 0; i < n; ++i) {
        emit.add(Gate::toffoli(a(i), b(i), z(i + 1)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        emit.add(Gate::cnot(a(i), b(i)));
    }

    auto p_round = [&](int t) {
        for (std::size_t m = 0; m < span[t].size(); ++m) {
            emit.add(Gate::toffoli(span[t - 1][2 * m], span[t - 1][2 * m + 1], span[t][m]));
        }
    };

    for (int t = 1; t <= levels; ++t) {
        emit.label(Phase::P, t);
        p_round(t);
    }

    for (int t = 1; t <= levels; ++t) {
        emit.label(Phase::G, t);
        const std::size_t width = std::size_t{1} << t;
        for (std::size_t m = 0; m < (n >> t); ++m) {
            emit.add(Gate::toffoli(z(width * m + width / 2), span[t - 1][2 * m + 1], z(width * m + width)));
        }
    }

    // Largest t with 2^t <= 2n/3.
    int top_carry = 0;
    while (3 * (std::size_t{1} << (top_carry + 1)) <= 2 * n) {
        ++top_carry;
    }
    for (int t = top_carry; t >= 1; --t) {
        emit.label(Phase::C, t);
        const std::size_t width = std::size_t{1} << t;
        for (std::size_t m = 1; m <= (n - width / 2) / width; ++m) {
            emit.add(Gate::toffoli(z(width * m), span[t - 1][2 * m], z(width * m + width / 2)));
        }
    }

    for (int t = levels; t >= 1; --t) {
        emit.label(Phase::InverseP, t);
        p_round(t);
    }

    emit.label(Phase::Sum, 0);
    for (std::size_t i = 0; i < n; ++i) {
        emit.add(Gate::cnot(b(i), z(i)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        emit.add(Gate::cnot(a(i), b(i)));
    }
    return out;
}

LabeledCircuit vbe_ripple(std::size_t n)
{
    if (n == 0) {
        throw DomainError("adder bit width must be at least 1");
    }
    const std::size_t ancillas = n - 1;
    LabeledCircuit out{Circuit(3 * n + 1 + ancillas, adder_registers(n, ancillas)), {}};
    Emitter emit(out);
    const auto &reg = out.circuit.registers();

    // carry(i) holds the carry into bit i; carry(0) is the constant 0.
    auto carry = [&](std::size_t i) { return i == n ? reg.z[n] : reg.ancilla[i - 1]; };

    for (std::size_t i = 0; i < n; ++i) {
        emit.label(Phase::C, static_cast<int>(i) + 1);
        emit.add(Gate::toffoli(reg.a[i], reg.b[i], carry(i + 1)));
        emit.add(Gate::cnot(reg.a[i], reg.b[i]));
        if (i > 0) {
            emit.add(Gate::toffoli(carry(i), reg.b[i], carry(i + 1)));
        }
    }

    emit.label(Phase::Sum, 0);
    for (std::size_t k = n; k-- > 0;) {
        emit.add(Gate::cnot(reg.b[k], reg.z[k]));
        if (k > 0) {
            emit.add(Gate::cnot(carry(k), reg.z[k]));
        }
        if (k + 1 < n) {
            // Uncompute carry(k+1); the top carry stays in z_n.
            if (k > 0) {
                emit.add(Gate::toffoli(carry(k), reg.b[k], carry(k + 1)));
            }
            emit.add(Gate::cnot(reg.a[k], reg.b[k]));
            emit.add(Gate::toffoli(reg.a[k], reg.b[k], carry(k + 1)));
        } else {
            emit.add(Gate::cnot(reg.a[k], reg.b[k]));
        }
    }
    return out;
}

AdderKind adder_kind_from_string(std::string_view name)
{
    if (name == "qcla") {
        return AdderKind::Qcla;
    }
    if (name == "vbe") {
        return AdderKind::Vbe;
    }
    throw UsageError(fmt::format("unknown adder '{}'", name));
}

std::string_view to_string(AdderKind kind) { return kind == AdderKind::Qcla ? "qcla" : "vbe"; }

LabeledCircuit generate_adder(AdderKind kind, std::size_t n)
{
    return kind == AdderKind::Qcla ? qcla_out_of_place(n) : vbe_ripple(n);
}

std::vector<std::pair<RoundLabel, std::size_t>> round_structure(const LabeledCircuit &c)
{
    c.check();
    std::vector<std::pair<RoundLabel, std::size_t>> out;
    for (const RoundLabel &label : c.labels) {
        if (out.empty() || !(out.back().first == label)) {
            out.emplace_back(label, 0);
        }
        ++out.back().second;
    }
    return out;
}

std::size_t count_rounds(const std::vector<std::pair<RoundLabel, std::size_t>> &structure, Phase phase)
{
    std::size_t count = 0;
    for (const auto &[label, gates] : structure) {
        if (label.phase == phase) {
            ++count;
        }
    }
    return count;
}

} // namespace qmbqc
