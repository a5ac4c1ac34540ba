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

// qmbqc: adder generation, verification, pattern simulation and MBQC
// resource estimation.
//
// Exit codes: 0 success, 1 verification or fidelity failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "qmbqc/adders.hpp"
#include "qmbqc/circuit_io.hpp"
#include "qmbqc/compile.hpp"
#include "qmbqc/errors.hpp"
#include "qmbqc/pattern.hpp"
#include "qmbqc/resources.hpp"
#include "qmbqc/rng.hpp"

using namespace qmbqc;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

constexpr std::size_t kMaxExhaustiveBits = 8;
constexpr double kFidelityTolerance = 1e-9;

void print_summary(const LabeledCircuit &c)
{
    const Circuit &circ = c.circuit;
    fmt::print("width {}\n", circ.width());
    fmt::print("gates X={} CNOT={} Toffoli={}\n", circ.count(GateKind::X), circ.count(GateKind::CNOT),
               circ.count(GateKind::Toffoli));
    if (c.labels.empty()) {
        return;
    }
    auto rounds = round_structure(c);
    fmt::print("rounds Init={} P={} G={} C={} InverseP={} Sum={}\n", count_rounds(rounds, Phase::Init),
               count_rounds(rounds, Phase::P), count_rounds(rounds, Phase::G), count_rounds(rounds, Phase::C),
               count_rounds(rounds, Phase::InverseP), count_rounds(rounds, Phase::Sum));
}

struct AddResult {
    std::uint64_t a, b, z;
    bool clean; // a, b restored and ancillas zero
};

AddResult run_adder(const Circuit &c, std::uint64_t a, std::uint64_t b)
{
    const Registers &r = c.registers();
    Bitstring in(c.width());
    in.write(r.a, a);
    in.write(r.b, b);
    Bitstring out = classical_eval(c, in);
    bool clean = out.read(r.a) == a && out.read(r.b) == b;
    for (Qubit q : r.ancilla) {
        clean = clean && !out[q];
    }
    return {a, b, out.read(r.z), clean};
}

std::size_t bit_width_of(const Circuit &c)
{
    const Registers &r = c.registers();
    if (r.a.empty() || r.a.size() != r.b.size() || r.z.size() != r.a.size() + 1) {
        throw InvalidInput("circuit registers do not describe an n-bit adder");
    }
    return r.a.size();
}

int cmd_generate(const std::string &adder, std::size_t bits, const std::string &out)
{
    if (bits < 1) {
        throw UsageError("--bits must be at least 1");
    }
    LabeledCircuit c = generate_adder(adder_kind_from_string(adder), bits);
    if (!out.empty()) {
        try {
            write_circuit(out, c);
        } catch (const std::runtime_error &e) {
            fmt::print(stderr, "error: {}\n", e.what());
            return kFail;
        }
    }
    fmt::print("{} n={}\n", adder, bits);
    print_summary(c);
    return kOk;
}

int cmd_verify(const std::string &adder, std::size_t bits, bool exhaustive, std::size_t samples,
               std::uint64_t seed, const std::string &in)
{
    const bool cross = adder == "cross";
    if (!cross) {
        adder_kind_from_string(adder);
    }
    std::optional<LabeledCircuit> loaded;
    if (!in.empty()) {
        if (cross) {
            throw UsageError("--in cannot be combined with --adder cross");
        }
        loaded = read_circuit(in);
        bits = bit_width_of(loaded->circuit);
    }
    if (bits < 1) {
        throw UsageError("--bits must be at least 1");
    }
    if (exhaustive && bits > kMaxExhaustiveBits) {
        throw UsageError(fmt::format("--exhaustive supports at most {} bits", kMaxExhaustiveBits));
    }
    if (!exhaustive && bits > 63) {
        throw UsageError("--bits must be at most 63");
    }

    Circuit primary = loaded ? loaded->circuit
                             : generate_adder(cross ? AdderKind::Qcla : adder_kind_from_string(adder), bits).circuit;
    std::optional<Circuit> other;
    if (cross) {
        other = vbe_ripple(bits).circuit;
    }

    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    std::size_t cases = 0;
    std::size_t failures = 0;
    auto check = [&](std::uint64_t a, std::uint64_t b) {
        ++cases;
        AddResult r = run_adder(primary, a, b);
        bool ok = r.clean && r.z == a + b;
        std::string detail;
        if (other) {
            AddResult s = run_adder(*other, a, b);
            ok = ok && s.clean && s.z == r.z;
            detail = fmt::format(" vbe_z={} vbe_clean={}", s.z, s.clean);
        }
        if (!ok) {
            if (++failures <= 20) {
                fmt::print("FAIL a={} b={} z={} clean={}{}\n", a, b, r.z, r.clean, detail);
            }
        }
    };

    if (exhaustive) {
        for (std::uint64_t a = 0; a <= mask; ++a) {
            for (std::uint64_t b = 0; b <= mask; ++b) {
                check(a, b);
            }
        }
    } else {
        Rng rng(seed);
        for (std::size_t k = 0; k < samples; ++k) {
            std::uint64_t a = rng.next() & mask;
            std::uint64_t b = rng.next() & mask;
            check(a, b);
        }
    }
    fmt::print("{} n={} cases={} failures={}\n", adder, bits, cases, failures);
    return failures == 0 ? kOk : kFail;
}

Bitstring parse_outcomes(const std::string &text)
{
    try {
        return Bitstring::parse(text);
    } catch (const InvalidInput &) {
        throw UsageError(fmt::format("malformed --force-outcomes '{}'", text));
    }
}

int cmd_simulate(const std::string &gate, std::size_t trials, std::uint64_t seed, const std::string &force,
                 std::size_t length)
{
    if (trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    MeasurementPattern p;
    if (gate == "wire") {
        if (length < 1) {
            throw UsageError("--length must be at least 1");
        }
        p = wire_pattern(length);
    } else if (gate == "h") {
        p = hadamard_pattern();
    } else if (gate == "cnot") {
        p = cnot_pattern();
    } else if (gate == "toffoli-phase") {
        p = toffoli_phase_pattern();
    } else {
        throw UsageError(fmt::format("unknown gate '{}'", gate));
    }

    std::optional<Bitstring> forced;
    if (!force.empty()) {
        forced = parse_outcomes(force);
        if (forced->size() != p.measurements.size()) {
            throw UsageError(fmt::format("--force-outcomes needs {} bits for this pattern, got {}",
                                         p.measurements.size(), forced->size()));
        }
    }

    fmt::print("pattern {} sites={} measured={} rounds={}\n", p.name, p.sites.size(), p.measurements.size(),
               p.rounds());
    Rng rng(seed);
    double worst = 1.0;
    for (std::size_t t = 0; t < trials; ++t) {
        StateVector input = random_state(p.inputs, rng);
        StateVector expected = input;
        if (gate == "wire") {
            if ((length - 1) % 2 == 1) {
                expected.apply_h(0);
            }
        } else if (gate == "h") {
            expected.apply_h(0);
        } else if (gate == "cnot") {
            expected.apply_cnot(0, 1);
        } else {
            expected.apply_ccz(0, 1, 2);
        }
        OutcomeSource source =
            forced ? OutcomeSource::forced({forced->bits().begin(), forced->bits().end()})
                   : OutcomeSource::random(rng.next());
        StateVector out = run_corrected(p, input, source);
        double f = fidelity(out, expected);
        worst = std::min(worst, f);
        fmt::print("trial {} fidelity {:.15f}\n", t, f);
    }
    bool ok = worst >= 1.0 - kFidelityTolerance;
    fmt::print("min fidelity {:.15f} {}\n", worst, ok ? "ok" : "FAIL");
    return ok ? kOk : kFail;
}

int cmd_estimate(std::int64_t bits, double c)
{
    if (bits < 3) {
        throw UsageError("the depth formula is only defined for --bits >= 3");
    }
    fmt::print("n {}\n", bits);
    fmt::print("qcla depth {}\n", qcla_depth_formula(bits));
    fmt::print("qcla size {}\n", qcla_size_formula(bits));
    fmt::print("vbe depth {} (c={})\n", vbe_depth_model(bits, c), c);
    fmt::print("vbe size {}\n", vbe_size_formula(bits));
    return kOk;
}

int cmd_compare(std::int64_t from, std::int64_t to, double c, const std::string &csv, bool measure)
{
    auto rows = compare_table(from, to, c, measure);
    if (csv.empty()) {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(csv);
        write_csv(out, rows);
        if (!out) {
            fmt::print(stderr, "error: cannot write {}\n", csv);
            return kFail;
        }
        fmt::print("wrote {} rows to {}\n", rows.size(), csv);
    }
    if (auto n = find_crossover(c, from, to)) {
        fmt::print("depth crossover at n={}\n", *n);
    } else {
        fmt::print("no depth crossover in {}..{}\n", from, to);
    }
    if (measure) {
        const ModelPoint &last = rows.back();
        ResourceEstimate q{static_cast<std::size_t>(last.n), 0, last.measured_qcla->sites, last.measured_qcla->depth};
        ResourceEstimate v{static_cast<std::size_t>(last.n), 0, last.measured_vbe->sites, last.measured_vbe->depth};
        fmt::print("{}", reconciliation_report(last.n, q, v, c));
    }
    return kOk;
}

int cmd_layout(const std::string &adder, std::size_t bits, const std::string &format, const std::string &out,
               const std::string &in)
{
    RenderFormat fmt_kind = render_format_from_string(format);
    LabeledCircuit c = in.empty() ? LabeledCircuit{Circuit(0), {}} : read_circuit(in);
    if (in.empty()) {
        if (bits < 1) {
            throw UsageError("--bits must be at least 1");
        }
        c = generate_adder(adder_kind_from_string(adder), bits);
    } else if (c.labels.empty()) {
        throw UsageError(fmt::format("{} has no round labels", in));
    }
    Layout layout = place(c);
    std::string doc = render_layout(layout, fmt_kind);
    if (out.empty()) {
        std::cout << doc;
    } else {
        std::ofstream file(out, std::ios::binary);
        file << doc;
        if (!file) {
            fmt::print(stderr, "error: cannot write {}\n", out);
            return kFail;
        }
        ResourceEstimate e = count_resources(layout, schedule(c));
        fmt::print("layout {}x{} qubits={} boxes={} sites={} depth={}\n", layout.height, layout.width,
                   e.logical_qubits, layout.boxes.size(), e.lattice_sites, e.mbqc_depth);
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Quantum adder generation and MBQC compilation"};
    app.require_subcommand(1);

    std::string adder = "qcla";
    std::size_t bits = 0;
    std::string out;
    std::string in;

    auto *gen = app.add_subcommand("generate", "Generate an adder circuit");
    gen->add_option("--adder", adder, "qcla or vbe")->check(CLI::IsMember({"qcla", "vbe"}));
    gen->add_option("--bits", bits, "Bit width")->required();
    gen->add_option("--out", out, "Circuit JSON file");

    bool exhaustive = false;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    auto *ver = app.add_subcommand("verify", "Check adders against integer addition");
    ver->add_option("--adder", adder, "qcla, vbe or cross")->check(CLI::IsMember({"qcla", "vbe", "cross"}));
    ver->add_option("--bits", bits, "Bit width");
    auto *exh = ver->add_flag("--exhaustive", exhaustive, "All 4^n input pairs");
    ver->add_option("--samples", samples, "Random input pairs")->excludes(exh);
    ver->add_option("--seed", seed, "PRNG seed");
    ver->add_option("--in", in, "Circuit JSON file to verify");

    std::string gate;
    std::size_t trials = 1;
    std::string force;
    std::size_t length = 5;
    auto *sim = app.add_subcommand("simulate-pattern", "Run a measurement pattern on random inputs");
    sim->add_option("--gate", gate, "wire, h, cnot or toffoli-phase")->required();
    sim->add_option("--trials", trials, "Number of random input states");
    sim->add_option("--seed", seed, "PRNG seed");
    sim->add_option("--force-outcomes", force, "Measurement outcomes, one bit per measured site");
    sim->add_option("--length", length, "Wire length in sites");

    std::int64_t est_bits = 0;
    double c = 1.0;
    auto *est = app.add_subcommand("estimate", "Closed-form resource estimates");
    est->add_option("--bits", est_bits, "Bit width")->required();
    est->add_option("--vbe-depth-c", c, "Ripple-carry depth coefficient");

    std::int64_t from = 0;
    std::int64_t to = 0;
    std::string csv;
    bool measure = false;
    auto *cmp = app.add_subcommand("compare", "QCLA versus ripple-carry table");
    cmp->add_option("--bits-from", from, "First bit width")->required();
    cmp->add_option("--bits-to", to, "Last bit width")->required();
    cmp->add_option("--vbe-depth-c", c, "Ripple-carry depth coefficient");
    cmp->add_option("--csv", csv, "CSV output file");
    cmp->add_flag("--measure", measure, "Also compile both adders and record measured values");

    std::string format = "ascii";
    auto *lay = app.add_subcommand("layout", "Render an adder's lattice layout");
    lay->add_option("--bits", bits, "Bit width");
    lay->add_option("--adder", adder, "qcla or vbe")->check(CLI::IsMember({"qcla", "vbe"}));
    lay->add_option("--format", format, "ascii or svg");
    lay->add_option("--out", out, "Output file");
    lay->add_option("--in", in, "Labelled circuit JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            return cmd_generate(adder, bits, out);
        }
        if (*ver) {
            if (in.empty() && bits == 0) {
                throw UsageError("--bits or --in is required");
            }
            return cmd_verify(adder, bits, exhaustive, samples, seed, in);
        }
        if (*sim) {
            return cmd_simulate(gate, trials, seed, force, length);
        }
        if (*est) {
            return cmd_estimate(est_bits, c);
        }
        if (*cmp) {
            return cmd_compare(from, to, c, csv, measure);
        }
        if (*lay) {
            if (in.empty() && bits == 0) {
                throw UsageError("--bits or --in is required");
            }
            return cmd_layout(adder, bits, format, out, in);
        }
    } catch (const UsageError &e) {
        fmt::print(stderr, "usage error: {}\n", e.what());
        return kUsage;
    } catch (const DomainError &e) {
        fmt::print(stderr, "usage error: {}\n", e.what());
        return kUsage;
    } catch (const InvalidInput &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kUsage;
    } catch (const std::exception &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kFail;
    }
    return kUsage;
}
