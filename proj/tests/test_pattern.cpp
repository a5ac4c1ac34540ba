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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "oracles.hpp"
#include "qmbqc/errors.hpp"
#include "qmbqc/pattern.hpp"

using namespace qmbqc;

namespace {

constexpr double kFidelity = 1.0 - 1e-9;

using GateOracle = std::function<oracle::Amps(const oracle::Amps &)>;

oracle::Amps amps_of(const StateVector &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

GateOracle wire_oracle(std::size_t length)
{
    return [length](const oracle::Amps &in) {
        oracle::Amps out = in;
        for (std::size_t i = 1; i < length; ++i) {
            out = oracle::hadamard(out, 0);
        }
        return out;
    };
}

oracle::Amps cnot_oracle(const oracle::Amps &in) { return oracle::cnot(in, 0, 1); }
oracle::Amps hadamard_oracle(const oracle::Amps &in) { return oracle::hadamard(in, 0); }
oracle::Amps ccz_oracle(const oracle::Amps &in) { return oracle::ccz(in, 0, 1, 2); }

std::vector<std::uint8_t> outcome_vector(std::uint64_t bits, std::size_t m)
{
    std::vector<std::uint8_t> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = static_cast<std::uint8_t>((bits >> i) & 1U);
    }
    return out;
}

void expect_same_up_to_phase(const StateVector &a, const StateVector &b)
{
    auto ca = canonical_phase(a);
    auto cb = canonical_phase(b);
    ASSERT_EQ(ca.dimension(), cb.dimension());
    for (std::size_t i = 0; i < ca.dimension(); ++i) {
        ASSERT_NEAR(std::abs(ca.amplitude(i) - cb.amplitude(i)), 0.0, 1e-9) << "index " << i;
    }
}

void check_semantics(const MeasurementPattern &p, const GateOracle &gate, std::uint64_t seed, int inputs = 100)
{
    Rng rng(seed);
    for (int trial = 0; trial < inputs; ++trial) {
        StateVector in = random_state(p.inputs, rng);
        auto src = OutcomeSource::random(rng.next());
        StateVector out = run_corrected(p, in, src);
        ASSERT_GE(oracle::fidelity(amps_of(out), gate(amps_of(in))), kFidelity) << p.name << " trial " << trial;
    }
}

void check_determinism(const MeasurementPattern &p, std::uint64_t seed)
{
    Rng rng(seed);
    StateVector in = random_state(p.inputs, rng);
    const std::size_t m = p.measurements.size();
    auto reference_src = OutcomeSource::forced(outcome_vector(0, m));
    StateVector reference = run_corrected(p, in, reference_src);
    if (m <= 10) {
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << m); ++v) {
            auto src = OutcomeSource::forced(outcome_vector(v, m));
            expect_same_up_to_phase(run_corrected(p, in, src), reference);
        }
    } else {
        for (int k = 0; k < 256; ++k) {
            auto src = OutcomeSource::forced(outcome_vector(rng.next(), m));
            expect_same_up_to_phase(run_corrected(p, in, src), reference);
        }
    }
}

} // namespace

TEST(Patterns, CliffordPatternsAreSingleRound)
{
    for (auto p : {wire_pattern(5), wire_pattern(2), hadamard_pattern(), cnot_pattern()}) {
        EXPECT_NO_THROW(p.validate());
        EXPECT_EQ(p.rounds(), 1) << p.name;
        for (const auto &m : p.measurements) {
            EXPECT_EQ(m.round, 1);
        }
    }
}

TEST(Patterns, WireAllZeroOutcomesIsIdentityWithTrivialFrame)
{
    MeasurementPattern p = wire_pattern(5);
    ASSERT_EQ(p.measurements.size(), 4u);
    Rng rng(1);
    StateVector in = random_state(p.inputs, rng);
    auto src = OutcomeSource::forced({0, 0, 0, 0});
    PatternRun run = run_pattern(p.graph(), p, in, src);
    EXPECT_TRUE(run.frame.trivial());
    EXPECT_GE(oracle::fidelity(amps_of(run.output), amps_of(in)), kFidelity);
}

TEST(Patterns, WireFrameFollowsChainRule)
{
    // Along a chain of X measurements the output carries X^{s2+s4} Z^{s1+s3}.
    MeasurementPattern p = wire_pattern(5);
    Rng rng(2);
    StateVector in = random_state(p.inputs, rng);
    for (std::uint64_t v = 0; v < 16; ++v) {
        auto s = outcome_vector(v, 4);
        auto src = OutcomeSource::forced(s);
        PatternRun run = run_pattern(p.graph(), p, in, src);
        ASSERT_EQ(run.frame.x.size(), 1u);
        EXPECT_EQ(run.frame.x[0], s[1] ^ s[3]) << v;
        EXPECT_EQ(run.frame.z[0], s[0] ^ s[2]) << v;
        const bool trivial = run.frame.trivial();
        if (!trivial) {
            EXPECT_LT(oracle::fidelity(amps_of(run.output), amps_of(in)), kFidelity);
        }
        run.frame.correct(run.output);
        EXPECT_GE(oracle::fidelity(amps_of(run.output), amps_of(in)), kFidelity);
    }
}

TEST(Patterns, CnotOnBasisInput)
{
    MeasurementPattern p = cnot_pattern();
    std::vector<std::uint8_t> bits{1, 0};
    for (std::uint64_t v = 0; v < 4; ++v) {
        auto src = OutcomeSource::forced(outcome_vector(v, p.measurements.size()));
        StateVector out = run_corrected(p, StateVector::basis(bits), src);
        EXPECT_NEAR(std::abs(out.amplitude(0b11)), 1.0, 1e-9);
    }
}

TEST(Patterns, HadamardOnZero)
{
    MeasurementPattern p = hadamard_pattern();
    for (std::uint8_t o : {0, 1}) {
        auto src = OutcomeSource::forced({o});
        StateVector out = run_corrected(p, StateVector::zeros(1), src);
        oracle::Amps plus{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
        EXPECT_GE(oracle::fidelity(amps_of(out), plus), kFidelity);
    }
}

TEST(Patterns, GateSemanticsOverRandomInputs)
{
    for (std::size_t length = 1; length <= 7; ++length) {
        check_semantics(wire_pattern(length), wire_oracle(length), 100 + length);
    }
    check_semantics(hadamard_pattern(), hadamard_oracle, 200);
    check_semantics(cnot_pattern(), cnot_oracle, 300);
    check_semantics(toffoli_phase_pattern(), ccz_oracle, 400);
}

TEST(Patterns, PatternForGate)
{
    EXPECT_EQ(pattern_for_gate(PatternGate::Wire, 3).measurements.size(), 2u);
    EXPECT_EQ(pattern_for_gate(PatternGate::Hadamard).measurements.size(), 1u);
    EXPECT_EQ(pattern_for_gate(PatternGate::Cnot).inputs.size(), 2u);
    EXPECT_THROW(wire_pattern(0), DomainError);
}

TEST(Patterns, DeterminismExhaustive)
{
    check_determinism(wire_pattern(5), 1);
    check_determinism(wire_pattern(11), 2);
    check_determinism(hadamard_pattern(), 3);
    check_determinism(cnot_pattern(), 4);
}

TEST(Patterns, CnotSeededOutcomeSweep)
{
    MeasurementPattern p = cnot_pattern();
    Rng rng(7);
    StateVector in = random_state(p.inputs, rng);
    auto first_src = OutcomeSource::random(0);
    StateVector first = run_corrected(p, in, first_src);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto src = OutcomeSource::random(seed);
        expect_same_up_to_phase(run_corrected(p, in, src), first);
    }
}

TEST(ToffoliPhase, TwoAdaptiveRounds)
{
    MeasurementPattern p = toffoli_phase_pattern();
    EXPECT_NO_THROW(p.validate());
    EXPECT_EQ(p.rounds(), 2);
    EXPECT_EQ(p.inputs.size(), 3u);
    EXPECT_EQ(p.outputs.size(), 3u);
    bool adaptive = false;
    for (const auto &m : p.measurements) {
        if (m.round == 2 && !m.adapt.empty()) {
            adaptive = true;
        }
    }
    EXPECT_TRUE(adaptive);
}

TEST(ToffoliPhase, FlippingRoundOneOutcomeChangesRoundTwoBasis)
{
    MeasurementPattern p = toffoli_phase_pattern();
    std::map<SiteId, int> zeros;
    for (const auto &m : p.measurements) {
        if (m.round == 1) {
            zeros[m.site] = 0;
        }
    }
    for (const auto &[site, value] : zeros) {
        std::map<SiteId, int> flipped = zeros;
        flipped[site] = 1;
        bool changed = false;
        for (const auto &m : p.measurements) {
            if (m.round == 2 && !p.resolve_basis(m, zeros).equivalent(p.resolve_basis(m, flipped))) {
                changed = true;
            }
        }
        EXPECT_TRUE(changed) << "round-1 site " << site;
    }
}

TEST(ToffoliPhase, BasisExamples)
{
    MeasurementPattern p = toffoli_phase_pattern();
    std::vector<std::uint8_t> b110{1, 1, 0};
    auto src = OutcomeSource::random(3);
    StateVector out = run_corrected(p, StateVector::basis(b110), src);
    EXPECT_NEAR(std::abs(out.amplitude(0b011)), 1.0, 1e-9);

    // (|110> + |111>)/sqrt2 -> (|110> - |111>)/sqrt2 exposes the relative sign.
    StateVector sup = StateVector::basis(b110);
    sup.apply_h(2);
    auto src2 = OutcomeSource::random(4);
    StateVector res = run_corrected(p, sup, src2);
    Complex ratio = res.amplitude(0b111) / res.amplitude(0b011);
    EXPECT_NEAR(ratio.real(), -1.0, 1e-9);
    EXPECT_NEAR(ratio.imag(), 0.0, 1e-9);
}

TEST(ToffoliPhase, ForcedRoundOneOutcomes)
{
    MeasurementPattern p = toffoli_phase_pattern();
    std::vector<std::size_t> first_round;
    for (std::size_t i = 0; i < p.measurements.size(); ++i) {
        if (p.measurements[i].round == 1) {
            first_round.push_back(i);
        }
    }
    ASSERT_LE(first_round.size(), 10u);
    Rng rng(77);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << first_round.size()); ++v) {
        std::vector<std::uint8_t> outcomes(p.measurements.size());
        for (std::size_t j = 0; j < first_round.size(); ++j) {
            outcomes[first_round[j]] = static_cast<std::uint8_t>((v >> j) & 1U);
        }
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            if (p.measurements[i].round == 2) {
                outcomes[i] = rng.bit() ? 1 : 0;
            }
        }
        StateVector in = random_state(p.inputs, rng);
        auto src = OutcomeSource::forced(outcomes);
        StateVector out = run_corrected(p, in, src);
        ASSERT_GE(oracle::fidelity(amps_of(out), ccz_oracle(amps_of(in))), kFidelity) << "vector " << v;
    }
}

TEST(ToffoliPhase, DeterminismSampled) { check_determinism(toffoli_phase_pattern(), 5); }

TEST(RunPattern, RejectsSignedGraph)
{
    MeasurementPattern p = wire_pattern(3);
    GraphState g = p.graph();
    std::vector<std::uint8_t> signs(g.size(), 0);
    signs[1] = 1;
    GraphState signed_graph(g.vertices(), g.edges(), signs);
    auto src = OutcomeSource::random(0);
    EXPECT_THROW(run_pattern(signed_graph, p, StateVector::zeros(1), src), ContractError);
}

TEST(RunPattern, RejectsMismatchedEdges)
{
    MeasurementPattern p = wire_pattern(3);
    GraphState g(p.sites, {}, {});
    auto src = OutcomeSource::random(0);
    EXPECT_THROW(run_pattern(g, p, StateVector::zeros(1), src), ContractError);
}

TEST(RunPattern, EmbeddedInLargerGraph)
{
    MeasurementPattern p = wire_pattern(3);
    std::vector<SiteId> vertices = p.sites;
    vertices.push_back(1000);
    GraphState g(vertices, p.edges, {});
    Rng rng(6);
    StateVector in = random_state(p.inputs, rng);
    auto src = OutcomeSource::random(1);
    PatternRun run = run_pattern(g, p, in, src);
    run.frame.correct(run.output);
    EXPECT_GE(oracle::fidelity(amps_of(run.output), wire_oracle(3)(amps_of(in))), kFidelity);
}

TEST(RunPattern, CapacityLimit)
{
    MeasurementPattern p = wire_pattern(6);
    auto src = OutcomeSource::random(0);
    EXPECT_THROW(run_pattern(p.graph(), p, StateVector::zeros(1), src, 4), CapacityError);
}

TEST(RunPattern, AdaptiveRuleOnFutureRoundIsContractError)
{
    MeasurementPattern p = wire_pattern(3);
    ASSERT_EQ(p.measurements.size(), 2u);
    p.measurements[0].adapt.s_domain = {p.measurements[1].site};
    EXPECT_THROW(p.validate(), ContractError);
    auto src = OutcomeSource::random(0);
    EXPECT_THROW(run_pattern(p.graph(), p, StateVector::zeros(1), src), ContractError);
}

TEST(RunPattern, RoundsMustBeContiguous)
{
    MeasurementPattern p = wire_pattern(3);
    p.measurements[1].round = 3;
    EXPECT_THROW(p.validate(), ContractError);
}

TEST(PauliFrame, ComposeIsXor)
{
    PauliFrame a{{1, 2}, {1, 0}, {0, 1}};
    PauliFrame b{{1, 2}, {1, 1}, {0, 1}};
    PauliFrame c = a.compose(b);
    EXPECT_EQ(c.x, (std::vector<std::uint8_t>{0, 1}));
    EXPECT_EQ(c.z, (std::vector<std::uint8_t>{0, 0}));
    EXPECT_TRUE(a.compose(a).trivial());
    PauliFrame other{{3, 4}, {0, 0}, {0, 0}};
    EXPECT_THROW(a.compose(other), InvalidInput);
}

TEST(PatternJson, RoundTrip)
{
    for (const auto &p : {wire_pattern(4), cnot_pattern(), toffoli_phase_pattern()}) {
        MeasurementPattern back = pattern_from_json(to_json(p));
        EXPECT_EQ(back.name, p.name);
        EXPECT_EQ(back.sites, p.sites);
        EXPECT_EQ(back.inputs, p.inputs);
        EXPECT_EQ(back.outputs, p.outputs);
        ASSERT_EQ(back.measurements.size(), p.measurements.size());
        for (std::size_t i = 0; i < p.measurements.size(); ++i) {
            EXPECT_EQ(back.measurements[i].site, p.measurements[i].site);
            EXPECT_EQ(back.measurements[i].round, p.measurements[i].round);
            EXPECT_TRUE(back.measurements[i].basis.equivalent(p.measurements[i].basis));
            EXPECT_EQ(back.measurements[i].adapt, p.measurements[i].adapt);
        }
        EXPECT_EQ(to_json(back), to_json(p));
    }
}

TEST(PatternJson, Malformed)
{
    EXPECT_THROW(pattern_from_json(nlohmann::json::parse(R"({"sites": 3})")), InvalidInput);
}
