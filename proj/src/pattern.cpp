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

#include "qmbqc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "qmbqc/errors.hpp"

namespace qmbqc {

void toggle(Parity &acc, const Parity &other)
{
    Parity out;
    std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(out));
    acc = std::move(out);
}

namespace {

int parity_of(const Parity &p, const std::map<SiteId, int> &outcomes)
{
    int v = 0;
    for (SiteId s : p) {
        auto it = outcomes.find(s);
        if (it == outcomes.end()) {
            throw ContractError(fmt::format("outcome of site {} is not available yet", s));
        }
        v ^= it->second;
    }
    return v;
}

bool contains(const std::vector<SiteId> &v, SiteId s) { return std::find(v.begin(), v.end(), s) != v.end(); }

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

} // namespace

int MeasurementPattern::rounds() const
{
    int r = 0;
    for (const auto &m : measurements) {
        r = std::max(r, m.round);
    }
    return r;
}

GraphState MeasurementPattern::graph() const { return GraphState(sites, edges); }

void MeasurementPattern::validate() const
{
    std::map<SiteId, int> round_of;
    for (const auto &m : measurements) {
        if (!contains(sites, m.site)) {
            throw ContractError(fmt::format("measured site {} is not part of the pattern", m.site));
        }
        if (contains(outputs, m.site)) {
            throw ContractError(fmt::format("output site {} is measured", m.site));
        }
        if (!round_of.emplace(m.site, m.round).second) {
            throw ContractError(fmt::format("site {} is measured twice", m.site));
        }
        if (m.round < 1) {
            throw ContractError(fmt::format("site {} has round {}; rounds start at 1", m.site, m.round));
        }
        if (m.basis.kind() == MeasurementBasis::Kind::Z && !m.adapt.empty()) {
            throw ContractError(fmt::format("Z measurement of site {} cannot be adaptive", m.site));
        }
    }
    for (SiteId s : sites) {
        if (!contains(outputs, s) && !round_of.contains(s)) {
            throw ContractError(fmt::format("site {} is neither measured nor an output", s));
        }
    }
    for (SiteId s : inputs) {
        if (!contains(sites, s)) {
            throw ContractError(fmt::format("input {} is not part of the pattern", s));
        }
    }
    for (SiteId s : outputs) {
        if (!contains(sites, s)) {
            throw ContractError(fmt::format("output {} is not part of the pattern", s));
        }
    }
    std::set<int> used;
    for (const auto &[site, r] : round_of) {
        used.insert(r);
    }
    if (!used.empty() && *used.rbegin() != static_cast<int>(used.size())) {
        throw ContractError("measurement rounds are not contiguous from 1");
    }
    for (const auto &m : measurements) {
        for (const Parity *domain : {&m.adapt.s_domain, &m.adapt.t_domain}) {
            for (SiteId d : *domain) {
                auto it = round_of.find(d);
                if (it == round_of.end()) {
                    throw ContractError(fmt::format("site {} adapts on unmeasured site {}", m.site, d));
                }
                if (it->second >= m.round) {
                    throw ContractError(fmt::format("site {} in round {} adapts on site {} from round {}", m.site,
                                                    m.round, d, it->second));
                }
            }
        }
    }
    if (corrections.size() != outputs.size()) {
        throw ContractError("one correction entry is required per output");
    }
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (corrections[i].site != outputs[i]) {
            throw ContractError(fmt::format("correction {} is for site {}, expected {}", i, corrections[i].site,
                                            outputs[i]));
        }
        for (const Parity *domain : {&corrections[i].x_domain, &corrections[i].z_domain}) {
            for (SiteId d : *domain) {
                if (!round_of.contains(d)) {
                    throw ContractError(fmt::format("correction of {} references unmeasured site {}", outputs[i], d));
                }
            }
        }
    }
    for (const auto &[u, v] : edges) {
        if (!contains(sites, u) || !contains(sites, v) || u == v) {
            throw ContractError(fmt::format("edge ({}, {}) is not a valid pattern edge", u, v));
        }
    }
}

MeasurementBasis MeasurementPattern::resolve_basis(const PatternMeasurement &m,
                                                   const std::map<SiteId, int> &outcomes) const
{
    if (m.adapt.empty()) {
        return m.basis;
    }
    int s = parity_of(m.adapt.s_domain, outcomes);
    int t = parity_of(m.adapt.t_domain, outcomes);
    double angle = (s ? -m.basis.angle() : m.basis.angle()) + (t ? std::numbers::pi : 0.0);
    return MeasurementBasis::xy(angle);
}

SiteId PatternBuilder::add_site()
{
    auto id = static_cast<SiteId>(pattern_.sites.size());
    pattern_.sites.push_back(id);
    return id;
}

void PatternBuilder::measure(SiteId site, MeasurementBasis ideal, std::vector<Byproduct> on_one)
{
    steps_.push_back({site, ideal, std::move(on_one)});
}

MeasurementPattern PatternBuilder::build() const
{
    MeasurementPattern p = pattern_;
    std::map<SiteId, Parity> xdom;
    std::map<SiteId, Parity> zdom;
    std::map<SiteId, int> round_of;

    for (const Step &step : steps_) {
        const Parity &xd = xdom[step.site];
        const Parity &zd = zdom[step.site];
        PatternMeasurement m{step.site, 1, step.ideal, {}};
        Parity signal{step.site};

        if (step.ideal.kind() == MeasurementBasis::Kind::Z) {
            toggle(signal, xd);
        } else if (step.ideal.is_pauli()) {
            // X^x Z^z in front of an XY measurement at a multiple of pi/2
            // only relabels outcomes: Z always flips them, X flips them for
            // odd multiples (Y-like angles).
            auto quarters = static_cast<long>(std::lround(step.ideal.angle() / (std::numbers::pi / 2.0)));
            toggle(signal, zd);
            if (quarters % 2 != 0) {
                toggle(signal, xd);
            }
        } else {
            m.adapt = AdaptRule{xd, zd};
            int latest = 0;
            for (const Parity *domain : {&xd, &zd}) {
                for (SiteId d : *domain) {
                    latest = std::max(latest, round_of.at(d));
                }
            }
            m.round = latest + 1;
        }
        round_of[step.site] = m.round;
        p.measurements.push_back(m);

        for (const Byproduct &b : step.on_one) {
            if (round_of.contains(b.site)) {
                throw ContractError(
                    fmt::format("measurement of {} leaves a byproduct on measured site {}", step.site, b.site));
            }
            toggle(b.pauli == Pauli::X ? xdom[b.site] : zdom[b.site], signal);
        }
    }

    for (SiteId out : p.outputs) {
        p.corrections.push_back({out, xdom[out], zdom[out]});
    }
    std::stable_sort(p.measurements.begin(), p.measurements.end(),
                     [](const PatternMeasurement &a, const PatternMeasurement &b) { return a.round < b.round; });
    p.validate();
    return p;
}

MeasurementPattern wire_pattern(std::size_t length)
{
    if (length == 0) {
        throw DomainError("wire length must be at least 1");
    }
    PatternBuilder b(fmt::format("wire({})", length));
    std::vector<SiteId> chain;
    for (std::size_t i = 0; i < length; ++i) {
        chain.push_back(b.add_site());
    }
    for (std::size_t i = 0; i + 1 < length; ++i) {
        b.entangle(chain[i], chain[i + 1]);
    }
    b.add_input(chain.front());
    b.add_output(chain.back());
    for (std::size_t i = 0; i + 1 < length; ++i) {
        std::vector<Byproduct> on_one{{chain[i + 1], Pauli::X}};
        if (i + 2 < length) {
            on_one.push_back({chain[i + 2], Pauli::Z});
        }
        b.measure(chain[i], MeasurementBasis::x(), std::move(on_one));
    }
    return b.build();
}

MeasurementPattern hadamard_pattern()
{
    MeasurementPattern p = wire_pattern(2);
    p.name = "hadamard";
    return p;
}

MeasurementPattern cnot_pattern()
{
    PatternBuilder b("cnot");
    SiteId control = b.add_site();
    SiteId target_in = b.add_site();
    SiteId middle = b.add_site();
    SiteId target_out = b.add_site();
    b.entangle(target_in, middle);
    b.entangle(middle, target_out);
    b.entangle(control, middle);
    b.add_input(control);
    b.add_input(target_in);
    b.add_output(control);
    b.add_output(target_out);
    b.measure(target_in, MeasurementBasis::x(),
              {{middle, Pauli::X}, {target_out, Pauli::Z}, {control, Pauli::Z}});
    b.measure(middle, MeasurementBasis::x(), {{target_out, Pauli::X}});
    return b.build();
}

MeasurementPattern pattern_for_gate(PatternGate gate, std::size_t wire_length)
{
    switch (gate) {
    case PatternGate::Wire:
        return wire_pattern(wire_length);
    case PatternGate::Hadamard:
        return hadamard_pattern();
    case PatternGate::Cnot:
        return cnot_pattern();
    }
    throw UsageError("unknown pattern gate");
}

MeasurementPattern toffoli_phase_pattern()
{
    PatternBuilder b("toffoli-phase");
    std::vector<SiteId> logical;
    for (int i = 0; i < 3; ++i) {
        logical.push_back(b.add_site());
        b.add_input(logical.back());
        b.add_output(logical.back());
    }
    struct Gadget {
        SiteId g;
        SiteId h;
        std::vector<SiteId> support;
        double angle;
    };
    std::vector<Gadget> gadgets;
    for (unsigned mask = 1; mask < 8; ++mask) {
        Gadget gd{b.add_site(), b.add_site(), {}, 0.0};
        for (unsigned q = 0; q < 3; ++q) {
            if (mask & (1U << q)) {
                gd.support.push_back(logical[q]);
                b.entangle(gd.g, logical[q]);
            }
        }
        b.entangle(gd.g, gd.h);
        // A zero outcome on h applies diag(1, e^{-i angle}) to the parity
        // of the support, so the angle is minus the wanted phase.
        int sign = gd.support.size() % 2 == 1 ? 1 : -1;
        gd.angle = -sign * std::numbers::pi / 4.0;
        gadgets.push_back(std::move(gd));
    }
    for (const Gadget &gd : gadgets) {
        b.measure(gd.g, MeasurementBasis::x(), {{gd.h, Pauli::X}});
    }
    for (const Gadget &gd : gadgets) {
        std::vector<Byproduct> on_one;
        for (SiteId q : gd.support) {
            on_one.push_back({q, Pauli::Z});
        }
        b.measure(gd.h, MeasurementBasis::xy(gd.angle), std::move(on_one));
    }
    return b.build();
}

bool PauliFrame::trivial() const
{
    return std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; }) &&
           std::all_of(z.begin(), z.end(), [](auto v) { return v == 0; });
}

PauliFrame PauliFrame::compose(const PauliFrame &other) const
{
    if (sites != other.sites) {
        throw InvalidInput("cannot compose frames over different sites");
    }
    PauliFrame out = *this;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        out.x[i] ^= other.x[i];
        out.z[i] ^= other.z[i];
    }
    return out;
}

void PauliFrame::correct(StateVector &state) const
{
    for (std::size_t i = 0; i < sites.size(); ++i) {
        std::size_t q = state.position(sites[i]);
        if (x[i]) {
            state.apply_x(q);
        }
        if (z[i]) {
            state.apply_z(q);
        }
    }
}

PatternRun run_pattern(const GraphState &g, const MeasurementPattern &p, const StateVector &input,
                       OutcomeSource &source, std::size_t qubit_limit)
{
    p.validate();
    for (SiteId s : p.sites) {
        if (!g.contains(s)) {
            throw ContractError(fmt::format("pattern site {} is not a graph vertex", s));
        }
        if (g.sign(s) != 0) {
            throw ContractError(fmt::format("site {} has a non-zero sign bit", s));
        }
    }
    std::set<Edge> wanted;
    for (const Edge &e : p.edges) {
        wanted.insert(normalized(e));
    }
    std::set<Edge> induced;
    for (const Edge &e : g.edges()) {
        if (contains(p.sites, e.first) && contains(p.sites, e.second)) {
            induced.insert(normalized(e));
        }
    }
    if (wanted != induced) {
        throw ContractError("graph edges among the pattern sites differ from the pattern's entanglement");
    }
    if (input.num_qubits() != p.inputs.size()) {
        throw InvalidInput(
            fmt::format("input state has {} qubits, pattern has {} inputs", input.num_qubits(), p.inputs.size()));
    }
    if (p.sites.size() > qubit_limit) {
        throw CapacityError(
            fmt::format("pattern needs {} qubits, above the limit of {}", p.sites.size(), qubit_limit));
    }

    std::vector<Complex> amps(input.amplitudes().begin(), input.amplitudes().end());
    StateVector state = StateVector::from_amplitudes(std::move(amps), p.inputs);
    std::vector<SiteId> fresh;
    for (SiteId s : p.sites) {
        if (!contains(p.inputs, s)) {
            fresh.push_back(s);
        }
    }
    StateVector plus(fresh, qubit_limit);
    for (std::size_t q = 0; q < fresh.size(); ++q) {
        plus.apply_h(q);
    }
    state = state.tensor(plus);
    for (const Edge &e : p.edges) {
        state.apply_cz(state.position(e.first), state.position(e.second));
    }

    PatternRun run{state, {}, {}, {}};
    for (const PatternMeasurement &m : p.measurements) {
        MeasurementBasis basis = p.resolve_basis(m, run.outcomes);
        MeasurementResult r = measure_site(run.output, m.site, basis, source);
        run.outcomes[m.site] = r.outcome;
        run.bases.push_back(basis);
    }
    run.output = run.output.permuted(p.outputs);

    run.frame.sites = p.outputs;
    for (const OutputCorrection &c : p.corrections) {
        run.frame.x.push_back(static_cast<std::uint8_t>(parity_of(c.x_domain, run.outcomes)));
        run.frame.z.push_back(static_cast<std::uint8_t>(parity_of(c.z_domain, run.outcomes)));
    }
    return run;
}

StateVector run_corrected(const MeasurementPattern &p, const StateVector &input, OutcomeSource &source)
{
    PatternRun run = run_pattern(p.graph(), p, input, source);
    run.frame.correct(run.output);
    return run.output;
}

namespace {

nlohmann::json basis_to_json(const MeasurementBasis &b)
{
    switch (b.kind()) {
    case MeasurementBasis::Kind::X:
        return "X";
    case MeasurementBasis::Kind::Y:
        return "Y";
    case MeasurementBasis::Kind::Z:
        return "Z";
    case MeasurementBasis::Kind::XY:
        return nlohmann::json{{"xy", b.angle()}};
    }
    return nullptr;
}

MeasurementBasis basis_from_json(const nlohmann::json &j)
{
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "X") {
            return MeasurementBasis::x();
        }
        if (s == "Y") {
            return MeasurementBasis::y();
        }
        if (s == "Z") {
            return MeasurementBasis::z();
        }
        throw InvalidInput(fmt::format("unknown basis '{}'", s));
    }
    if (j.is_object() && j.contains("xy")) {
        return MeasurementBasis::xy(j.at("xy").get<double>());
    }
    throw InvalidInput("basis must be \"X\", \"Y\", \"Z\" or {\"xy\": angle}");
}

} // namespace

nlohmann::json to_json(const MeasurementPattern &p)
{
    nlohmann::json sites = nlohmann::json::array();
    for (const auto &m : p.measurements) {
        nlohmann::json s{{"id", m.site}, {"round", m.round}, {"basis", basis_to_json(m.basis)}};
        if (!m.adapt.empty()) {
            s["adapt"] = {{"s", m.adapt.s_domain}, {"t", m.adapt.t_domain}};
        }
        sites.push_back(std::move(s));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &[u, v] : p.edges) {
        edges.push_back({u, v});
    }
    nlohmann::json corrections = nlohmann::json::array();
    for (const auto &c : p.corrections) {
        corrections.push_back({{"site", c.site}, {"x", c.x_domain}, {"z", c.z_domain}});
    }
    return {{"name", p.name},  {"vertices", p.sites}, {"sites", sites},          {"edges", edges},
            {"inputs", p.inputs}, {"outputs", p.outputs}, {"corrections", corrections}};
}

MeasurementPattern pattern_from_json(const nlohmann::json &j)
{
    try {
        MeasurementPattern p;
        p.name = j.value("name", "");
        p.inputs = j.at("inputs").get<std::vector<SiteId>>();
        p.outputs = j.at("outputs").get<std::vector<SiteId>>();
        for (const auto &s : j.at("sites")) {
            PatternMeasurement m{s.at("id").get<SiteId>(), s.at("round").get<int>(), basis_from_json(s.at("basis")),
                                 {}};
            if (s.contains("adapt")) {
                m.adapt.s_domain = s.at("adapt").value("s", Parity{});
                m.adapt.t_domain = s.at("adapt").value("t", Parity{});
                std::sort(m.adapt.s_domain.begin(), m.adapt.s_domain.end());
                std::sort(m.adapt.t_domain.begin(), m.adapt.t_domain.end());
            }
            p.measurements.push_back(std::move(m));
        }
        if (j.contains("vertices")) {
            p.sites = j.at("vertices").get<std::vector<SiteId>>();
        } else {
            for (const auto &m : p.measurements) {
                p.sites.push_back(m.site);
            }
            for (SiteId o : p.outputs) {
                if (!contains(p.sites, o)) {
                    p.sites.push_back(o);
                }
            }
        }
        for (const auto &e : j.value("edges", nlohmann::json::array())) {
            p.edges.emplace_back(e.at(0).get<SiteId>(), e.at(1).get<SiteId>());
        }
        if (j.contains("corrections")) {
            for (const auto &c : j.at("corrections")) {
                p.corrections.push_back(
                    {c.at("site").get<SiteId>(), c.value("x", Parity{}), c.value("z", Parity{})});
            }
        } else {
            for (SiteId o : p.outputs) {
                p.corrections.push_back({o, {}, {}});
            }
        }
        p.validate();
        return p;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(fmt::format("malformed pattern JSON: {}", e.what()));
    }
}

} // namespace qmbqc
