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

#include "qmbqc/resources.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qmbqc/errors.hpp"

namespace qmbqc {

namespace {

std::int64_t log2_floor(std::int64_t n) { return floor_log2(static_cast<std::size_t>(n)); }

// Largest k with 3 * 2^k <= n.
std::int64_t log2_third_floor(std::int64_t n)
{
    std::int64_t k = 0;
    while (3 * (std::int64_t{1} << (k + 1)) <= n) {
        ++k;
    }
    return k;
}

} // namespace

std::int64_t qcla_depth_formula(std::int64_t n)
{
    if (n < 3) {
        throw DomainError(fmt::format("depth formula needs n >= 3, got {}", n));
    }
    return log2_floor(n) + log2_third_floor(n) + 5;
}

std::int64_t qcla_size_formula(std::int64_t n)
{
    if (n < 1) {
        throw DomainError(fmt::format("size formula needs n >= 1, got {}", n));
    }
    return 1011 * n + 224 * n * log2_floor(n);
}

std::int64_t vbe_size_formula(std::int64_t n)
{
    if (n < 1) {
        throw DomainError(fmt::format("size formula needs n >= 1, got {}", n));
    }
    return 304 * n;
}

double vbe_depth_model(std::int64_t n, double c)
{
    if (n < 1) {
        throw DomainError(fmt::format("depth model needs n >= 1, got {}", n));
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError(fmt::format("depth coefficient must be positive, got {}", c));
    }
    return c * static_cast<double>(n);
}

std::optional<std::int64_t> find_crossover(double c, std::int64_t lo, std::int64_t hi)
{
    for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n) {
        if (static_cast<double>(qcla_depth_formula(n)) < vbe_depth_model(n, c)) {
            return n;
        }
    }
    return std::nullopt;
}

std::vector<ModelPoint> compare_table(std::int64_t n_from, std::int64_t n_to, double c, bool measure)
{
    if (n_from < 3 || n_to < n_from) {
        throw UsageError(fmt::format("invalid range {}..{}; need 3 <= from <= to", n_from, n_to));
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw UsageError(fmt::format("depth coefficient must be positive, got {}", c));
    }
    std::vector<ModelPoint> rows;
    for (std::int64_t n = n_from; n <= n_to; ++n) {
        ModelPoint p;
        p.n = n;
        p.qcla_depth = qcla_depth_formula(n);
        p.qcla_size = qcla_size_formula(n);
        p.vbe_depth = vbe_depth_model(n, c);
        p.vbe_size = vbe_size_formula(n);
        if (measure) {
            auto q = compile_adder(AdderKind::Qcla, static_cast<std::size_t>(n)).estimate;
            auto v = compile_adder(AdderKind::Vbe, static_cast<std::size_t>(n)).estimate;
            p.measured_qcla = Measured{q.mbqc_depth, q.lattice_sites};
            p.measured_vbe = Measured{v.mbqc_depth, v.lattice_sites};
        }
        rows.push_back(p);
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<ModelPoint> &rows)
{
    out << "n,qcla_depth_formula,qcla_size_formula,vbe_depth_model,vbe_size_formula,"
           "measured_qcla_depth,measured_qcla_sites,measured_vbe_depth,measured_vbe_sites\n";
    auto measured = [](const std::optional<Measured> &m) {
        return m ? fmt::format("{},{}", m->depth, m->sites) : std::string(",");
    };
    for (const ModelPoint &p : rows) {
        out << fmt::format("{},{},{},{},{},{},{}\n", p.n, p.qcla_depth, p.qcla_size, p.vbe_depth, p.vbe_size,
                           measured(p.measured_qcla), measured(p.measured_vbe));
    }
}

std::string reconciliation_report(std::int64_t n, const ResourceEstimate &qcla, const ResourceEstimate &vbe,
                                  double c)
{
    struct Line {
        std::string quantity;
        double measured;
        double closed;
    };
    std::vector<Line> lines;
    if (n >= 3) {
        lines.push_back({"qcla_depth", static_cast<double>(qcla.mbqc_depth),
                         static_cast<double>(qcla_depth_formula(n))});
    }
    lines.push_back({"qcla_sites", static_cast<double>(qcla.lattice_sites), static_cast<double>(qcla_size_formula(n))});
    lines.push_back({"vbe_depth", static_cast<double>(vbe.mbqc_depth), vbe_depth_model(n, c)});
    lines.push_back({"vbe_sites", static_cast<double>(vbe.lattice_sites), static_cast<double>(vbe_size_formula(n))});

    std::string out = fmt::format("reconciliation n={}\n{:<12} {:>12} {:>12} {:>12}\n", n, "quantity", "measured",
                                  "closed-form", "delta");
    for (const Line &l : lines) {
        out += fmt::format("{:<12} {:>12} {:>12} {:>+12}\n", l.quantity, l.measured, l.closed, l.measured - l.closed);
    }
    return out;
}

} // namespace qmbqc
