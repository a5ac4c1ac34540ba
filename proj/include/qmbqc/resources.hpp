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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qmbqc/compile.hpp"

namespace qmbqc {

/// floor(log2 n) + floor(log2(n / 3)) + 5, for n >= 3. The second term is
/// the largest k with 3 * 2^k <= n. Throws DomainError below 3.
std::int64_t qcla_depth_formula(std::int64_t n);

/// 1011 n + 224 n floor(log2 n). Throws DomainError for n < 1.
std::int64_t qcla_size_formula(std::int64_t n);

/// 304 n. Throws DomainError for n < 1.
std::int64_t vbe_size_formula(std::int64_t n);

/// c * n. The coefficient is a placeholder for the unstated ripple-carry
/// constant. Throws DomainError for n < 1 or c <= 0.
double vbe_depth_model(std::int64_t n, double c = 1.0);

/// Smallest n in [lo, hi] with qcla_depth_formula(n) < c * n.
std::optional<std::int64_t> find_crossover(double c, std::int64_t lo = 3, std::int64_t hi = 128);

struct Measured {
    int depth = 0;
    std::size_t sites = 0;
};

struct ModelPoint {
    std::int64_t n = 0;
    std::int64_t qcla_depth = 0;
    std::int64_t qcla_size = 0;
    double vbe_depth = 0.0;
    std::int64_t vbe_size = 0;
    std::optional<Measured> measured_qcla;
    std::optional<Measured> measured_vbe;
};

/// One row per n in [n_from, n_to]. With measure set, both adders are
/// compiled and their depth and site counts recorded. Throws UsageError
/// unless 3 <= n_from <= n_to.
std::vector<ModelPoint> compare_table(std::int64_t n_from, std::int64_t n_to, double c = 1.0,
                                      bool measure = false);

/// Header plus one line per row; unmeasured fields are left empty.
void write_csv(std::ostream &out, const std::vector<ModelPoint> &rows);

/// Plain-text table of measured against closed-form values for one n.
/// Columns: quantity, measured, closed-form, delta.
std::string reconciliation_report(std::int64_t n, const ResourceEstimate &qcla, const ResourceEstimate &vbe,
                                  double c = 1.0);

} // namespace qmbqc
