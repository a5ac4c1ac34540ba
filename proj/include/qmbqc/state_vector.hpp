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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qmbqc {

using Complex = std::complex<double>;
using SiteId = int;

/// Default upper bound on simulated qubits (2^20 amplitudes, 16 MiB).
inline constexpr std::size_t kDefaultQubitLimit = 20;

/// Dense state over a list of labelled qubits.
///
/// Qubit at position i is bit i of the amplitude index. Each position carries
/// a site label so that cluster simulations can address qubits by lattice
/// site; circuit simulations use labels 0..n-1.
class StateVector {
public:
    /// |0...0> over the given sites.
    explicit StateVector(std::vector<SiteId> sites, std::size_t limit = kDefaultQubitLimit);

    /// |0...0> over sites 0..n-1.
    static StateVector zeros(std::size_t n, std::size_t limit = kDefaultQubitLimit);

    /// Computational basis state; bits[i] is the value of position i.
    static StateVector basis(std::span<const std::uint8_t> bits, std::size_t limit = kDefaultQubitLimit);

    /// Wraps explicit amplitudes (not renormalized).
    static StateVector from_amplitudes(std::vector<Complex> amps, std::vector<SiteId> sites);

    std::size_t num_qubits() const { return sites_.size(); }
    std::size_t dimension() const { return amps_.size(); }
    const std::vector<SiteId> &sites() const { return sites_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_[index]; }

    bool has_site(SiteId site) const;
    /// Position of a site label; throws InvalidInput if absent.
    std::size_t position(SiteId site) const;

    double norm() const;
    void normalize();

    void apply_x(std::size_t q);
    void apply_z(std::size_t q);
    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    /// diag(1, e^{i phi})
    void apply_phase(std::size_t q, double phi);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_toffoli(std::size_t c0, std::size_t c1, std::size_t target);
    void apply_ccz(std::size_t a, std::size_t b, std::size_t c);

    /// Tensor product: this state on the low positions, other on the high ones.
    StateVector tensor(const StateVector &other) const;

    /// Projects position q onto the (unnormalized) single-qubit bra
    /// (conj(b0), conj(b1)) and removes it. Returns the squared norm of the
    /// projected branch; the remaining state is left unnormalized.
    double project_out(std::size_t q, Complex b0, Complex b1);

    /// Squared norm project_out would return, without modifying the state.
    double projection_weight(std::size_t q, Complex b0, Complex b1) const;

    /// Reorders positions so that sites appear in the given order.
    StateVector permuted(std::span<const SiteId> order) const;

private:
    StateVector() = default;

    std::vector<Complex> amps_;
    std::vector<SiteId> sites_;
};

/// <a|b>. Throws InvalidInput on dimension mismatch.
Complex inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2 / (|a|^2 |b|^2), i.e. fidelity up to global phase.
double fidelity(const StateVector &a, const StateVector &b);

} // namespace qmbqc
