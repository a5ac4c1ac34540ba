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

#include <stdexcept>
#include <string>

namespace qmbqc {

/// Malformed input data: wrong widths, bad indices, dimension mismatches.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric argument outside the domain of a generator or formula.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A simulation would exceed the configured qubit limit.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A caller broke a precondition of an operation (re-measurement,
/// unlabeled circuits, mismatched provenance, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A forced measurement outcome has zero probability.
class ImpossibleBranch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unsupported option values (formats, gate names) reaching the library.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace qmbqc
