// Copyright 2026 The besnake Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace besnake {

/// Bad caller input: dimensions, fidelities, spec strings, unknown edges.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Consecutive path sites that are not coupled.
class InvalidPath : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

/// More qubits requested than a placement can hold.
class CapacityError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

/// Circuit text that does not follow the grammar. Carries the 1-based line.
class ParseError : public InvalidArgument {
  public:
    ParseError(std::size_t line, const std::string &what)
        : InvalidArgument("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Base for rejected device-state mutations. The state is left unchanged.
class MoveViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class OccupancyViolation : public MoveViolation {
  public:
    using MoveViolation::MoveViolation;
};

class AdjacencyViolation : public MoveViolation {
  public:
    using MoveViolation::MoveViolation;
};

class FixedSiteViolation : public MoveViolation {
  public:
    using MoveViolation::MoveViolation;
};

/// The router exhausted every blockade mechanism. Carries a diagnostic trace.
class RoutingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Overhead percentage with a zero denominator.
class UndefinedMetric : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace besnake
