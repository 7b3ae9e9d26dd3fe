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
#include <string>
#include <string_view>
#include <vector>

#include "besnake/circuit.hpp"
#include "besnake/placement.hpp"
#include "besnake/topology.hpp"

namespace besnake {

enum class ViolationKind {
    kOccupancy,
    kAdjacency,
    kMismatch,
    kParallelConflict,
    kTqgNotAdjacent,
    kZNotRestored,
    kZDirection,
    kZReturnSplit,
    kCompleteness,
    kOrder,
    kUnknownQubit,
    kPlacement,
};

std::string_view to_string(ViolationKind k);

struct Violation {
    std::size_t cycle = 0;
    std::size_t gate = 0;
    ViolationKind kind{};
    std::string message;
};

struct VerificationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    /// One line per violation.
    std::string describe() const;
};

/// Replays `routed` from `s0` with its own occupancy model. Shuttles inside a
/// cycle apply in listed order. Violations are collected, never thrown.
VerificationReport verify_trace(const Topology &t, const DeviceState &s0, const Circuit &routed,
                                const Circuit &original);

/// Like verify_trace, and also checks the file's placement header against s0.
VerificationReport verify_routed_file(const Topology &t, const DeviceState &s0, const RoutedFile &routed,
                                      const Circuit &original);

}  // namespace besnake
