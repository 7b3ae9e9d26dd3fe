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
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "besnake/ids.hpp"

namespace besnake {

/// Two-qubit gate; operands must sit on coupled sites when it executes.
struct TwoQubitGate {
    QubitId a;
    QubitId b;
    bool operator==(const TwoQubitGate &) const = default;
};

/// Shuttle-based Z rotation on one qubit.
struct ZGate {
    QubitId q;
    bool operator==(const ZGate &) const = default;
};

/// Router-emitted relocation of `q` from one site to an adjacent empty one.
struct Shuttle {
    QubitId q;
    SiteId from;
    SiteId to;
    bool operator==(const Shuttle &) const = default;
};

/// Router-emitted exchange of two adjacent qubits.
struct Swap {
    QubitId q;
    QubitId r;
    SiteId site_q;
    SiteId site_r;
    bool operator==(const Swap &) const = default;
};

using Gate = std::variant<TwoQubitGate, ZGate, Shuttle, Swap>;

/// Gates executed in one time step. Order matters only for shuttles, which
/// are applied in listed order (conveyor chains).
struct Cycle {
    std::vector<Gate> gates;
    bool operator==(const Cycle &) const = default;
};

struct Circuit {
    std::size_t n_qubits = 0;
    std::vector<Cycle> cycles;
    bool operator==(const Circuit &) const = default;
};

/// Initial site of each qubit, as recorded in routed files.
using Assignment = std::vector<std::pair<QubitId, SiteId>>;

/// A routed file: circuit plus the placement it was routed from.
struct RoutedFile {
    Assignment placement;
    Circuit circuit;
    bool operator==(const RoutedFile &) const = default;
};

/// Logical qubits a gate touches (one or two).
std::vector<QubitId> operands(const Gate &g);
bool is_movement(const Gate &g);
std::string gate_name(const Gate &g);

/// Checks per-gate invariants and the per-cycle exclusivity rule; throws
/// InvalidArgument on the first violation.
void validate(const Circuit &c);

/// Reads the line-based circuit format:
///
///     qubits <N>
///     cycle <gate> (; <gate>)*
///
/// with gates `tqg q r`, `z q`, `shuttle q @from>to`, `swap q r @sq,sr`.
/// Throws ParseError with the offending line number.
Circuit parse_circuit(std::string_view text);

/// Like parse_circuit but also accepts one `place q@site ...` header line.
RoutedFile parse_routed(std::string_view text);

std::string emit_circuit(const Circuit &c);
std::string emit_routed(const RoutedFile &f);

std::string format_gate(const Gate &g);

/// Packs gates into the earliest cycle after the last cycle that used any of
/// their operands. Gate order in the input defines dependency order.
Circuit schedule_asap(const Circuit &c);

/// One gate per cycle, original order.
Circuit serialize_circuit(const Circuit &c);

std::size_t depth(const Circuit &c);
std::size_t gate_count(const Circuit &c);

}  // namespace besnake
