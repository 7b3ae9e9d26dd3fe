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

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>

namespace besnake {

/// Physical location (quantum dot). Grid topologies number sites row-major
/// with row 0 at the bottom: index = row * cols + col.
struct SiteId {
    std::uint32_t value = 0;

    constexpr SiteId() = default;
    constexpr explicit SiteId(std::uint32_t v) : value(v) {}
    constexpr auto operator<=>(const SiteId &) const = default;
};

/// Logical qubit named by a circuit.
struct QubitId {
    std::uint32_t value = 0;

    constexpr QubitId() = default;
    constexpr explicit QubitId(std::uint32_t v) : value(v) {}
    constexpr auto operator<=>(const QubitId &) const = default;
};

constexpr std::size_t index(SiteId s) { return s.value; }
constexpr std::size_t index(QubitId q) { return q.value; }

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace besnake

template <>
struct std::hash<besnake::SiteId> {
    std::size_t operator()(besnake::SiteId s) const noexcept { return s.value; }
};

template <>
struct std::hash<besnake::QubitId> {
    std::size_t operator()(besnake::QubitId q) const noexcept { return q.value; }
};
