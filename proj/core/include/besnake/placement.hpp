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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "besnake/circuit.hpp"
#include "besnake/ids.hpp"
#include "besnake/topology.hpp"

namespace besnake {

/// Occupancy of the device: a partial bijection between qubits and sites,
/// plus the router's pins.
///
/// Fixed sites hold qubits that must not move (satisfied operands, Z-gate
/// destinations). Fixed-empty sites are vacated Z-gate origins that must stay
/// free until the return shuttle. Every mutator validates first and leaves the
/// state untouched when it throws.
class DeviceState {
  public:
    DeviceState(std::size_t num_sites, std::size_t num_qubits);

    /// Places qubits per the assignment; throws on duplicates or bad sites.
    static DeviceState from_assignment(const Topology &t, std::size_t num_qubits, const Assignment &a);

    std::size_t num_sites() const noexcept { return qubit_at_.size(); }
    std::size_t num_qubits() const noexcept { return site_of_.size(); }
    std::size_t num_placed() const noexcept { return placed_; }

    std::optional<SiteId> site_of(QubitId q) const;
    /// Site of a placed qubit; throws InvalidArgument otherwise.
    SiteId position(QubitId q) const;
    std::optional<QubitId> qubit_at(SiteId s) const;
    bool occupied(SiteId s) const { return qubit_at_.at(index(s)) != kNone; }

    bool is_fixed(SiteId s) const { return fixed_.at(index(s)); }
    bool is_fixed_empty(SiteId s) const { return fixed_empty_.at(index(s)); }
    std::vector<SiteId> fixed_sites() const;
    std::vector<SiteId> fixed_empty_sites() const;

    void place(QubitId q, SiteId s);
    /// Pins an occupied site.
    void fix(SiteId s);
    /// Reserves an empty site (a vacated Z origin).
    void reserve_empty(SiteId s);
    void release_all();

    /// Moves q to an adjacent empty site. A pinned qubit cannot move, and a
    /// reserved empty site is only enterable with `z_override`, which
    /// consumes the reservation.
    void shuttle(const Topology &t, QubitId q, SiteId to, bool z_override = false);

    /// Exchanges two qubits on coupled sites; neither may be pinned.
    void swap(const Topology &t, QubitId q, QubitId r);

    Assignment assignment() const;

    /// Throws std::logic_error if the maps are not mutually inverse or a pin
    /// contradicts occupancy.
    void check_invariants() const;

    bool operator==(const DeviceState &) const = default;

  private:
    void debug_check() const {
#ifndef NDEBUG
        check_invariants();
#endif
    }

    std::vector<std::uint32_t> site_of_;   // per qubit, kNone if unplaced
    std::vector<std::uint32_t> qubit_at_;  // per site, kNone if empty
    std::vector<bool> fixed_;
    std::vector<bool> fixed_empty_;
    std::size_t placed_ = 0;
};

/// Qubits 0..n-1 on the (row + col) even sites of a grid, ascending site id.
DeviceState checkerboard_init(const Topology &t, std::size_t n_qubits);

/// round(density * sites) qubits on sites 0, 1, 2, ... (bottom row first,
/// left to right). At least one site must stay empty.
DeviceState density_init(const Topology &t, double density);

/// `checkerboard` (places n_qubits) or `density:<f>`.
DeviceState parse_placement_spec(const Topology &t, std::string_view spec, std::size_t n_qubits);

/// Text snapshot: grid rows top to bottom, '.' for empty sites; non-grid
/// topologies print one `site:qubit` pair per occupied site.
std::string render_board(const Topology &t, const DeviceState &s);

}  // namespace besnake
