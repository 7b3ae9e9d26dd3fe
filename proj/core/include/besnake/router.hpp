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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "besnake/circuit.hpp"
#include "besnake/placement.hpp"
#include "besnake/rng.hpp"
#include "besnake/topology.hpp"

namespace besnake {

using SitePath = std::vector<SiteId>;

/// How many shortest paths between operands are considered per goal.
struct PathMode {
    enum class Kind { kSingle, kMulti };

    Kind kind = Kind::kMulti;
    std::size_t budget = 32;

    static PathMode single() { return {Kind::kSingle, 1}; }
    static PathMode multi(std::size_t budget);

    std::size_t limit() const { return kind == Kind::kSingle ? 1 : budget; }
    bool operator==(const PathMode &) const = default;
};

struct RoutingConfig {
    PathMode paths = PathMode::multi(32);
    bool swap_replace = false;
    std::uint64_t rng_seed = 0;
    bool forced_swap_enabled = true;
    /// Optional wall-clock cap on path enumeration (at least one path is
    /// always returned). Makes output timing dependent; off by default.
    std::optional<std::chrono::microseconds> path_time_limit;
};

/// One shuttle of a push chain.
struct ChainMove {
    QubitId q;
    SiteId from;
    SiteId to;
    bool operator==(const ChainMove &) const = default;
};

/// Conveyor of shuttles that clears a blocked site. Moves are listed in
/// execution order: the first fills the vacancy, each later move fills the
/// site the previous one left, and the last vacates the blocked site.
struct PushChain {
    std::vector<ChainMove> moves;
    SiteId vacancy;
};

/// Up to `cfg.paths.limit()` distinct minimum-length paths from a's site to
/// b's site whose interior avoids pinned and reserved sites. Paths are
/// produced in ascending-neighbour DFS order. Empty if no such path exists.
std::vector<SitePath> enumerate_shortest_paths(const Topology &t, const DeviceState &s, QubitId a, QubitId b,
                                               const RoutingConfig &cfg);

/// Keeps the paths with the fewest occupied interior sites, then those with
/// the highest accumulated degree, then picks uniformly with `rng`.
SitePath select_path(const Topology &t, const DeviceState &s, std::span<const SitePath> paths, Rng &rng);

/// Breadth-first search from the blocker through pushable qubits to the
/// nearest empty, unreserved site. A qubit is pushable unless its site is
/// pinned or listed in `forbidden`. Among minimal chains, prefers the fewest
/// displacements onto `remaining_path`, then the highest product of shuttle
/// fidelities, then a uniform draw.
std::optional<PushChain> find_push_chain(const Topology &t, const DeviceState &s, QubitId blocker,
                                         std::span<const SiteId> forbidden, std::span<const SiteId> remaining_path,
                                         Rng &rng);

/// Per-step tally keyed by the number of shuttles a path step needed
/// (push chain plus the operand's own shuttle).
struct StepStats {
    std::size_t steps = 0;
    std::size_t replaced = 0;
    bool operator==(const StepStats &) const = default;
};

struct RouterStats {
    std::size_t forced_swaps = 0;
    std::size_t swap_replacements = 0;
    std::size_t cycle_splits = 0;
    std::map<std::size_t, StepStats> steps_by_shuttles;
};

struct RouteReport {
    Circuit routed;
    Assignment initial_placement;
    std::size_t input_gates = 0;
    std::size_t input_depth = 0;
    std::size_t output_depth = 0;
    std::size_t added_shuttles = 0;
    std::size_t added_swaps = 0;
    std::size_t forced_swaps = 0;
    std::size_t swap_replacements = 0;
    std::size_t cycle_splits = 0;
    std::map<std::size_t, StepStats> steps_by_shuttles;

    std::size_t added_gates() const { return added_shuttles + added_swaps; }
};

enum class GoalStatus { kSatisfied, kFailed };

/// How a goal may resolve a blockade.
enum class BlockadeMode {
    kNone,        // fail on any blockade
    kForcedSwap,  // swap the operand with an immovable obstacle
    kDetour,      // try non-shortest paths up to distance + 2
};

/// Stateful cycle-by-cycle router. Owns the device state and the routed
/// output; one instance routes one circuit.
class Router {
  public:
    Router(const Topology &t, DeviceState initial, RoutingConfig cfg);

    /// Moves operand a along a selected shortest path until it is adjacent
    /// to b, then pins both. On failure the state and output are restored.
    GoalStatus route_two_qubit_goal(const TwoQubitGate &g, BlockadeMode mode = BlockadeMode::kNone);

    /// Shuttles q into a neighbouring column (pushing if cheaper), pins the
    /// destination, reserves the origin, and queues the return move.
    GoalStatus route_z_goal(const ZGate &g, BlockadeMode mode = BlockadeMode::kNone);

    /// One path step: shuttle into `next` if free, else push the blocker
    /// away (or replace the whole step by a SWAP when that is more faithful).
    /// Appends one cycle and returns true, or returns false on a blockade.
    bool advance_operand(QubitId operand, SiteId next, std::span<const SiteId> remaining_path,
                         std::span<const SiteId> forbidden, bool allow_forced_swap = false);

    /// Routes one input cycle of TQG/Z gates, applying the blockade
    /// mechanisms in order: revisit, split, forced SWAP. Returns the emitted
    /// cycles. Throws RoutingError if a goal stays unroutable.
    std::vector<Cycle> route_cycle(const Cycle &input);

    const DeviceState &state() const { return state_; }
    const Circuit &output() const { return output_; }
    const RouterStats &stats() const { return stats_; }

  private:
    struct ZReturn {
        QubitId q;
        SiteId origin;
        std::optional<QubitId> swapped_with;
    };

    struct Snapshot {
        DeviceState state;
        std::size_t output_cycles;
        RouterStats stats;
        std::size_t z_returns;
    };

    Snapshot snapshot() const;
    // Emits the executed gates plus the shared Z-return cycle, then releases
    // every pin.
    void flush_satisfied(std::vector<Gate> gates);
    void restore(Snapshot snap);
    GoalStatus attempt(const Gate &goal, BlockadeMode mode);
    bool walk_path(QubitId a, QubitId b, const SitePath &path, bool allow_forced_swap);
    GoalStatus detour(const TwoQubitGate &g);
    void emit(Cycle c) { output_.cycles.push_back(std::move(c)); }

    const Topology &topo_;
    DeviceState state_;
    RoutingConfig cfg_;
    Rng rng_;
    Circuit output_;
    RouterStats stats_;
    std::vector<ZReturn> z_returns_;
    std::vector<QubitId> busy_;
    std::size_t input_index_ = 0;
};

/// Routes a whole circuit (TQG/Z gates only) from the given placement.
RouteReport route_circuit(const Topology &t, const DeviceState &initial, const Circuit &c, const RoutingConfig &cfg);

/// Library entry point taking CLI-style topology and placement specs.
RouteReport route(std::string_view topology_spec, std::string_view placement_spec, const Circuit &c,
                  const RoutingConfig &cfg, double shuttle_fidelity = kDefaultShuttleFidelity,
                  double swap_fidelity = kDefaultSwapFidelity);

/// Parses `single` or `budget:K`.
PathMode parse_path_mode(std::string_view spec);

}  // namespace besnake
