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
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "besnake/circuit.hpp"
#include "besnake/router.hpp"

namespace besnake {

/// n_gates gates, one per cycle. Each is a TQG on a uniform distinct pair
/// with probability tqg_pct/100, otherwise a Z on a uniform qubit.
Circuit gen_random_circuit(std::size_t n_qubits, std::size_t n_gates, double tqg_pct, std::uint64_t seed);

/// Comparison router: one gate per step, walking one operand along a single
/// shortest path, swapping with every occupant and shuttling into holes. Z
/// gates move to a lateral neighbour and back, each in its own cycle.
RouteReport baseline_serial_swap_route(const Topology &t, const DeviceState &s0, const Circuit &c,
                                       std::uint64_t seed);

enum class Schedule { kAsap, kSerial };

struct BenchSpec {
    std::string topology = "grid:auto";  // grid[+diag]:RxC or grid[+diag]:auto
    std::string placement = "checkerboard";
    std::vector<std::size_t> qubits;     // checkerboard sizes
    std::vector<double> densities;       // density:... sweep points
    std::vector<double> tqg_pct{25, 50, 75};
    std::size_t n_gates = 3000;
    std::size_t samples = 10;
    Schedule schedule = Schedule::kAsap;
    RoutingConfig config;
    double shuttle_fidelity = kDefaultShuttleFidelity;
    double swap_fidelity = kDefaultSwapFidelity;
    std::uint64_t seed = 1;
};

/// `key = value` lines; `#` starts a comment; lists are comma separated,
/// optionally in brackets. Keys: topology, placement, qubits, tqg_pct, gates,
/// samples, schedule, paths, swap_replace, shuttle_fidelity, swap_fidelity,
/// seed.
BenchSpec parse_bench_spec(std::string_view text);

struct BenchRow {
    std::uint64_t seed = 0;
    std::size_t qubits = 0;
    double tqg_pct = 0;
    double gate_overhead_pct = 0;
    double depth_overhead_pct = 0;
    double routing_time_ms = 0;
    std::size_t added_shuttles = 0;
    std::size_t added_swaps = 0;
    std::size_t cycle_splits = 0;
};

/// Thrown when an inline verification fails; carries the job seed.
class BenchFailure : public std::runtime_error {
  public:
    BenchFailure(std::uint64_t seed, const std::string &what) : std::runtime_error(what), seed_(seed) {}
    std::uint64_t seed() const noexcept { return seed_; }

  private:
    std::uint64_t seed_;
};

struct BenchOptions {
    bool baseline = false;
    std::size_t jobs = 1;
};

/// One row per (sweep point, tqg_pct, sample), in that nesting order
/// regardless of `jobs`. Every routed circuit is verified inline.
std::vector<BenchRow> run_bench(const BenchSpec &spec, const BenchOptions &opts = {});

inline constexpr std::string_view kCsvHeader =
    "seed,qubits,tqg_pct,gate_overhead_pct,depth_overhead_pct,routing_time_ms,added_shuttles,added_swaps,cycle_splits";

void write_csv(std::ostream &os, const std::vector<BenchRow> &rows);

/// Side length used by `grid:auto` for n qubits: ceil(sqrt(2n)).
std::size_t auto_grid_side(std::size_t n_qubits);

}  // namespace besnake
