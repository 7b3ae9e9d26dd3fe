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

#include "besnake/metrics.hpp"

#include "besnake/errors.hpp"

namespace besnake {

namespace {

double percent_growth(std::size_t before, std::size_t after) {
    return 100.0 * (static_cast<double>(after) - static_cast<double>(before)) / static_cast<double>(before);
}

}  // namespace

double gate_overhead(const Circuit &original, const Circuit &routed) {
    const auto n = gate_count(original);
    if (n == 0) throw UndefinedMetric("gate overhead of an empty circuit is undefined");
    return percent_growth(n, gate_count(routed));
}

double depth_overhead(const Circuit &original, const Circuit &routed) {
    const auto d = depth(original);
    if (d == 0) throw UndefinedMetric("depth overhead of a zero-depth circuit is undefined");
    return percent_growth(d, depth(routed));
}

OverheadMetrics compute_overheads(const Circuit &original, const Circuit &routed) {
    OverheadMetrics m;
    m.gate_overhead_pct = gate_overhead(original, routed);
    m.depth_overhead_pct = depth_overhead(original, routed);
    m.added_gate_counts["shuttle"] = 0;
    m.added_gate_counts["swap"] = 0;
    for (const auto &c : routed.cycles) {
        for (const auto &g : c.gates) {
            if (is_movement(g)) ++m.added_gate_counts[gate_name(g)];
        }
    }
    return m;
}

}  // namespace besnake
