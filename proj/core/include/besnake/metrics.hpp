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
#include <map>
#include <string>

#include "besnake/circuit.hpp"

namespace besnake {

struct OverheadMetrics {
    double gate_overhead_pct = 0;
    double depth_overhead_pct = 0;
    std::map<std::string, std::size_t> added_gate_counts;  // by gate name
};

/// 100 * (gates(routed) - gates(original)) / gates(original).
/// Throws UndefinedMetric for an empty original.
double gate_overhead(const Circuit &original, const Circuit &routed);

/// 100 * (depth(routed) - depth(original)) / depth(original).
/// Throws UndefinedMetric for zero input depth.
double depth_overhead(const Circuit &original, const Circuit &routed);

OverheadMetrics compute_overheads(const Circuit &original, const Circuit &routed);

}  // namespace besnake
