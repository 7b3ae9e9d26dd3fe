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

#include <charconv>

#include "besnake/errors.hpp"
#include "besnake/router.hpp"

namespace besnake {

PathMode parse_path_mode(std::string_view spec) {
    if (spec == "single") return PathMode::single();
    if (spec.starts_with("budget:")) {
        const auto body = spec.substr(7);
        std::size_t k = 0;
        auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
        if (ec == std::errc() && p == body.data() + body.size()) return PathMode::multi(k);
    }
    throw InvalidArgument("path mode must be 'single' or 'budget:K', got '" + std::string(spec) + "'");
}

RouteReport route(std::string_view topology_spec, std::string_view placement_spec, const Circuit &c,
                  const RoutingConfig &cfg, double shuttle_fidelity, double swap_fidelity) {
    const auto topo = parse_topology_spec(topology_spec, shuttle_fidelity, swap_fidelity);
    const auto initial = parse_placement_spec(topo, placement_spec, c.n_qubits);
    return route_circuit(topo, initial, c, cfg);
}

}  // namespace besnake
