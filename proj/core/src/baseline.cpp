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

#include <algorithm>

#include "besnake/bench.hpp"
#include "besnake/errors.hpp"

namespace besnake {

namespace {

class SerialRouter {
  public:
    SerialRouter(const Topology &t, DeviceState s, std::uint64_t seed)
        : t_(t), s_(std::move(s)), rng_(seed) {
        out_.n_qubits = s_.num_qubits();
    }

    void step(QubitId q, SiteId to) {
        const auto from = s_.position(q);
        if (auto r = s_.qubit_at(to)) {
            out_.cycles.push_back(Cycle{{Swap{q, *r, from, to}}});
            s_.swap(t_, q, *r);
        } else {
            out_.cycles.push_back(Cycle{{Shuttle{q, from, to}}});
            s_.shuttle(t_, q, to);
        }
    }

    void tqg(const TwoQubitGate &g) {
        RoutingConfig cfg;
        cfg.paths = PathMode::multi(32);
        const auto paths = enumerate_shortest_paths(t_, s_, g.a, g.b, cfg);
        const auto &path = paths.at(paths.size() == 1 ? 0 : rng_.below(paths.size()));
        for (std::size_t i = 1; i + 1 < path.size(); ++i) step(g.a, path[i]);
        out_.cycles.push_back(Cycle{{g}});
    }

    void z(const ZGate &g) {
        const auto origin = s_.position(g.q);
        std::optional<SiteId> target;
        for (int tier = 0; tier < 2 && !target; ++tier) {
            for (const auto &nb : t_.neighbors(origin)) {
                if (lateral_tier(origin, nb.site) == tier) {
                    target = nb.site;
                    break;
                }
            }
        }
        if (!target) throw RoutingError("baseline: qubit " + std::to_string(g.q.value) + " has no lateral neighbour");
        step(g.q, *target);
        out_.cycles.push_back(Cycle{{g}});
        step(g.q, origin);
    }

    const Circuit &output() const { return out_; }

  private:
    int lateral_tier(SiteId from, SiteId x) const {
        if (!t_.has_coordinates()) return 0;
        const auto c0 = *t_.column(from), c1 = *t_.column(x);
        if (c0 + 1 != c1 && c1 + 1 != c0) return -1;
        return *t_.row(from) == *t_.row(x) ? 0 : 1;
    }

    const Topology &t_;
    DeviceState s_;
    Rng rng_;
    Circuit out_;
};

}  // namespace

RouteReport baseline_serial_swap_route(const Topology &t, const DeviceState &s0, const Circuit &c,
                                       std::uint64_t seed) {
    validate(c);
    SerialRouter router(t, s0, seed);
    for (const auto &cycle : c.cycles) {
        for (const auto &g : cycle.gates) {
            if (const auto *tq = std::get_if<TwoQubitGate>(&g)) {
                router.tqg(*tq);
            } else if (const auto *z = std::get_if<ZGate>(&g)) {
                router.z(*z);
            } else {
                throw InvalidArgument("only tqg and z gates can be routed, got " + gate_name(g));
            }
        }
    }

    RouteReport r;
    r.routed = router.output();
    r.initial_placement = s0.assignment();
    r.input_gates = gate_count(c);
    r.input_depth = depth(c);
    r.output_depth = depth(r.routed);
    for (const auto &cy : r.routed.cycles) {
        for (const auto &g : cy.gates) {
            r.added_shuttles += std::holds_alternative<Shuttle>(g);
            r.added_swaps += std::holds_alternative<Swap>(g);
        }
    }
    r.forced_swaps = r.added_swaps;
    return r;
}

}  // namespace besnake
