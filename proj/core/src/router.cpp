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
#include <array>
#include <sstream>

#include "besnake/errors.hpp"
#include "besnake/router.hpp"

namespace besnake {

namespace {

constexpr std::size_t kMaxDetourPaths = 4096;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double chain_fidelity(const Topology &t, const PushChain &chain) {
    double f = 1.0;
    for (const auto &m : chain.moves) f *= t.fidelity(m.from, m.to, MoveKind::kShuttle);
    return f;
}

void append_chain(std::vector<Gate> &gates, const PushChain &chain) {
    for (const auto &m : chain.moves) gates.emplace_back(Shuttle{m.q, m.from, m.to});
}

}  // namespace

Router::Router(const Topology &t, DeviceState initial, RoutingConfig cfg)
    : topo_(t), state_(std::move(initial)), cfg_(cfg), rng_(cfg.rng_seed) {
    if (state_.num_sites() != t.num_sites()) throw InvalidArgument("device state does not match topology size");
    output_.n_qubits = state_.num_qubits();
}

Router::Snapshot Router::snapshot() const { return {state_, output_.cycles.size(), stats_, z_returns_.size()}; }

void Router::restore(Snapshot snap) {
    state_ = std::move(snap.state);
    output_.cycles.resize(snap.output_cycles);
    stats_ = std::move(snap.stats);
    z_returns_.resize(snap.z_returns);
}

bool Router::advance_operand(QubitId operand, SiteId next, std::span<const SiteId> remaining_path,
                             std::span<const SiteId> forbidden, bool allow_forced_swap) {
    const auto from = state_.position(operand);
    if (!topo_.adjacent(from, next)) throw InvalidArgument("advance_operand: next site is not adjacent");
    if (state_.is_fixed(next) || state_.is_fixed_empty(next)) return false;

    if (!state_.occupied(next)) {
        emit(Cycle{{Shuttle{operand, from, next}}});
        state_.shuttle(topo_, operand, next);
        ++stats_.steps_by_shuttles[1].steps;
        return true;
    }

    const auto blocker = *state_.qubit_at(next);
    const auto chain = find_push_chain(topo_, state_, blocker, forbidden, remaining_path, rng_);
    if (!chain) {
        if (!allow_forced_swap) return false;
        emit(Cycle{{Swap{operand, blocker, from, next}}});
        state_.swap(topo_, operand, blocker);
        ++stats_.forced_swaps;
        return true;
    }

    const auto shuttles = chain->moves.size() + 1;
    auto &tally = stats_.steps_by_shuttles[shuttles];
    ++tally.steps;
    const double shuttle_f = chain_fidelity(topo_, *chain) * topo_.fidelity(from, next, MoveKind::kShuttle);
    if (cfg_.swap_replace && shuttle_f < topo_.fidelity(from, next, MoveKind::kSwap)) {
        emit(Cycle{{Swap{operand, blocker, from, next}}});
        state_.swap(topo_, operand, blocker);
        ++tally.replaced;
        ++stats_.swap_replacements;
        return true;
    }

    Cycle c;
    append_chain(c.gates, *chain);
    c.gates.emplace_back(Shuttle{operand, from, next});
    for (const auto &m : chain->moves) state_.shuttle(topo_, m.q, m.to);
    state_.shuttle(topo_, operand, next);
    emit(std::move(c));
    return true;
}

bool Router::walk_path(QubitId a, QubitId b, const SitePath &path, bool allow_forced_swap) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const std::array<SiteId, 2> forbidden{state_.position(a), state_.position(b)};
        const std::span<const SiteId> remaining(path.data() + i + 1, path.size() - i - 2);
        if (!advance_operand(a, path[i], remaining, forbidden, allow_forced_swap)) return false;
    }
    return true;
}

GoalStatus Router::route_two_qubit_goal(const TwoQubitGate &g, BlockadeMode mode) {
    const auto sa = state_.position(g.a);
    const auto sb = state_.position(g.b);
    if (!topo_.adjacent(sa, sb)) {
        if (mode == BlockadeMode::kDetour) {
            if (detour(g) == GoalStatus::kFailed) return GoalStatus::kFailed;
        } else {
            const auto paths = enumerate_shortest_paths(topo_, state_, g.a, g.b, cfg_);
            if (paths.empty()) return GoalStatus::kFailed;
            const auto path = select_path(topo_, state_, paths, rng_);
            auto snap = snapshot();
            if (!walk_path(g.a, g.b, path, mode == BlockadeMode::kForcedSwap)) {
                restore(std::move(snap));
                return GoalStatus::kFailed;
            }
        }
    }
    state_.fix(state_.position(g.a));
    state_.fix(state_.position(g.b));
    return GoalStatus::kSatisfied;
}

GoalStatus Router::detour(const TwoQubitGate &g) {
    const auto src = state_.position(g.a);
    const auto dst = state_.position(g.b);
    auto blocked = [&](SiteId x) { return x != dst && (state_.is_fixed(x) || state_.is_fixed_empty(x)); };

    // Bound by distance + 2 in the unblocked subgraph.
    std::vector<std::size_t> dist(topo_.num_sites(), SIZE_MAX);
    std::vector<SiteId> queue{dst};
    dist[index(dst)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto u = queue[head];
        for (const auto &nb : topo_.neighbors(u)) {
            if (dist[index(nb.site)] != SIZE_MAX || (nb.site != src && blocked(nb.site))) continue;
            dist[index(nb.site)] = dist[index(u)] + 1;
            queue.push_back(nb.site);
        }
    }
    if (dist[index(src)] == SIZE_MAX) return GoalStatus::kFailed;
    const auto max_len = dist[index(src)] + 2;

    std::vector<SitePath> paths;
    SitePath current{src};
    std::vector<bool> on_path(topo_.num_sites(), false);
    on_path[index(src)] = true;
    auto dfs = [&](auto &&self) -> void {
        const auto u = current.back();
        if (u == dst) {
            paths.push_back(current);
            return;
        }
        for (const auto &nb : topo_.neighbors(u)) {
            if (paths.size() >= kMaxDetourPaths) return;
            const auto v = nb.site;
            if (on_path[index(v)] || blocked(v) || dist[index(v)] == SIZE_MAX) continue;
            if (current.size() + dist[index(v)] > max_len) continue;
            on_path[index(v)] = true;
            current.push_back(v);
            self(self);
            current.pop_back();
            on_path[index(v)] = false;
        }
    };
    dfs(dfs);
    std::stable_sort(paths.begin(), paths.end(), [](const auto &x, const auto &y) { return x.size() < y.size(); });

    for (const auto &p : paths) {
        auto snap = snapshot();
        if (walk_path(g.a, g.b, p, false)) return GoalStatus::kSatisfied;
        restore(std::move(snap));
    }
    return GoalStatus::kFailed;
}

GoalStatus Router::route_z_goal(const ZGate &g, BlockadeMode mode) {
    const auto q = g.q;
    const auto from = state_.position(q);
    if (state_.is_fixed(from)) return GoalStatus::kFailed;

    auto tier_of = [&](SiteId x) -> int {
        if (!topo_.has_coordinates()) return 0;
        const auto r0 = *topo_.row(from), c0 = *topo_.column(from);
        const auto r1 = *topo_.row(x), c1 = *topo_.column(x);
        if (c0 + 1 != c1 && c1 + 1 != c0) return -1;
        return r0 == r1 ? 0 : 1;
    };

    struct Option {
        SiteId target;
        std::optional<PushChain> chain;
        std::size_t cost;
        double fidelity;
    };
    const std::array<SiteId, 1> forbidden{from};
    for (int tier = 0; tier < 2; ++tier) {
        std::vector<Option> options;
        for (const auto &nb : topo_.neighbors(from)) {
            const auto x = nb.site;
            if (tier_of(x) != tier || state_.is_fixed(x)) continue;
            if (!state_.occupied(x)) {
                options.push_back({x, std::nullopt, 1, nb.shuttle_fidelity});
                continue;
            }
            auto chain = find_push_chain(topo_, state_, *state_.qubit_at(x), forbidden, {}, rng_);
            if (!chain) continue;
            const auto cost = chain->moves.size() + 1;
            const auto f = chain_fidelity(topo_, *chain) * nb.shuttle_fidelity;
            options.push_back({x, std::move(chain), cost, f});
        }
        if (options.empty()) continue;

        std::vector<std::size_t> best;
        for (std::size_t i = 0; i < options.size(); ++i) {
            if (!best.empty()) {
                const auto &b = options[best.front()];
                const auto &o = options[i];
                if (o.cost > b.cost || (o.cost == b.cost && o.fidelity < b.fidelity)) continue;
                if (o.cost < b.cost || o.fidelity > b.fidelity) best.clear();
            }
            best.push_back(i);
        }
        const auto &pick = options[best[best.size() == 1 ? 0 : rng_.below(best.size())]];

        Cycle c;
        if (pick.chain) {
            append_chain(c.gates, *pick.chain);
            for (const auto &m : pick.chain->moves) state_.shuttle(topo_, m.q, m.to);
        }
        c.gates.emplace_back(Shuttle{q, from, pick.target});
        state_.shuttle(topo_, q, pick.target, true);
        emit(std::move(c));
        state_.reserve_empty(from);
        state_.fix(pick.target);
        z_returns_.push_back({q, from, std::nullopt});
        return GoalStatus::kSatisfied;
    }

    if (mode != BlockadeMode::kForcedSwap) return GoalStatus::kFailed;
    for (int tier = 0; tier < 2; ++tier) {
        for (const auto &nb : topo_.neighbors(from)) {
            const auto x = nb.site;
            if (tier_of(x) != tier || state_.is_fixed(x) || !state_.occupied(x)) continue;
            const auto r = *state_.qubit_at(x);
            if (std::find(busy_.begin(), busy_.end(), r) != busy_.end()) continue;
            emit(Cycle{{Swap{q, r, from, x}}});
            state_.swap(topo_, q, r);
            state_.fix(from);
            state_.fix(x);
            ++stats_.forced_swaps;
            z_returns_.push_back({q, from, r});
            return GoalStatus::kSatisfied;
        }
    }
    return GoalStatus::kFailed;
}

GoalStatus Router::attempt(const Gate &goal, BlockadeMode mode) {
    return std::visit(Overloaded{
                          [&](const TwoQubitGate &g) { return route_two_qubit_goal(g, mode); },
                          [&](const ZGate &g) { return route_z_goal(g, mode); },
                          [](const auto &) -> GoalStatus { throw InvalidArgument("only tqg and z gates can be routed"); },
                      },
                      goal);
}

void Router::flush_satisfied(std::vector<Gate> gates) {
    if (!gates.empty()) emit(Cycle{std::move(gates)});
    state_.release_all();
    if (z_returns_.empty()) return;
    Cycle back;
    for (auto it = z_returns_.rbegin(); it != z_returns_.rend(); ++it) {
        const auto here = state_.position(it->q);
        if (it->swapped_with) {
            back.gates.emplace_back(Swap{it->q, *it->swapped_with, here, it->origin});
            state_.swap(topo_, it->q, *it->swapped_with);
        } else {
            back.gates.emplace_back(Shuttle{it->q, here, it->origin});
            state_.shuttle(topo_, it->q, it->origin);
        }
    }
    z_returns_.clear();
    emit(std::move(back));
}

std::vector<Cycle> Router::route_cycle(const Cycle &input) {
    const auto first_out = output_.cycles.size();
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < input.gates.size(); ++i) {
        const auto &g = input.gates[i];
        if (!std::holds_alternative<TwoQubitGate>(g) && !std::holds_alternative<ZGate>(g)) {
            throw InvalidArgument("only tqg and z gates can be routed, got " + gate_name(g));
        }
        if (std::holds_alternative<TwoQubitGate>(g)) pending.push_back(i);
    }
    for (std::size_t i = 0; i < input.gates.size(); ++i) {
        if (std::holds_alternative<ZGate>(input.gates[i])) pending.push_back(i);
    }
    busy_.clear();
    for (const auto &g : input.gates) {
        for (auto q : operands(g)) busy_.push_back(q);
    }

    std::vector<std::size_t> done;
    auto flush = [&] {
        std::sort(done.begin(), done.end());
        std::vector<Gate> gates;
        for (auto i : done) gates.push_back(input.gates[i]);
        flush_satisfied(std::move(gates));
        done.clear();
    };

    while (!pending.empty()) {
        bool progress = false;
        for (std::size_t k = 0; k < pending.size(); ++k) {
            if (attempt(input.gates[pending[k]], BlockadeMode::kNone) == GoalStatus::kSatisfied) {
                done.push_back(pending[k]);
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(k));
                progress = true;
                break;
            }
        }
        if (progress) continue;
        if (!done.empty()) {
            flush();
            ++stats_.cycle_splits;
            continue;
        }
        const auto mode = cfg_.forced_swap_enabled ? BlockadeMode::kForcedSwap : BlockadeMode::kDetour;
        const auto &goal = input.gates[pending.front()];
        if (attempt(goal, mode) != GoalStatus::kSatisfied) {
            std::ostringstream msg;
            msg << "unroutable goal '" << format_gate(goal) << "' in input cycle " << input_index_
                << " after all blockade mechanisms\n"
                << render_board(topo_, state_);
            throw RoutingError(msg.str());
        }
        done.push_back(pending.front());
        pending.erase(pending.begin());
    }
    flush();
    ++input_index_;
    return {output_.cycles.begin() + static_cast<std::ptrdiff_t>(first_out), output_.cycles.end()};
}

namespace {

std::size_t count_kind(const Circuit &c, bool swaps) {
    std::size_t n = 0;
    for (const auto &cy : c.cycles) {
        for (const auto &g : cy.gates) {
            n += swaps ? std::holds_alternative<Swap>(g) : std::holds_alternative<Shuttle>(g);
        }
    }
    return n;
}

}  // namespace

RouteReport route_circuit(const Topology &t, const DeviceState &initial, const Circuit &c, const RoutingConfig &cfg) {
    validate(c);
    for (std::uint32_t q = 0; q < c.n_qubits; ++q) {
        if (q >= initial.num_qubits() || !initial.site_of(QubitId{q})) {
            throw InvalidArgument("circuit qubit " + std::to_string(q) + " has no site in the placement");
        }
    }
    Router router(t, initial, cfg);
    for (const auto &cycle : c.cycles) router.route_cycle(cycle);

    RouteReport r;
    r.routed = router.output();
    r.initial_placement = initial.assignment();
    r.input_gates = gate_count(c);
    r.input_depth = depth(c);
    r.output_depth = depth(r.routed);
    r.added_shuttles = count_kind(r.routed, false);
    r.added_swaps = count_kind(r.routed, true);
    const auto &st = router.stats();
    r.forced_swaps = st.forced_swaps;
    r.swap_replacements = st.swap_replacements;
    r.cycle_splits = st.cycle_splits;
    r.steps_by_shuttles = st.steps_by_shuttles;
    return r;
}

}  // namespace besnake
