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
#include <limits>
#include <queue>

#include "besnake/errors.hpp"
#include "besnake/router.hpp"

namespace besnake {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kMaxChains = 128;

bool contains(std::span<const SiteId> set, SiteId s) { return std::find(set.begin(), set.end(), s) != set.end(); }


std::size_t pick(std::size_t n, Rng &rng) {
    return n == 1 ? 0 : static_cast<std::size_t>(rng.below(n));
}

}  // namespace

PathMode PathMode::multi(std::size_t budget) {
    if (budget == 0) throw InvalidArgument("path budget must be at least 1");
    return {Kind::kMulti, budget};
}

std::vector<SitePath> enumerate_shortest_paths(const Topology &t, const DeviceState &s, QubitId a, QubitId b,
                                               const RoutingConfig &cfg) {
    if (a == b) throw InvalidArgument("path operands must differ");
    const auto src = s.position(a);
    const auto dst = s.position(b);
    const auto n = t.num_sites();
    auto blocked = [&](SiteId x) { return x != src && x != dst && (s.is_fixed(x) || s.is_fixed_empty(x)); };

    std::vector<std::size_t> dist(n, kUnreached);
    std::queue<SiteId> frontier;
    dist[index(dst)] = 0;
    frontier.push(dst);
    while (!frontier.empty()) {
        const auto u = frontier.front();
        frontier.pop();
        if (u == src) break;
        for (const auto &nb : t.neighbors(u)) {
            if (dist[index(nb.site)] != kUnreached || blocked(nb.site)) continue;
            dist[index(nb.site)] = dist[index(u)] + 1;
            frontier.push(nb.site);
        }
    }
    std::vector<SitePath> paths;
    if (dist[index(src)] == kUnreached) return paths;

    const auto limit = cfg.paths.limit();
    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        return cfg.path_time_limit && !paths.empty() &&
               std::chrono::steady_clock::now() - start > *cfg.path_time_limit;
    };

    // Every step strictly descends `dist`, so each branch reaches dst and the
    // search costs O(limit * length).
    SitePath current{src};
    auto dfs = [&](auto &&self) -> void {
        const auto u = current.back();
        if (u == dst) {
            paths.push_back(current);
            return;
        }
        for (const auto &nb : t.neighbors(u)) {
            if (paths.size() >= limit || out_of_time()) return;
            if (blocked(nb.site) || dist[index(nb.site)] + 1 != dist[index(u)]) continue;
            current.push_back(nb.site);
            self(self);
            current.pop_back();
        }
    };
    dfs(dfs);
    return paths;
}

SitePath select_path(const Topology &t, const DeviceState &s, std::span<const SitePath> paths, Rng &rng) {
    if (paths.empty()) throw InvalidArgument("select_path needs at least one path");
    auto obstacles = [&](const SitePath &p) {
        std::size_t k = 0;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) k += s.occupied(p[i]) ? 1 : 0;
        return k;
    };

    std::vector<std::size_t> keep;
    std::size_t best_obstacles = kUnreached;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto k = obstacles(paths[i]);
        if (k < best_obstacles) {
            best_obstacles = k;
            keep.clear();
        }
        if (k == best_obstacles) keep.push_back(i);
    }

    std::vector<std::size_t> best;
    std::size_t best_degree = 0;
    for (auto i : keep) {
        const auto d = accumulated_degree(t, paths[i]);
        if (best.empty() || d > best_degree) {
            best_degree = d;
            best.clear();
        }
        if (d == best_degree) best.push_back(i);
    }
    return paths[best[pick(best.size(), rng)]];
}

std::optional<PushChain> find_push_chain(const Topology &t, const DeviceState &s, QubitId blocker,
                                         std::span<const SiteId> forbidden, std::span<const SiteId> remaining_path,
                                         Rng &rng) {
    const auto start = s.position(blocker);
    auto pushable = [&](SiteId x) { return s.occupied(x) && !s.is_fixed(x) && !contains(forbidden, x); };
    if (!pushable(start)) return std::nullopt;

    const auto n = t.num_sites();
    std::vector<std::size_t> depth(n, kUnreached);
    std::vector<std::vector<SiteId>> parents(n);
    depth[index(start)] = 0;

    std::vector<SiteId> layer{start};
    std::vector<std::pair<SiteId, SiteId>> ends;  // (last pushed site, vacancy)
    while (!layer.empty()) {
        for (auto u : layer) {
            for (const auto &nb : t.neighbors(u)) {
                if (!s.occupied(nb.site) && !s.is_fixed_empty(nb.site)) ends.emplace_back(u, nb.site);
            }
        }
        if (!ends.empty()) break;
        std::vector<SiteId> next;
        for (auto u : layer) {
            const auto d = depth[index(u)] + 1;
            for (const auto &nb : t.neighbors(u)) {
                const auto v = nb.site;
                if (!pushable(v)) continue;
                if (depth[index(v)] == kUnreached) {
                    depth[index(v)] = d;
                    next.push_back(v);
                }
                if (depth[index(v)] == d) parents[index(v)].push_back(u);
            }
        }
        layer = std::move(next);
    }
    if (ends.empty()) return std::nullopt;

    // Expand every minimal chain through the parent DAG (start ... u, vacancy).
    std::vector<std::vector<SiteId>> chains;
    for (const auto &[u, vac] : ends) {
        std::vector<SiteId> rev{vac, u};
        auto back = [&](auto &&self) -> void {
            if (chains.size() >= kMaxChains) return;
            const auto x = rev.back();
            if (x == start) {
                chains.emplace_back(rev.rbegin(), rev.rend());
                return;
            }
            for (auto p : parents[index(x)]) {
                rev.push_back(p);
                self(self);
                rev.pop_back();
            }
        };
        back(back);
    }

    struct Scored {
        std::size_t on_path;
        double fidelity;
    };
    auto score = [&](const std::vector<SiteId> &c) {
        Scored sc{0, 1.0};
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (contains(remaining_path, c[i])) ++sc.on_path;
            sc.fidelity *= t.fidelity(c[i - 1], c[i], MoveKind::kShuttle);
        }
        return sc;
    };
    std::vector<std::size_t> best;
    Scored best_score{kUnreached, 0.0};
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const auto sc = score(chains[i]);
        const bool better = sc.on_path < best_score.on_path ||
                            (sc.on_path == best_score.on_path && sc.fidelity > best_score.fidelity);
        if (better) {
            best_score = sc;
            best.clear();
        }
        if (sc.on_path == best_score.on_path && sc.fidelity == best_score.fidelity) best.push_back(i);
    }
    const auto &chosen = chains[best[pick(best.size(), rng)]];

    PushChain out;
    out.vacancy = chosen.back();
    for (std::size_t i = chosen.size() - 1; i-- > 0;) {
        out.moves.push_back({*s.qubit_at(chosen[i]), chosen[i], chosen[i + 1]});
    }
    return out;
}

}  // namespace besnake
