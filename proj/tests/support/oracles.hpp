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

// Brute-force reference implementations used as test oracles. They share no
// code with the router beyond the public data types.
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "besnake/besnake.hpp"

namespace besnake::oracle {

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

/// Adjacency of an R x C lattice from coordinates alone (site = row * C + col).
inline bool lattice_adjacent(std::size_t cols, std::size_t a, std::size_t b, bool diagonal) {
    const long ra = static_cast<long>(a / cols), ca = static_cast<long>(a % cols);
    const long rb = static_cast<long>(b / cols), cb = static_cast<long>(b % cols);
    const long dr = std::labs(ra - rb), dc = std::labs(ca - cb);
    if (dr + dc == 1) return true;
    return diagonal && dr == 1 && dc == 1;
}

/// Hop distance from `src` to `dst` where interior nodes must satisfy `ok`.
template <class Pred>
std::size_t distance(const Topology &t, SiteId src, SiteId dst, Pred ok) {
    std::vector<std::size_t> d(t.num_sites(), kInf);
    std::queue<SiteId> q;
    d[src.value] = 0;
    q.push(src);
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (const auto &nb : t.neighbors(u)) {
            if (d[nb.site.value] != kInf) continue;
            if (nb.site != dst && !ok(nb.site)) continue;
            d[nb.site.value] = d[u.value] + 1;
            if (nb.site == dst) return d[nb.site.value];
            q.push(nb.site);
        }
    }
    return kInf;
}

/// Shortest push-chain length by exhaustive simple-path search: a chain is a
/// simple path blocker = p0, p1, ..., pk where p0..p(k-1) are occupied and
/// movable and pk is empty and unreserved. Its length is the number of moves, k.
inline std::size_t min_chain_length(const Topology &t, const DeviceState &s, SiteId blocker,
                                    const std::set<std::uint32_t> &forbidden) {
    auto movable = [&](SiteId x) { return s.occupied(x) && !s.is_fixed(x) && !forbidden.count(x.value); };
    if (!movable(blocker)) return kInf;
    std::size_t best = kInf;
    std::vector<bool> seen(t.num_sites(), false);
    auto dfs = [&](auto &&self, SiteId u, std::size_t len) -> void {
        if (len >= best) return;
        seen[u.value] = true;
        for (const auto &nb : t.neighbors(u)) {
            const auto v = nb.site;
            if (seen[v.value]) continue;
            if (!s.occupied(v)) {
                if (!s.is_fixed_empty(v)) best = std::min(best, len + 1);
            } else if (movable(v)) {
                self(self, v, len + 1);
            }
        }
        seen[u.value] = false;
    };
    dfs(dfs, blocker, 0);
    return best;
}

/// Minimum number of single-qubit shuttles that makes every listed pair
/// adjacent, by breadth-first search over complete device states.
inline std::size_t min_shuttles_to_pair(const Topology &t, std::vector<std::uint32_t> sites,
                                        const std::vector<std::pair<std::size_t, std::size_t>> &pairs,
                                        std::size_t limit = 8) {
    auto done = [&](const std::vector<std::uint32_t> &st) {
        for (auto [a, b] : pairs) {
            if (!t.adjacent(SiteId(st[a]), SiteId(st[b]))) return false;
        }
        return true;
    };
    std::map<std::vector<std::uint32_t>, std::size_t> dist{{sites, 0}};
    std::queue<std::vector<std::uint32_t>> q;
    q.push(sites);
    while (!q.empty()) {
        auto st = q.front();
        q.pop();
        const auto d = dist[st];
        if (done(st)) return d;
        if (d >= limit) continue;
        std::vector<bool> occ(t.num_sites(), false);
        for (auto x : st) occ[x] = true;
        for (std::size_t i = 0; i < st.size(); ++i) {
            for (const auto &nb : t.neighbors(SiteId(st[i]))) {
                if (occ[nb.site.value]) continue;
                auto next = st;
                next[i] = nb.site.value;
                if (dist.emplace(next, d + 1).second) q.push(next);
            }
        }
    }
    return kInf;
}

/// Positions before and after each Z gate's movement pair, computed by an
/// independent replay. For each Z on q in cycle c: `before` is q's site before
/// the last cycle < c in which q moved, `after` is q's site after the first
/// cycle > c in which q moved, and `return_cycle` is that cycle.
struct ZTrace {
    std::size_t gate_cycle;
    std::uint32_t q;
    std::uint32_t before;
    std::uint32_t after;
    std::size_t return_cycle;
};

inline std::vector<ZTrace> trace_z(const Assignment &initial, const Circuit &routed) {
    std::map<std::uint32_t, std::uint32_t> pos;
    for (const auto &[q, s] : initial) pos[q.value] = s.value;
    // history[q] = list of (cycle, site before, site after) per moving cycle.
    struct Step {
        std::size_t cycle;
        std::uint32_t before, after;
    };
    std::map<std::uint32_t, std::vector<Step>> history;
    std::vector<std::pair<std::size_t, std::uint32_t>> zs;
    for (std::size_t c = 0; c < routed.cycles.size(); ++c) {
        for (const auto &g : routed.cycles[c].gates) {
            if (auto *sh = std::get_if<Shuttle>(&g)) {
                history[sh->q.value].push_back({c, pos[sh->q.value], sh->to.value});
                pos[sh->q.value] = sh->to.value;
            } else if (auto *sw = std::get_if<Swap>(&g)) {
                const auto a = pos[sw->q.value], b = pos[sw->r.value];
                history[sw->q.value].push_back({c, a, b});
                history[sw->r.value].push_back({c, b, a});
                pos[sw->q.value] = b;
                pos[sw->r.value] = a;
            } else if (auto *z = std::get_if<ZGate>(&g)) {
                zs.emplace_back(c, z->q.value);
            }
        }
    }
    std::vector<ZTrace> out;
    for (auto [c, q] : zs) {
        ZTrace zt{c, q, UINT32_MAX, UINT32_MAX, kInf};
        for (const auto &st : history[q]) {
            if (st.cycle < c) zt.before = st.before;
            if (st.cycle > c) {
                zt.after = st.after;
                zt.return_cycle = st.cycle;
                break;
            }
        }
        out.push_back(zt);
    }
    return out;
}

}  // namespace besnake::oracle
