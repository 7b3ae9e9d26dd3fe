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

#include "besnake/verify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace besnake {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

struct Move {
    std::size_t cycle;
    std::uint32_t from;
    std::uint32_t to;
    bool is_return = false;
};

struct PendingZ {
    std::size_t cycle;
    std::size_t gate;
    std::uint32_t origin;
};

class Replay {
  public:
    Replay(const Topology &t, const DeviceState &s0, VerificationReport &out)
        : t_(t), out_(out), site_of_(s0.num_qubits(), kAbsent), at_(t.num_sites(), kAbsent),
          moves_(s0.num_qubits()), pending_z_(s0.num_qubits()) {
        for (const auto &[q, s] : s0.assignment()) {
            site_of_[q.value] = s.value;
            at_[s.value] = q.value;
        }
    }

    void run(const Circuit &routed) {
        for (std::size_t ci = 0; ci < routed.cycles.size(); ++ci) {
            const auto &gates = routed.cycles[ci].gates;
            std::set<std::uint32_t> used;
            std::vector<std::uint32_t> z_in_cycle;
            for (std::size_t gi = 0; gi < gates.size(); ++gi) {
                cycle_ = ci;
                gate_ = gi;
                const auto &g = gates[gi];
                bool known = true;
                for (auto q : operands(g)) {
                    if (!placed(q.value)) {
                        report(ViolationKind::kUnknownQubit, "qubit " + std::to_string(q.value) + " is not placed");
                        known = false;
                    } else if (!used.insert(q.value).second) {
                        report(ViolationKind::kParallelConflict,
                               "qubit " + std::to_string(q.value) + " acts twice in one cycle");
                    }
                }
                if (!known) continue;
                if (const auto *s = std::get_if<Shuttle>(&g)) {
                    shuttle(*s);
                } else if (const auto *w = std::get_if<Swap>(&g)) {
                    swap(*w);
                } else if (const auto *tq = std::get_if<TwoQubitGate>(&g)) {
                    logical(tq->a.value, g);
                    logical(tq->b.value, g);
                    if (!t_.adjacent(SiteId(site_of_[tq->a.value]), SiteId(site_of_[tq->b.value]))) {
                        report(ViolationKind::kTqgNotAdjacent, format_gate(g) + " operands are not adjacent");
                    }
                } else if (const auto *z = std::get_if<ZGate>(&g)) {
                    logical(z->q.value, g);
                    z_gate(z->q.value);
                    z_in_cycle.push_back(z->q.value);
                }
            }
            if (!z_in_cycle.empty()) z_groups_.push_back({ci, std::move(z_in_cycle)});
        }
        for (std::uint32_t q = 0; q < pending_z_.size(); ++q) {
            if (const auto &p = pending_z_[q]) {
                cycle_ = p->cycle;
                gate_ = p->gate;
                report(ViolationKind::kZNotRestored, "z on qubit " + std::to_string(q) + " never returns");
            }
        }
        check_return_groups();
    }

    const std::vector<std::vector<std::string>> &sequences() const { return sequences_; }

  private:
    bool placed(std::uint32_t q) const { return q < site_of_.size() && site_of_[q] != kAbsent; }

    void report(ViolationKind k, std::string msg) { out_.violations.push_back({cycle_, gate_, k, std::move(msg)}); }

    void logical(std::uint32_t q, const Gate &g) {
        if (sequences_.size() <= q) sequences_.resize(q + 1);
        sequences_[q].push_back(format_gate(g));
        if (pending_z_[q] && !std::holds_alternative<ZGate>(g)) {
            report(ViolationKind::kZNotRestored, "qubit " + std::to_string(q) + " used before its z return");
        }
    }

    void record_move(std::uint32_t q, std::uint32_t from, std::uint32_t to) {
        Move m{cycle_, from, to};
        if (auto &p = pending_z_[q]) {
            m.is_return = true;
            if (to != p->origin) {
                report(ViolationKind::kZNotRestored, "qubit " + std::to_string(q) + " returns to " +
                                                         std::to_string(to) + " instead of " +
                                                         std::to_string(p->origin));
            }
            return_cycle_[{p->cycle, q}] = cycle_;
            p.reset();
        }
        moves_[q].push_back(m);
    }

    void z_gate(std::uint32_t q) {
        if (pending_z_[q]) {
            report(ViolationKind::kZNotRestored, "second z on qubit " + std::to_string(q) + " before return");
            return;
        }
        auto &hist = moves_[q];
        if (hist.empty() || hist.back().is_return || hist.back().cycle >= cycle_) {
            report(ViolationKind::kZNotRestored, "z on qubit " + std::to_string(q) + " has no outbound shuttle");
            return;
        }
        auto &out = hist.back();
        out.is_return = true;  // consumed as this gate's outbound move
        if (t_.has_coordinates()) {
            const auto c0 = *t_.column(SiteId(out.from));
            const auto c1 = *t_.column(SiteId(out.to));
            if (c0 + 1 != c1 && c1 + 1 != c0) {
                report(ViolationKind::kZDirection, "z on qubit " + std::to_string(q) + " did not change column by 1");
            }
        }
        pending_z_[q] = PendingZ{cycle_, gate_, out.from};
    }

    void shuttle(const Shuttle &s) {
        const auto q = s.q.value;
        if (site_of_[q] != s.from.value) {
            report(ViolationKind::kMismatch, "qubit " + std::to_string(q) + " is at " + std::to_string(site_of_[q]) +
                                                 ", not " + std::to_string(s.from.value));
            return;
        }
        if (s.to.value >= at_.size() || !t_.adjacent(s.from, s.to)) {
            report(ViolationKind::kAdjacency, format_gate(Gate{s}) + " is not along an edge");
            return;
        }
        if (at_[s.to.value] != kAbsent) {
            report(ViolationKind::kOccupancy, format_gate(Gate{s}) + " enters a site held by qubit " +
                                                  std::to_string(at_[s.to.value]));
            return;
        }
        at_[s.from.value] = kAbsent;
        at_[s.to.value] = q;
        site_of_[q] = s.to.value;
        record_move(q, s.from.value, s.to.value);
    }

    void swap(const Swap &w) {
        const auto q = w.q.value, r = w.r.value;
        if (site_of_[q] != w.site_q.value || site_of_[r] != w.site_r.value) {
            report(ViolationKind::kMismatch, format_gate(Gate{w}) + " does not match current positions");
            return;
        }
        if (!t_.adjacent(w.site_q, w.site_r)) {
            report(ViolationKind::kAdjacency, format_gate(Gate{w}) + " acts on non-adjacent sites");
            return;
        }
        std::swap(at_[w.site_q.value], at_[w.site_r.value]);
        site_of_[q] = w.site_r.value;
        site_of_[r] = w.site_q.value;
        record_move(q, w.site_q.value, w.site_r.value);
        record_move(r, w.site_r.value, w.site_q.value);
    }

    void check_return_groups() {
        for (const auto &[ci, qs] : z_groups_) {
            std::set<std::size_t> cycles;
            for (auto q : qs) {
                auto it = return_cycle_.find({ci, q});
                if (it != return_cycle_.end()) cycles.insert(it->second);
            }
            if (cycles.size() > 1) {
                cycle_ = ci;
                gate_ = 0;
                report(ViolationKind::kZReturnSplit,
                       "z returns of cycle " + std::to_string(ci) + " span " + std::to_string(cycles.size()) +
                           " cycles");
            }
        }
    }

    const Topology &t_;
    VerificationReport &out_;
    std::vector<std::uint32_t> site_of_;
    std::vector<std::uint32_t> at_;
    std::vector<std::vector<Move>> moves_;
    std::vector<std::optional<PendingZ>> pending_z_;
    std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> return_cycle_;
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> z_groups_;
    std::vector<std::vector<std::string>> sequences_;
    std::size_t cycle_ = 0;
    std::size_t gate_ = 0;
};

std::vector<std::vector<std::string>> logical_sequences(const Circuit &c) {
    std::vector<std::vector<std::string>> seq;
    for (const auto &cycle : c.cycles) {
        for (const auto &g : cycle.gates) {
            if (is_movement(g)) continue;
            for (auto q : operands(g)) {
                if (seq.size() <= q.value) seq.resize(q.value + 1);
                seq[q.value].push_back(format_gate(g));
            }
        }
    }
    return seq;
}

std::map<std::string, long> logical_multiset(const Circuit &c) {
    std::map<std::string, long> m;
    for (const auto &cycle : c.cycles) {
        for (const auto &g : cycle.gates) {
            if (!is_movement(g)) ++m[format_gate(g)];
        }
    }
    return m;
}

}  // namespace

std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::kOccupancy: return "occupancy";
        case ViolationKind::kAdjacency: return "adjacency";
        case ViolationKind::kMismatch: return "mismatch";
        case ViolationKind::kParallelConflict: return "parallel-conflict";
        case ViolationKind::kTqgNotAdjacent: return "tqg-not-adjacent";
        case ViolationKind::kZNotRestored: return "z-not-restored";
        case ViolationKind::kZDirection: return "z-direction";
        case ViolationKind::kZReturnSplit: return "z-return-split";
        case ViolationKind::kCompleteness: return "completeness";
        case ViolationKind::kOrder: return "order";
        case ViolationKind::kUnknownQubit: return "unknown-qubit";
        case ViolationKind::kPlacement: return "placement";
    }
    return "unknown";
}

std::string VerificationReport::describe() const {
    std::ostringstream os;
    for (const auto &v : violations) {
        os << "cycle " << v.cycle << " gate " << v.gate << " [" << to_string(v.kind) << "] " << v.message << '\n';
    }
    return os.str();
}

VerificationReport verify_trace(const Topology &t, const DeviceState &s0, const Circuit &routed,
                                const Circuit &original) {
    VerificationReport report;
    if (s0.num_sites() != t.num_sites()) {
        report.violations.push_back({0, 0, ViolationKind::kPlacement, "placement size does not match topology"});
        return report;
    }
    Replay replay(t, s0, report);
    replay.run(routed);

    auto want = logical_multiset(original);
    const auto have = logical_multiset(routed);
    bool complete = true;
    for (const auto &[g, n] : have) want[g] -= n;
    for (const auto &[g, n] : want) {
        if (n == 0) continue;
        complete = false;
        report.violations.push_back({routed.cycles.size(), 0, ViolationKind::kCompleteness,
                                     (n > 0 ? "missing " : "extra ") + std::to_string(n > 0 ? n : -n) + " x " + g});
    }
    if (complete) {
        auto a = logical_sequences(original);
        auto b = replay.sequences();
        const auto n = std::max(a.size(), b.size());
        a.resize(n);
        b.resize(n);
        for (std::size_t q = 0; q < n; ++q) {
            if (a[q] != b[q]) {
                report.violations.push_back({routed.cycles.size(), 0, ViolationKind::kOrder,
                                             "gate order differs on qubit " + std::to_string(q)});
            }
        }
    }
    return report;
}

VerificationReport verify_routed_file(const Topology &t, const DeviceState &s0, const RoutedFile &routed,
                                      const Circuit &original) {
    auto expected = s0.assignment();
    auto actual = routed.placement;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) {
        VerificationReport r;
        r.violations.push_back({0, 0, ViolationKind::kPlacement, "place header differs from the given placement"});
        return r;
    }
    return verify_trace(t, s0, routed.circuit, original);
}

}  // namespace besnake
