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

#include <gtest/gtest.h>

#include "besnake/errors.hpp"
#include "besnake/router.hpp"
#include "besnake/verify.hpp"

namespace besnake {
namespace {

constexpr double kF = kDefaultShuttleFidelity;
constexpr double kG = kDefaultSwapFidelity;

QubitId Q(std::uint32_t v) { return QubitId(v); }
SiteId S(std::uint32_t v) { return SiteId(v); }

DeviceState board(const Topology &t, std::vector<std::uint32_t> sites) {
    Assignment a;
    for (std::uint32_t q = 0; q < sites.size(); ++q) a.emplace_back(Q(q), S(sites[q]));
    return DeviceState::from_assignment(t, sites.size(), a);
}

std::string cycles_text(const Circuit &c) {
    auto text = emit_circuit(c);
    return text.substr(text.find('\n') + 1);
}

TEST(AdvanceOperand, EmptyNextSiteIsOneShuttle) {
    const auto t = build_square_grid(1, 4, kF, kG);
    Router r(t, board(t, {0, 3}), {});
    const std::vector<SiteId> forbidden{S(0), S(3)};
    ASSERT_TRUE(r.advance_operand(Q(0), S(1), {}, forbidden));
    EXPECT_EQ(cycles_text(r.output()), "cycle shuttle 0 @0>1\n");
    EXPECT_EQ(r.stats().steps_by_shuttles.at(1).steps, 1u);
    EXPECT_THROW(r.advance_operand(Q(0), S(3), {}, forbidden), InvalidArgument);
}

// Line 0-1-2-3-4 plus a side site 5 above 1: operand at 0, blocker at 1.
Topology line_with_spur() {
    const std::vector<Topology::EdgeSpec> e{{S(0), S(1), kF, kG}, {S(1), S(2), kF, kG}, {S(2), S(3), kF, kG},
                                            {S(3), S(4), kF, kG}, {S(1), S(5), kF, kG}};
    return Topology(6, e);
}

TEST(AdvanceOperand, TwoShuttleStepIsKept) {
    const auto t = line_with_spur();
    RoutingConfig cfg;
    cfg.swap_replace = true;
    Router r(t, board(t, {0, 4, 1}), cfg);
    const std::vector<SiteId> forbidden{S(0), S(4)};
    const std::vector<SiteId> remaining{S(2), S(3)};
    ASSERT_TRUE(r.advance_operand(Q(0), S(1), remaining, forbidden));
    EXPECT_EQ(cycles_text(r.output()), "cycle shuttle 2 @1>5 ; shuttle 0 @0>1\n");
    EXPECT_EQ(r.stats().steps_by_shuttles.at(2).replaced, 0u);
    EXPECT_EQ(r.stats().swap_replacements, 0u);
}

TEST(AdvanceOperand, ThreeShuttleStepIsReplacedBySwap) {
    // Full line 0..3 with a hole at 3: the blocker at 1 needs a 2-move chain.
    const auto t = build_square_grid(1, 5, kF, kG);
    RoutingConfig cfg;
    cfg.swap_replace = true;
    Router r(t, board(t, {0, 4, 1, 2}), cfg);
    const std::vector<SiteId> forbidden{S(0), S(4)};
    const std::vector<SiteId> remaining{S(2), S(3)};
    ASSERT_TRUE(r.advance_operand(Q(0), S(1), remaining, forbidden));
    EXPECT_EQ(cycles_text(r.output()), "cycle swap 0 2 @0,1\n");
    EXPECT_EQ(r.stats().steps_by_shuttles.at(3).steps, 1u);
    EXPECT_EQ(r.stats().steps_by_shuttles.at(3).replaced, 1u);
    EXPECT_EQ(r.state().position(Q(0)), S(1));
    EXPECT_EQ(r.state().position(Q(2)), S(0));

    cfg.swap_replace = false;
    Router keep(t, board(t, {0, 4, 1, 2}), cfg);
    ASSERT_TRUE(keep.advance_operand(Q(0), S(1), remaining, forbidden));
    EXPECT_EQ(cycles_text(keep.output()), "cycle shuttle 3 @2>3 ; shuttle 2 @1>2 ; shuttle 0 @0>1\n");
}

TEST(AdvanceOperand, BlockadeWithoutForcedSwapFails) {
    const auto t = build_square_grid(1, 3, kF, kG);
    Router r(t, board(t, {0, 2, 1}), {});
    const std::vector<SiteId> forbidden{S(0), S(2)};
    EXPECT_FALSE(r.advance_operand(Q(0), S(1), {}, forbidden));
    EXPECT_TRUE(r.output().cycles.empty());
    EXPECT_TRUE(r.advance_operand(Q(0), S(1), {}, forbidden, true));
    EXPECT_EQ(cycles_text(r.output()), "cycle swap 0 2 @0,1\n");
    EXPECT_EQ(r.stats().forced_swaps, 1u);
}

TEST(TwoQubitGoal, FirstExampleMovesUpTwice) {
    const auto t = build_square_grid(4, 4, kF, kG);
    Router r(t, board(t, {5, 0, 12, 3, 15}), {});
    ASSERT_EQ(r.route_two_qubit_goal({Q(1), Q(2)}), GoalStatus::kSatisfied);
    EXPECT_EQ(cycles_text(r.output()), "cycle shuttle 1 @0>4\ncycle shuttle 1 @4>8\n");
    EXPECT_TRUE(r.state().is_fixed(S(8)));
    EXPECT_TRUE(r.state().is_fixed(S(12)));
}

TEST(TwoQubitGoal, AlreadyAdjacentEmitsNothing) {
    const auto t = build_square_grid(3, 3, kF, kG);
    Router r(t, board(t, {0, 1}), {});
    ASSERT_EQ(r.route_two_qubit_goal({Q(0), Q(1)}), GoalStatus::kSatisfied);
    EXPECT_TRUE(r.output().cycles.empty());
    EXPECT_EQ(r.state().fixed_sites().size(), 2u);
}

TEST(TwoQubitGoal, WalledInFailsAndRestores) {
    const auto t = build_square_grid(3, 3, kF, kG);
    auto s = board(t, {0, 8, 1, 3});
    s.fix(S(1));
    s.fix(S(3));
    Router r(t, s, {});
    EXPECT_EQ(r.route_two_qubit_goal({Q(0), Q(1)}), GoalStatus::kFailed);
    EXPECT_EQ(r.state(), s);
    EXPECT_TRUE(r.output().cycles.empty());
}

TEST(TwoQubitGoal, FailedWalkIsRolledBack) {
    // Line 0..4: the operand steps to 1, pushes the blocker from 2 to 3, and
    // then finds it wedged against the partner at 4.
    const auto t = build_square_grid(1, 5, kF, kG);
    const auto s = board(t, {0, 4, 2});
    Router r(t, s, {});
    EXPECT_EQ(r.route_two_qubit_goal({Q(0), Q(1)}), GoalStatus::kFailed);
    EXPECT_EQ(r.state(), s);
    EXPECT_TRUE(r.output().cycles.empty());
    EXPECT_TRUE(r.stats().steps_by_shuttles.empty());
}

TEST(ZGoal, PicksTheCheaperDirection) {
    // 2 x 3 grid: q0 at 1, q1 at 0 (left, needs a push), right neighbour free.
    const auto t = build_square_grid(2, 3, kF, kG);
    Router r(t, board(t, {1, 0}), {});
    r.route_cycle(Cycle{{ZGate{Q(0)}}});
    EXPECT_EQ(cycles_text(r.output()), "cycle shuttle 0 @1>2\ncycle z 0\ncycle shuttle 0 @2>1\n");
}

TEST(ZGoal, RightmostColumnGoesLeft) {
    const auto t = build_square_grid(2, 3, kF, kG);
    Router r(t, board(t, {5}), {});
    r.route_cycle(Cycle{{ZGate{Q(0)}}});
    EXPECT_EQ(cycles_text(r.output()), "cycle shuttle 0 @5>4\ncycle z 0\ncycle shuttle 0 @4>5\n");
}

TEST(ZGoal, NeverMovesVertically) {
    // Left and right neighbours are pinned; only up is free.
    const auto t = build_square_grid(2, 3, kF, kG);
    auto s = board(t, {1, 0, 2});
    s.fix(S(0));
    s.fix(S(2));
    Router r(t, s, {});
    EXPECT_EQ(r.route_z_goal({Q(0)}), GoalStatus::kFailed);
    EXPECT_EQ(r.state(), s);
}

TEST(ZGoal, DiagonalNeighboursAreSecondChoice) {
    const auto t = build_diagonal_grid(2, 3, kF, kG);
    auto s = board(t, {1, 0, 2});
    s.fix(S(0));
    s.fix(S(2));
    Router r(t, s, {});
    ASSERT_EQ(r.route_z_goal({Q(0)}), GoalStatus::kSatisfied);
    const auto now = r.state().position(Q(0));
    EXPECT_TRUE(now == S(3) || now == S(5));
}

TEST(ZGoal, SecondZOverridesFirstOriginAndBothReturnTogether) {
    // Line 0-1-2-3: q0 at 1, q1 at 2, q2 wedged at 3.
    const auto t = build_square_grid(1, 4, kF, kG);
    const auto s0 = board(t, {1, 2, 3});
    Router r(t, s0, {});
    const Cycle in{{ZGate{Q(0)}, ZGate{Q(1)}}};
    r.route_cycle(in);
    EXPECT_EQ(cycles_text(r.output()),
              "cycle shuttle 0 @1>0\n"
              "cycle shuttle 1 @2>1\n"
              "cycle z 0 ; z 1\n"
              "cycle shuttle 1 @1>2 ; shuttle 0 @0>1\n");
    EXPECT_EQ(r.state().assignment(), s0.assignment());
    EXPECT_TRUE(verify_trace(t, s0, r.output(), Circuit{3, {in}}).ok());
}

TEST(RouteCycle, PresatisfiedCycleIsUnchanged) {
    const auto t = build_square_grid(2, 4, kF, kG);
    Router r(t, board(t, {0, 1, 2, 3}), {});
    const Cycle in{{TwoQubitGate{Q(0), Q(1)}, TwoQubitGate{Q(3), Q(2)}}};
    const auto out = r.route_cycle(in);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], in);
}

TEST(RouteCycle, CornerBlockadeNeedsExactlyOneSwap) {
    // 3x3: operands at 1 and 3, an obstacle in corner 0 that cannot move
    // without touching an operand. The single enumerated path runs 1-0-3.
    const auto t = build_square_grid(3, 3, kF, kG);
    const auto s0 = board(t, {1, 3, 0});
    RoutingConfig cfg;
    cfg.paths = PathMode::single();
    const Circuit in{3, {Cycle{{TwoQubitGate{Q(0), Q(1)}}}}};
    const auto rep = route_circuit(t, s0, in, cfg);
    EXPECT_EQ(cycles_text(rep.routed), "cycle swap 0 2 @1,0\ncycle tqg 0 1\n");
    EXPECT_EQ(rep.added_swaps, 1u);
    EXPECT_EQ(rep.forced_swaps, 1u);
    EXPECT_EQ(rep.cycle_splits, 0u);
    EXPECT_TRUE(verify_trace(t, s0, rep.routed, in).ok());

    // With several paths the obstacle-free detour through the centre wins.
    const auto multi = route_circuit(t, s0, in, {});
    EXPECT_EQ(cycles_text(multi.routed), "cycle shuttle 0 @1>4\ncycle tqg 0 1\n");

    // Without SWAPs the detour search takes over.
    cfg.forced_swap_enabled = false;
    const auto detour = route_circuit(t, s0, in, cfg);
    EXPECT_EQ(detour.added_swaps, 0u);
    EXPECT_TRUE(verify_trace(t, s0, detour.routed, in).ok());
}

TEST(RouteCycle, SplitsWhenPinnedPairsWallOffTheLastGate) {
    // 3x3 with one hole at 4. Three pairs are already adjacent; the fourth
    // (3 and 8) can only be joined by pushing a pinned qubit.
    const auto t = build_square_grid(3, 3, kF, kG);
    const auto s0 = board(t, {0, 1, 2, 5, 6, 7, 3, 8});
    const Circuit in{8, {Cycle{{TwoQubitGate{Q(0), Q(1)}, TwoQubitGate{Q(2), Q(3)}, TwoQubitGate{Q(4), Q(5)},
                                TwoQubitGate{Q(6), Q(7)}}}}};
    const auto rep = route_circuit(t, s0, in, {});
    EXPECT_EQ(rep.cycle_splits, 1u);
    ASSERT_GE(rep.routed.cycles.size(), 3u);
    EXPECT_EQ(rep.routed.cycles.front(), (Cycle{{TwoQubitGate{Q(0), Q(1)}, TwoQubitGate{Q(2), Q(3)},
                                                 TwoQubitGate{Q(4), Q(5)}}}));
    EXPECT_EQ(rep.routed.cycles.back(), (Cycle{{TwoQubitGate{Q(6), Q(7)}}}));
    EXPECT_EQ(rep.forced_swaps, 0u);
    EXPECT_TRUE(verify_trace(t, s0, rep.routed, in).ok());
}

TEST(RouteCycle, RejectsMovementGates) {
    const auto t = build_square_grid(2, 2, kF, kG);
    Router r(t, board(t, {0, 3}), {});
    EXPECT_THROW(r.route_cycle(Cycle{{Shuttle{Q(0), S(0), S(1)}}}), InvalidArgument);
}

TEST(RouteCircuit, EmptyCircuit) {
    const auto t = build_square_grid(2, 2, kF, kG);
    const auto rep = route_circuit(t, board(t, {0}), Circuit{1, {}}, {});
    EXPECT_TRUE(rep.routed.cycles.empty());
    EXPECT_EQ(rep.added_gates(), 0u);
    EXPECT_EQ(rep.input_depth, 0u);
}

TEST(RouteCircuit, UnplacedQubitIsRejected) {
    const auto t = build_square_grid(2, 2, kF, kG);
    EXPECT_THROW(route_circuit(t, board(t, {0}), Circuit{2, {Cycle{{ZGate{Q(1)}}}}}, {}), InvalidArgument);
}

TEST(RouteCircuit, SeededDeterminism) {
    const auto t = build_square_grid(5, 5, kF, kG);
    const auto s0 = checkerboard_init(t, 12);
    Circuit c{12, {}};
    for (std::uint32_t i = 0; i < 40; ++i) {
        const auto a = i % 12;
        auto b = (i * 5 + 1) % 12;
        if (b == a) b = (b + 1) % 12;
        c.cycles.push_back(Cycle{{TwoQubitGate{Q(a), Q(b)}}});
    }
    RoutingConfig cfg;
    cfg.rng_seed = 99;
    const auto a = route_circuit(t, s0, c, cfg);
    const auto b = route_circuit(t, s0, c, cfg);
    EXPECT_EQ(a.routed, b.routed);
    EXPECT_TRUE(verify_trace(t, s0, a.routed, c).ok());
}

TEST(RouteEntryPoint, SpecStrings) {
    const auto c = parse_circuit("qubits 5\ncycle tqg 1 2 ; tqg 3 4\n");
    const auto rep = route("grid:4x4", "checkerboard", c, {});
    EXPECT_EQ(rep.input_gates, 2u);
    const auto t = build_square_grid(4, 4, kF, kG);
    EXPECT_TRUE(verify_trace(t, checkerboard_init(t, 5), rep.routed, c).ok());
    EXPECT_THROW(route("grid:4x4", "density:0.1", c, {}), InvalidArgument);
}

}  // namespace
}  // namespace besnake
