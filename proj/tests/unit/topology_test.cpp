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

#include <cmath>

#include "besnake/errors.hpp"
#include "besnake/topology.hpp"
#include "support/oracles.hpp"

namespace besnake {
namespace {

constexpr double kF = 0.9998;
constexpr double kG = 0.9995;

SiteId S(std::uint32_t v) { return SiteId(v); }

TEST(SquareGrid, FourByFourHasTwentyFourEdges) {
    const auto t = build_square_grid(4, 4, kF, kG);
    EXPECT_EQ(t.num_sites(), 16u);
    EXPECT_EQ(t.num_edges(), 24u);
}

TEST(SquareGrid, SmallestGrid) {
    const auto t = build_square_grid(1, 2, kF, kG);
    EXPECT_EQ(t.num_sites(), 2u);
    EXPECT_EQ(t.num_edges(), 1u);
    EXPECT_TRUE(t.adjacent(S(0), S(1)));
}

TEST(SquareGrid, CornerAndCentreDegrees) {
    const auto t = build_square_grid(3, 3, kF, kG);
    EXPECT_EQ(t.degree(S(0)), 2u);
    EXPECT_EQ(t.degree(S(4)), 4u);
    EXPECT_EQ(t.degree(S(1)), 3u);
}

TEST(SquareGrid, RowZeroIsBottomAndIdsAreRowMajor) {
    const auto t = build_square_grid(3, 4, kF, kG);
    EXPECT_EQ(t.site_at(0, 0), S(0));
    EXPECT_EQ(t.site_at(2, 3), S(11));
    EXPECT_EQ(*t.row(S(5)), 1);
    EXPECT_EQ(*t.column(S(5)), 1);
    EXPECT_TRUE(t.is_grid());
    EXPECT_EQ(t.rows(), 3u);
    EXPECT_EQ(t.cols(), 4u);
}

TEST(SquareGrid, RejectsDegenerateInput) {
    EXPECT_THROW(build_square_grid(0, 3, kF, kG), InvalidArgument);
    EXPECT_THROW(build_square_grid(1, 1, kF, kG), InvalidArgument);
    EXPECT_THROW(build_square_grid(2, 2, 0.0, kG), InvalidArgument);
    EXPECT_THROW(build_square_grid(2, 2, kF, 1.5), InvalidArgument);
}

TEST(SquareGrid, MatchesCoordinateOracleUpToSixBySix) {
    for (std::size_t r = 1; r <= 6; ++r) {
        for (std::size_t c = 1; c <= 6; ++c) {
            if (r * c < 2) continue;
            for (bool diag : {false, true}) {
                const auto t = diag ? build_diagonal_grid(r, c, kF, kG) : build_square_grid(r, c, kF, kG);
                for (std::uint32_t a = 0; a < r * c; ++a) {
                    for (std::uint32_t b = 0; b < r * c; ++b) {
                        ASSERT_EQ(t.adjacent(S(a), S(b)), a != b && oracle::lattice_adjacent(c, a, b, diag))
                            << r << "x" << c << (diag ? " diag " : " ") << a << "-" << b;
                    }
                }
            }
        }
    }
}

TEST(DiagonalGrid, EdgeCounts) {
    EXPECT_EQ(build_diagonal_grid(4, 4, kF, kG).num_edges(), 42u);
    EXPECT_EQ(build_diagonal_grid(2, 2, kF, kG).num_edges(), 6u);
}

TEST(DiagonalGrid, CentreHasEightNeighbours) {
    EXPECT_EQ(build_diagonal_grid(3, 3, kF, kG).degree(S(4)), 8u);
}

TEST(Topology, EdgeSymmetryAndDegreeSum) {
    for (const auto &t : {build_square_grid(5, 3, kF, kG), build_diagonal_grid(4, 6, kF, kG)}) {
        std::size_t sum = 0;
        for (std::uint32_t s = 0; s < t.num_sites(); ++s) {
            sum += t.degree(S(s));
            for (const auto &nb : t.neighbors(S(s))) EXPECT_TRUE(t.adjacent(nb.site, S(s)));
        }
        EXPECT_EQ(sum, 2 * t.num_edges());
        EXPECT_EQ(t.edges().size(), t.num_edges());
    }
}

TEST(Topology, NeighboursAreSortedAscending) {
    const auto t = build_diagonal_grid(3, 3, kF, kG);
    const auto nbs = t.neighbors(S(4));
    for (std::size_t i = 1; i < nbs.size(); ++i) EXPECT_LT(nbs[i - 1].site, nbs[i].site);
}

TEST(Topology, ExplicitEdgeListValidation) {
    using E = Topology::EdgeSpec;
    const std::vector<E> ok{{S(0), S(1), kF, kG}, {S(1), S(2), 0.9, 0.8}};
    const Topology t(3, ok);
    EXPECT_DOUBLE_EQ(t.fidelity(S(2), S(1), MoveKind::kShuttle), 0.9);
    EXPECT_DOUBLE_EQ(t.fidelity(S(1), S(2), MoveKind::kSwap), 0.8);
    EXPECT_THROW(t.fidelity(S(0), S(2), MoveKind::kShuttle), InvalidArgument);
    EXPECT_FALSE(t.is_grid());
    EXPECT_FALSE(t.has_coordinates());

    const std::vector<E> loop{{S(0), S(0), kF, kG}, {S(0), S(1), kF, kG}};
    EXPECT_THROW(Topology(2, loop), InvalidArgument);
    const std::vector<E> dup{{S(0), S(1), kF, kG}, {S(1), S(0), kF, kG}};
    EXPECT_THROW(Topology(2, dup), InvalidArgument);
    const std::vector<E> range{{S(0), S(5), kF, kG}};
    EXPECT_THROW(Topology(2, range), InvalidArgument);
    const std::vector<E> split{{S(0), S(1), kF, kG}, {S(2), S(3), kF, kG}};
    EXPECT_THROW(Topology(4, split), InvalidArgument);
}

TEST(AccumulatedDegree, Examples) {
    const auto t = build_square_grid(3, 3, kF, kG);
    const std::vector<SiteId> row{S(0), S(1), S(2)};
    const std::vector<SiteId> centre{S(1), S(4), S(7)};
    const std::vector<SiteId> single{S(4)};
    EXPECT_EQ(accumulated_degree(t, row), 7u);
    EXPECT_EQ(accumulated_degree(t, centre), 10u);
    EXPECT_EQ(accumulated_degree(t, single), 4u);
    const std::vector<SiteId> broken{S(0), S(2)};
    EXPECT_THROW(accumulated_degree(t, broken), InvalidPath);
}

TEST(AccumulatedFidelity, ThreeShuttlesFallBelowOneSwap) {
    const auto t = build_square_grid(1, 4, kF, kG);
    const std::vector<Edge> three{{S(0), S(1)}, {S(1), S(2)}, {S(2), S(3)}};
    const double f3 = accumulated_fidelity(t, three, MoveKind::kShuttle);
    EXPECT_DOUBLE_EQ(f3, kF * kF * kF);
    EXPECT_GT(f3, 0.9994);
    EXPECT_LT(f3, kG);

    const std::vector<Edge> two{{S(0), S(1)}, {S(1), S(2)}};
    EXPECT_DOUBLE_EQ(accumulated_fidelity(t, two, MoveKind::kShuttle), 0.99960004);
    EXPECT_GT(accumulated_fidelity(t, two, MoveKind::kShuttle), kG);
    EXPECT_EQ(accumulated_fidelity(t, std::span<const Edge>{}, MoveKind::kSwap), 1.0);
}

TEST(AccumulatedFidelity, OrderIndependentAndMultiplicative) {
    const std::vector<Topology::EdgeSpec> specs{
        {S(0), S(1), 0.91, 0.5}, {S(1), S(2), 0.97, 0.5}, {S(2), S(3), 0.93, 0.5}};
    const Topology t(4, specs);
    const std::vector<Edge> fwd{{S(0), S(1)}, {S(1), S(2)}, {S(2), S(3)}};
    const std::vector<Edge> rev{{S(3), S(2)}, {S(0), S(1)}, {S(2), S(1)}};
    const auto k = MoveKind::kShuttle;
    EXPECT_NEAR(accumulated_fidelity(t, fwd, k), accumulated_fidelity(t, rev, k), 1e-15);
    const std::span<const Edge> all(fwd);
    EXPECT_NEAR(accumulated_fidelity(t, all, k),
                accumulated_fidelity(t, all.first(1), k) * accumulated_fidelity(t, all.subspan(1), k), 1e-15);
}

TEST(TopologySpec, ParsesGridForms) {
    EXPECT_EQ(parse_topology_spec("grid:4x5").num_edges(), 31u);
    EXPECT_EQ(parse_topology_spec("grid+diag:4x4").num_edges(), 42u);
    EXPECT_THROW(parse_topology_spec("grid:4"), InvalidArgument);
    EXPECT_THROW(parse_topology_spec("ring:4"), InvalidArgument);
}

TEST(TopologySpec, EdgeListWithCoordinatesAndFidelities) {
    const auto t = parse_edge_list(
        "# tiny line\n0 1\n1 2 0.99 0.98\nsite 0 0 0\nsite 1 0 1\nsite 2 0 2\n", kF, kG);
    EXPECT_EQ(t.num_sites(), 3u);
    EXPECT_DOUBLE_EQ(t.fidelity(S(0), S(1), MoveKind::kShuttle), kF);
    EXPECT_DOUBLE_EQ(t.fidelity(S(1), S(2), MoveKind::kSwap), 0.98);
    ASSERT_TRUE(t.has_coordinates());
    EXPECT_EQ(*t.column(S(2)), 2);
    EXPECT_THROW(parse_edge_list("0 x\n", kF, kG), ParseError);
}

}  // namespace
}  // namespace besnake
