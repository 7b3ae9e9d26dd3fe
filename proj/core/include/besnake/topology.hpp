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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "besnake/ids.hpp"

namespace besnake {

/// Undirected coupling link between two sites.
struct Edge {
    SiteId a;
    SiteId b;

    bool operator==(const Edge &) const = default;
};

enum class MoveKind { kShuttle, kSwap };

/// Coupling graph of quantum dots. Immutable once built.
///
/// Every edge carries a shuttle fidelity and a SWAP fidelity, both in (0, 1].
/// Grid topologies additionally know each site's row and column, which fixes
/// the meaning of "neighbouring column" for shuttle-based Z rotations.
class Topology {
  public:
    struct Neighbor {
        SiteId site;
        double shuttle_fidelity;
        double swap_fidelity;
    };

    /// Builds from an explicit edge list. Rejects self loops, duplicate
    /// edges, out-of-range sites, fidelities outside (0, 1], and
    /// disconnected graphs.
    struct EdgeSpec {
        SiteId a;
        SiteId b;
        double shuttle_fidelity;
        double swap_fidelity;
    };
    Topology(std::size_t num_sites, std::span<const EdgeSpec> edges);

    std::size_t num_sites() const noexcept { return adjacency_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    /// Neighbours sorted by ascending site id.
    std::span<const Neighbor> neighbors(SiteId s) const { return adjacency_.at(index(s)); }
    std::size_t degree(SiteId s) const { return adjacency_.at(index(s)).size(); }
    bool adjacent(SiteId a, SiteId b) const;

    /// Fidelity of the given move kind across an edge; throws InvalidArgument
    /// if the sites are not coupled.
    double fidelity(SiteId a, SiteId b, MoveKind kind) const;

    std::vector<Edge> edges() const;

    bool is_grid() const noexcept { return rows_ > 0; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool has_coordinates() const noexcept { return !row_of_.empty(); }
    std::optional<int> row(SiteId s) const;
    std::optional<int> column(SiteId s) const;

    /// Attach per-site (row, col) coordinates; used by edge-list files.
    void set_coordinates(std::vector<int> rows, std::vector<int> cols);

    /// Site at (row, col) of a grid.
    SiteId site_at(std::size_t row, std::size_t col) const;

  private:
    friend Topology build_square_grid(std::size_t, std::size_t, double, double);
    friend Topology build_diagonal_grid(std::size_t, std::size_t, double, double);

    std::vector<std::vector<Neighbor>> adjacency_;
    std::size_t num_edges_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> row_of_;
    std::vector<int> col_of_;
};

/// rows x cols grid with orthogonal couplings and uniform fidelities.
Topology build_square_grid(std::size_t rows, std::size_t cols, double shuttle_fidelity,
                           double swap_fidelity);

/// Square grid plus both diagonals of every unit cell.
Topology build_diagonal_grid(std::size_t rows, std::size_t cols, double shuttle_fidelity,
                             double swap_fidelity);

/// Sum of node degrees over every site of the path, endpoints included.
/// Throws InvalidPath if consecutive sites are not coupled.
std::size_t accumulated_degree(const Topology &t, std::span<const SiteId> path);

/// Product of the per-edge fidelity of `kind` over the moves. Empty -> 1.
double accumulated_fidelity(const Topology &t, std::span<const Edge> moves, MoveKind kind);

inline constexpr double kDefaultShuttleFidelity = 0.9998;
inline constexpr double kDefaultSwapFidelity = 0.9995;

/// Parses `grid:RxC`, `grid+diag:RxC`, or `edges:PATH`.
///
/// Edge-list files hold one `a b [shuttle_f swap_f]` per line; optional
/// `site <id> <row> <col>` lines attach coordinates. `#` starts a comment.
Topology parse_topology_spec(std::string_view spec, double shuttle_fidelity = kDefaultShuttleFidelity,
                             double swap_fidelity = kDefaultSwapFidelity);

/// Loads an edge-list topology from text (see parse_topology_spec).
Topology parse_edge_list(std::string_view text, double shuttle_fidelity, double swap_fidelity);

}  // namespace besnake
