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

#include "besnake/topology.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <tuple>

#include "besnake/errors.hpp"

namespace besnake {

namespace {

void check_probability(double p, const char *what) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw InvalidArgument(std::string(what) + " must lie in (0, 1]");
    }
}

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw InvalidArgument("grid dimensions must be positive");
    }
    if (rows * cols < 2) {
        throw InvalidArgument("grid needs at least two sites");
    }
}

std::vector<Topology::EdgeSpec> grid_edges(std::size_t rows, std::size_t cols, bool diagonal,
                                           double shuttle_f, double swap_f) {
    std::vector<Topology::EdgeSpec> edges;
    auto id = [cols](std::size_t r, std::size_t c) {
        return SiteId(static_cast<std::uint32_t>(r * cols + c));
    };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), shuttle_f, swap_f});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), shuttle_f, swap_f});
            if (diagonal && r + 1 < rows && c + 1 < cols) {
                edges.push_back({id(r, c), id(r + 1, c + 1), shuttle_f, swap_f});
                edges.push_back({id(r, c + 1), id(r + 1, c), shuttle_f, swap_f});
            }
        }
    }
    return edges;
}

void attach_grid(Topology &t, std::size_t rows, std::size_t cols) {
    std::vector<int> rs(rows * cols), cs(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        rs[i] = static_cast<int>(i / cols);
        cs[i] = static_cast<int>(i % cols);
    }
    t.set_coordinates(std::move(rs), std::move(cs));
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t parse_size(std::string_view s, std::string_view spec) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw InvalidArgument("bad topology spec '" + std::string(spec) + "'");
    }
    return v;
}

}  // namespace

Topology::Topology(std::size_t num_sites, std::span<const EdgeSpec> edges) : adjacency_(num_sites) {
    if (num_sites < 2) throw InvalidArgument("topology needs at least two sites");
    for (const auto &e : edges) {
        if (index(e.a) >= num_sites || index(e.b) >= num_sites) {
            throw InvalidArgument("edge references unknown site");
        }
        if (e.a == e.b) throw InvalidArgument("self-loop on site " + std::to_string(e.a.value));
        check_probability(e.shuttle_fidelity, "shuttle fidelity");
        check_probability(e.swap_fidelity, "swap fidelity");
        auto &na = adjacency_[index(e.a)];
        if (std::any_of(na.begin(), na.end(), [&](const Neighbor &n) { return n.site == e.b; })) {
            throw InvalidArgument("duplicate edge " + std::to_string(e.a.value) + "-" +
                                  std::to_string(e.b.value));
        }
        na.push_back({e.b, e.shuttle_fidelity, e.swap_fidelity});
        adjacency_[index(e.b)].push_back({e.a, e.shuttle_fidelity, e.swap_fidelity});
        ++num_edges_;
    }
    for (auto &list : adjacency_) {
        std::sort(list.begin(), list.end(),
                  [](const Neighbor &x, const Neighbor &y) { return x.site < y.site; });
    }

    std::vector<bool> seen(num_sites, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const auto u = frontier.front();
        frontier.pop();
        for (const auto &n : adjacency_[u]) {
            if (!seen[index(n.site)]) {
                seen[index(n.site)] = true;
                ++reached;
                frontier.push(index(n.site));
            }
        }
    }
    if (reached != num_sites) throw InvalidArgument("topology is not connected");
}

bool Topology::adjacent(SiteId a, SiteId b) const {
    if (index(a) >= num_sites() || index(b) >= num_sites()) return false;
    const auto &na = adjacency_[index(a)];
    return std::any_of(na.begin(), na.end(), [&](const Neighbor &n) { return n.site == b; });
}

double Topology::fidelity(SiteId a, SiteId b, MoveKind kind) const {
    if (index(a) < num_sites()) {
        for (const auto &n : adjacency_[index(a)]) {
            if (n.site == b) {
                return kind == MoveKind::kShuttle ? n.shuttle_fidelity : n.swap_fidelity;
            }
        }
    }
    throw InvalidArgument("no edge between sites " + std::to_string(a.value) + " and " +
                          std::to_string(b.value));
}

std::vector<Edge> Topology::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (const auto &n : adjacency_[u]) {
            if (u < index(n.site)) out.push_back({SiteId(static_cast<std::uint32_t>(u)), n.site});
        }
    }
    return out;
}

std::optional<int> Topology::row(SiteId s) const {
    if (row_of_.empty()) return std::nullopt;
    return row_of_.at(index(s));
}

std::optional<int> Topology::column(SiteId s) const {
    if (col_of_.empty()) return std::nullopt;
    return col_of_.at(index(s));
}

void Topology::set_coordinates(std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() != num_sites() || cols.size() != num_sites()) {
        throw InvalidArgument("coordinate table must cover every site");
    }
    row_of_ = std::move(rows);
    col_of_ = std::move(cols);
}

SiteId Topology::site_at(std::size_t row, std::size_t col) const {
    if (!is_grid() || row >= rows_ || col >= cols_) throw InvalidArgument("cell outside grid");
    return SiteId(static_cast<std::uint32_t>(row * cols_ + col));
}

Topology build_square_grid(std::size_t rows, std::size_t cols, double shuttle_fidelity,
                           double swap_fidelity) {
    check_dims(rows, cols);
    const auto edges = grid_edges(rows, cols, false, shuttle_fidelity, swap_fidelity);
    Topology t(rows * cols, edges);
    t.rows_ = rows;
    t.cols_ = cols;
    attach_grid(t, rows, cols);
    return t;
}

Topology build_diagonal_grid(std::size_t rows, std::size_t cols, double shuttle_fidelity,
                             double swap_fidelity) {
    check_dims(rows, cols);
    const auto edges = grid_edges(rows, cols, true, shuttle_fidelity, swap_fidelity);
    Topology t(rows * cols, edges);
    t.rows_ = rows;
    t.cols_ = cols;
    attach_grid(t, rows, cols);
    return t;
}

std::size_t accumulated_degree(const Topology &t, std::span<const SiteId> path) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (index(path[i]) >= t.num_sites()) throw InvalidPath("path leaves the topology");
        if (i > 0 && !t.adjacent(path[i - 1], path[i])) {
            throw InvalidPath("sites " + std::to_string(path[i - 1].value) + " and " +
                              std::to_string(path[i].value) + " are not coupled");
        }
        total += t.degree(path[i]);
    }
    return total;
}

double accumulated_fidelity(const Topology &t, std::span<const Edge> moves, MoveKind kind) {
    double product = 1.0;
    for (const auto &m : moves) product *= t.fidelity(m.a, m.b, kind);
    return product;
}

Topology parse_edge_list(std::string_view text, double shuttle_fidelity, double swap_fidelity) {
    std::vector<Topology::EdgeSpec> edges;
    std::vector<std::tuple<std::size_t, int, int>> coords;
    std::size_t max_site = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        std::istringstream fields(line);
        std::string first;
        fields >> first;
        if (first == "site") {
            std::size_t id;
            int r, c;
            if (!(fields >> id >> r >> c)) throw ParseError(lineno, "expected 'site <id> <row> <col>'");
            coords.emplace_back(id, r, c);
            max_site = std::max(max_site, id);
            continue;
        }
        std::size_t a, b;
        std::istringstream head(first);
        if (!(head >> a) || !(fields >> b)) throw ParseError(lineno, "expected '<a> <b> [f_shuttle f_swap]'");
        double fs = shuttle_fidelity, fw = swap_fidelity;
        if (fields >> fs) {
            if (!(fields >> fw)) throw ParseError(lineno, "shuttle fidelity given without swap fidelity");
        }
        edges.push_back({SiteId(static_cast<std::uint32_t>(a)), SiteId(static_cast<std::uint32_t>(b)), fs, fw});
        max_site = std::max({max_site, a, b});
    }
    if (edges.empty()) throw InvalidArgument("edge list is empty");
    Topology t(max_site + 1, edges);
    if (!coords.empty()) {
        if (coords.size() != t.num_sites()) throw InvalidArgument("site coordinates must cover every site");
        std::vector<int> rs(t.num_sites()), cs(t.num_sites());
        for (auto [id, r, c] : coords) {
            rs[id] = r;
            cs[id] = c;
        }
        t.set_coordinates(std::move(rs), std::move(cs));
    }
    return t;
}

Topology parse_topology_spec(std::string_view spec, double shuttle_fidelity, double swap_fidelity) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw InvalidArgument("bad topology spec '" + std::string(spec) + "'");
    }
    const auto kind = spec.substr(0, colon);
    const auto rest = spec.substr(colon + 1);
    if (kind == "edges") {
        std::ifstream file{std::string(rest)};
        if (!file) throw InvalidArgument("cannot open edge list '" + std::string(rest) + "'");
        std::stringstream buf;
        buf << file.rdbuf();
        return parse_edge_list(buf.str(), shuttle_fidelity, swap_fidelity);
    }
    const auto x = rest.find('x');
    if (x == std::string_view::npos) {
        throw InvalidArgument("bad topology spec '" + std::string(spec) + "'");
    }
    const auto rows = parse_size(rest.substr(0, x), spec);
    const auto cols = parse_size(rest.substr(x + 1), spec);
    if (kind == "grid") return build_square_grid(rows, cols, shuttle_fidelity, swap_fidelity);
    if (kind == "grid+diag") return build_diagonal_grid(rows, cols, shuttle_fidelity, swap_fidelity);
    throw InvalidArgument("unknown topology kind '" + std::string(kind) + "'");
}

}  // namespace besnake
