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

#include "besnake/placement.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "besnake/errors.hpp"

namespace besnake {

DeviceState::DeviceState(std::size_t num_sites, std::size_t num_qubits)
    : site_of_(num_qubits, kNone),
      qubit_at_(num_sites, kNone),
      fixed_(num_sites, false),
      fixed_empty_(num_sites, false) {}

DeviceState DeviceState::from_assignment(const Topology &t, std::size_t num_qubits, const Assignment &a) {
    DeviceState s(t.num_sites(), num_qubits);
    for (const auto &[q, site] : a) s.place(q, site);
    return s;
}

std::optional<SiteId> DeviceState::site_of(QubitId q) const {
    const auto v = site_of_.at(index(q));
    if (v == kNone) return std::nullopt;
    return SiteId(v);
}

SiteId DeviceState::position(QubitId q) const {
    if (index(q) >= site_of_.size() || site_of_[index(q)] == kNone) {
        throw InvalidArgument("qubit " + std::to_string(q.value) + " is not placed");
    }
    return SiteId(site_of_[index(q)]);
}

std::optional<QubitId> DeviceState::qubit_at(SiteId s) const {
    const auto v = qubit_at_.at(index(s));
    if (v == kNone) return std::nullopt;
    return QubitId(v);
}

std::vector<SiteId> DeviceState::fixed_sites() const {
    std::vector<SiteId> out;
    for (std::size_t i = 0; i < fixed_.size(); ++i) {
        if (fixed_[i]) out.emplace_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

std::vector<SiteId> DeviceState::fixed_empty_sites() const {
    std::vector<SiteId> out;
    for (std::size_t i = 0; i < fixed_empty_.size(); ++i) {
        if (fixed_empty_[i]) out.emplace_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

void DeviceState::place(QubitId q, SiteId s) {
    if (index(q) >= site_of_.size()) throw InvalidArgument("qubit " + std::to_string(q.value) + " out of range");
    if (index(s) >= qubit_at_.size()) throw InvalidArgument("site " + std::to_string(s.value) + " out of range");
    if (site_of_[index(q)] != kNone) throw InvalidArgument("qubit " + std::to_string(q.value) + " already placed");
    if (qubit_at_[index(s)] != kNone) {
        throw OccupancyViolation("site " + std::to_string(s.value) + " already holds a qubit");
    }
    site_of_[index(q)] = s.value;
    qubit_at_[index(s)] = q.value;
    ++placed_;
    debug_check();
}

void DeviceState::fix(SiteId s) {
    if (!occupied(s)) throw std::logic_error("cannot pin empty site " + std::to_string(s.value));
    fixed_[index(s)] = true;
}

void DeviceState::reserve_empty(SiteId s) {
    if (occupied(s)) throw std::logic_error("cannot reserve occupied site " + std::to_string(s.value));
    fixed_empty_[index(s)] = true;
}

void DeviceState::release_all() {
    std::fill(fixed_.begin(), fixed_.end(), false);
    std::fill(fixed_empty_.begin(), fixed_empty_.end(), false);
}

void DeviceState::shuttle(const Topology &t, QubitId q, SiteId to, bool z_override) {
    const auto from = position(q);
    if (index(to) >= qubit_at_.size()) throw InvalidArgument("site " + std::to_string(to.value) + " out of range");
    if (!t.adjacent(from, to)) {
        throw AdjacencyViolation("shuttle " + std::to_string(q.value) + ": sites " + std::to_string(from.value) +
                                 " and " + std::to_string(to.value) + " are not coupled");
    }
    if (occupied(to)) {
        throw OccupancyViolation("shuttle " + std::to_string(q.value) + ": site " + std::to_string(to.value) +
                                 " is occupied");
    }
    if (fixed_[index(from)]) {
        throw FixedSiteViolation("shuttle " + std::to_string(q.value) + ": qubit is pinned");
    }
    if (fixed_empty_[index(to)] && !z_override) {
        throw FixedSiteViolation("shuttle " + std::to_string(q.value) + ": site " + std::to_string(to.value) +
                                 " is reserved");
    }
    fixed_empty_[index(to)] = false;
    qubit_at_[index(from)] = kNone;
    qubit_at_[index(to)] = q.value;
    site_of_[index(q)] = to.value;
    debug_check();
}

void DeviceState::swap(const Topology &t, QubitId q, QubitId r) {
    const auto sq = position(q);
    const auto sr = position(r);
    if (!t.adjacent(sq, sr)) {
        throw AdjacencyViolation("swap " + std::to_string(q.value) + "," + std::to_string(r.value) +
                                 ": qubits are not on coupled sites");
    }
    if (fixed_[index(sq)] || fixed_[index(sr)]) {
        throw FixedSiteViolation("swap " + std::to_string(q.value) + "," + std::to_string(r.value) +
                                 ": a qubit is pinned");
    }
    site_of_[index(q)] = sr.value;
    site_of_[index(r)] = sq.value;
    qubit_at_[index(sq)] = r.value;
    qubit_at_[index(sr)] = q.value;
    debug_check();
}

Assignment DeviceState::assignment() const {
    Assignment out;
    for (std::size_t q = 0; q < site_of_.size(); ++q) {
        if (site_of_[q] != kNone) out.emplace_back(QubitId(static_cast<std::uint32_t>(q)), SiteId(site_of_[q]));
    }
    return out;
}

void DeviceState::check_invariants() const {
    std::size_t count = 0;
    for (std::size_t q = 0; q < site_of_.size(); ++q) {
        if (site_of_[q] == kNone) continue;
        ++count;
        if (site_of_[q] >= qubit_at_.size() || qubit_at_[site_of_[q]] != q) {
            throw std::logic_error("occupancy maps disagree for qubit " + std::to_string(q));
        }
    }
    std::size_t occupied_sites = 0;
    for (std::size_t s = 0; s < qubit_at_.size(); ++s) {
        if (qubit_at_[s] != kNone) {
            ++occupied_sites;
            if (qubit_at_[s] >= site_of_.size() || site_of_[qubit_at_[s]] != s) {
                throw std::logic_error("occupancy maps disagree at site " + std::to_string(s));
            }
            if (fixed_empty_[s]) throw std::logic_error("reserved site " + std::to_string(s) + " is occupied");
        } else if (fixed_[s]) {
            throw std::logic_error("pinned site " + std::to_string(s) + " is empty");
        }
    }
    if (count != occupied_sites || count != placed_) throw std::logic_error("placed-qubit count mismatch");
}

DeviceState checkerboard_init(const Topology &t, std::size_t n_qubits) {
    if (!t.is_grid()) throw InvalidArgument("checkerboard placement needs a grid topology");
    if (n_qubits == 0) throw InvalidArgument("checkerboard placement needs at least one qubit");
    std::vector<SiteId> even;
    for (std::size_t i = 0; i < t.num_sites(); ++i) {
        const SiteId s(static_cast<std::uint32_t>(i));
        if ((*t.row(s) + *t.column(s)) % 2 == 0) even.push_back(s);
    }
    if (n_qubits > even.size()) {
        throw CapacityError("checkerboard holds at most " + std::to_string(even.size()) + " qubits, requested " +
                            std::to_string(n_qubits));
    }
    DeviceState s(t.num_sites(), n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) s.place(QubitId(static_cast<std::uint32_t>(q)), even[q]);
    return s;
}

DeviceState density_init(const Topology &t, double density) {
    if (!(density > 0.0 && density < 1.0)) throw InvalidArgument("density must lie in (0, 1)");
    const auto n = static_cast<std::size_t>(std::lround(density * static_cast<double>(t.num_sites())));
    if (n < 1) throw InvalidArgument("density places no qubits");
    if (n > t.num_sites() - 1) throw InvalidArgument("density leaves no empty site for shuttling");
    DeviceState s(t.num_sites(), n);
    for (std::size_t q = 0; q < n; ++q) {
        s.place(QubitId(static_cast<std::uint32_t>(q)), SiteId(static_cast<std::uint32_t>(q)));
    }
    return s;
}

DeviceState parse_placement_spec(const Topology &t, std::string_view spec, std::size_t n_qubits) {
    if (spec == "checkerboard") return checkerboard_init(t, n_qubits);
    if (spec.starts_with("density:")) {
        const auto body = spec.substr(8);
        double d = 0;
        auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), d);
        if (ec != std::errc() || p != body.data() + body.size()) {
            throw InvalidArgument("bad density in '" + std::string(spec) + "'");
        }
        return density_init(t, d);
    }
    throw InvalidArgument("unknown placement spec '" + std::string(spec) + "'");
}

std::string render_board(const Topology &t, const DeviceState &s) {
    std::string out;
    if (!t.is_grid()) {
        for (std::size_t i = 0; i < t.num_sites(); ++i) {
            const SiteId site(static_cast<std::uint32_t>(i));
            if (auto q = s.qubit_at(site)) out += std::to_string(i) + ":" + std::to_string(q->value) + " ";
        }
        if (!out.empty()) out.back() = '\n';
        return out;
    }
    const auto width = std::max<std::size_t>(1, std::to_string(s.num_qubits()).size());
    for (std::size_t r = t.rows(); r-- > 0;) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
            const auto site = t.site_at(r, c);
            std::string cell = ".";
            if (auto q = s.qubit_at(site)) cell = std::to_string(q->value);
            if (c > 0) out += ' ';
            out += std::string(width - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

}  // namespace besnake
