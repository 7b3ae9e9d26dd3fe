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

#include "besnake/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "besnake/errors.hpp"

namespace besnake {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? s.size() - start : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const auto start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::optional<std::uint32_t> to_uint(std::string_view s) {
    std::uint32_t v = 0;
    if (s.empty()) return std::nullopt;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v == kNone) return std::nullopt;
    return v;
}

class LineParser {
  public:
    explicit LineParser(std::size_t line) : line_(line) {}

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(line_, what); }

    std::uint32_t number(std::string_view s, const char *what) const {
        auto v = to_uint(s);
        if (!v) fail(std::string("expected ") + what + ", got '" + std::string(s) + "'");
        return *v;
    }

    QubitId qubit(std::string_view s, std::size_t n_qubits) const {
        const auto v = number(s, "qubit id");
        if (v >= n_qubits) {
            fail("qubit " + std::to_string(v) + " out of range (qubits " + std::to_string(n_qubits) + ")");
        }
        return QubitId(v);
    }

    // "@a>b" or "@a,b"
    std::pair<SiteId, SiteId> site_pair(std::string_view s, char sep) const {
        if (s.size() < 2 || s[0] != '@') fail("expected '@<site>" + std::string(1, sep) + "<site>'");
        const auto body = s.substr(1);
        const auto pos = body.find(sep);
        if (pos == std::string_view::npos) fail("expected '@<site>" + std::string(1, sep) + "<site>'");
        return {SiteId(number(body.substr(0, pos), "site id")), SiteId(number(body.substr(pos + 1), "site id"))};
    }

    Gate gate(std::string_view text, std::size_t n_qubits) const {
        const auto w = words(text);
        if (w.empty()) fail("empty gate");
        const auto name = w[0];
        auto arity = [&](std::size_t n) {
            if (w.size() != n + 1) {
                fail("'" + std::string(name) + "' takes " + std::to_string(n) + " arguments");
            }
        };
        if (name == "tqg") {
            arity(2);
            return TwoQubitGate{qubit(w[1], n_qubits), qubit(w[2], n_qubits)};
        }
        if (name == "z") {
            arity(1);
            return ZGate{qubit(w[1], n_qubits)};
        }
        if (name == "shuttle") {
            arity(2);
            const auto [from, to] = site_pair(w[2], '>');
            return Shuttle{qubit(w[1], n_qubits), from, to};
        }
        if (name == "swap") {
            arity(3);
            const auto [sq, sr] = site_pair(w[3], ',');
            return Swap{qubit(w[1], n_qubits), qubit(w[2], n_qubits), sq, sr};
        }
        fail("unknown gate '" + std::string(name) + "'");
    }

  private:
    std::size_t line_;
};

// Returns a description of the first invariant violation in the cycle.
std::optional<std::string> cycle_error(const Cycle &cycle, std::size_t n_qubits) {
    std::vector<bool> used(n_qubits, false);
    if (cycle.gates.empty()) return "empty cycle";
    for (const auto &g : cycle.gates) {
        for (auto q : operands(g)) {
            if (index(q) >= n_qubits) return "qubit " + std::to_string(q.value) + " out of range";
        }
        const auto err = std::visit(
            Overloaded{
                [](const TwoQubitGate &t) -> std::optional<std::string> {
                    if (t.a == t.b) return "duplicate operand in '" + format_gate(t) + "'";
                    return std::nullopt;
                },
                [](const ZGate &) -> std::optional<std::string> { return std::nullopt; },
                [](const Shuttle &s) -> std::optional<std::string> {
                    if (s.from == s.to) return "shuttle with identical endpoints";
                    return std::nullopt;
                },
                [](const Swap &s) -> std::optional<std::string> {
                    if (s.q == s.r) return "duplicate operand in '" + format_gate(s) + "'";
                    if (s.site_q == s.site_r) return "swap with identical sites";
                    return std::nullopt;
                },
            },
            g);
        if (err) return err;
        if (std::holds_alternative<Shuttle>(g)) continue;
        for (auto q : operands(g)) {
            if (used[index(q)]) {
                return "qubit " + std::to_string(q.value) + " used by more than one gate in a cycle";
            }
            used[index(q)] = true;
        }
    }
    return std::nullopt;
}

RoutedFile parse_impl(std::string_view text, bool allow_place) {
    RoutedFile out;
    bool have_header = false;
    bool have_place = false;
    std::size_t lineno = 0;
    for (auto raw : split(text, '\n')) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto line = trim(raw);
        if (line.empty()) continue;
        LineParser p(lineno);
        const auto space = line.find_first_of(" \t");
        const auto keyword = line.substr(0, space);
        const auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

        if (keyword == "qubits") {
            if (have_header) p.fail("duplicate 'qubits' header");
            const auto n = p.number(rest, "qubit count");
            if (n == 0) p.fail("qubit count must be positive");
            out.circuit.n_qubits = n;
            have_header = true;
            continue;
        }
        if (!have_header) p.fail("missing 'qubits <N>' header");

        if (keyword == "place") {
            if (!allow_place) p.fail("'place' is only valid in routed files");
            if (have_place) p.fail("duplicate 'place' line");
            if (!out.circuit.cycles.empty()) p.fail("'place' must precede all cycles");
            std::vector<bool> seen_q(out.circuit.n_qubits, false);
            std::vector<SiteId> sites;
            for (auto item : words(rest)) {
                const auto at = item.find('@');
                if (at == std::string_view::npos) p.fail("expected '<qubit>@<site>'");
                const auto q = p.qubit(item.substr(0, at), out.circuit.n_qubits);
                const SiteId s(p.number(item.substr(at + 1), "site id"));
                if (seen_q[index(q)]) p.fail("qubit " + std::to_string(q.value) + " placed twice");
                if (std::find(sites.begin(), sites.end(), s) != sites.end()) {
                    p.fail("site " + std::to_string(s.value) + " holds two qubits");
                }
                seen_q[index(q)] = true;
                sites.push_back(s);
                out.placement.emplace_back(q, s);
            }
            have_place = true;
            continue;
        }
        if (keyword == "cycle") {
            Cycle cycle;
            if (rest.empty()) p.fail("empty cycle");
            for (auto part : split(rest, ';')) cycle.gates.push_back(p.gate(part, out.circuit.n_qubits));
            if (auto err = cycle_error(cycle, out.circuit.n_qubits)) p.fail(*err);
            out.circuit.cycles.push_back(std::move(cycle));
            continue;
        }
        p.fail("unknown directive '" + std::string(keyword) + "'");
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'qubits <N>' header");
    return out;
}

}  // namespace

std::vector<QubitId> operands(const Gate &g) {
    return std::visit(Overloaded{
                          [](const TwoQubitGate &t) { return std::vector<QubitId>{t.a, t.b}; },
                          [](const ZGate &z) { return std::vector<QubitId>{z.q}; },
                          [](const Shuttle &s) { return std::vector<QubitId>{s.q}; },
                          [](const Swap &s) { return std::vector<QubitId>{s.q, s.r}; },
                      },
                      g);
}

bool is_movement(const Gate &g) {
    return std::holds_alternative<Shuttle>(g) || std::holds_alternative<Swap>(g);
}

std::string gate_name(const Gate &g) {
    static constexpr const char *kNames[] = {"tqg", "z", "shuttle", "swap"};
    return kNames[g.index()];
}

std::string format_gate(const Gate &g) {
    return std::visit(
        Overloaded{
            [](const TwoQubitGate &t) { return "tqg " + std::to_string(t.a.value) + " " + std::to_string(t.b.value); },
            [](const ZGate &z) { return "z " + std::to_string(z.q.value); },
            [](const Shuttle &s) {
                return "shuttle " + std::to_string(s.q.value) + " @" + std::to_string(s.from.value) + ">" +
                       std::to_string(s.to.value);
            },
            [](const Swap &s) {
                return "swap " + std::to_string(s.q.value) + " " + std::to_string(s.r.value) + " @" +
                       std::to_string(s.site_q.value) + "," + std::to_string(s.site_r.value);
            },
        },
        g);
}

void validate(const Circuit &c) {
    if (c.n_qubits == 0) throw InvalidArgument("circuit must declare at least one qubit");
    for (std::size_t i = 0; i < c.cycles.size(); ++i) {
        if (auto err = cycle_error(c.cycles[i], c.n_qubits)) {
            throw InvalidArgument("cycle " + std::to_string(i) + ": " + *err);
        }
    }
}

Circuit parse_circuit(std::string_view text) { return parse_impl(text, false).circuit; }

RoutedFile parse_routed(std::string_view text) { return parse_impl(text, true); }

std::string emit_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
    for (const auto &cycle : c.cycles) {
        out += "cycle ";
        for (std::size_t i = 0; i < cycle.gates.size(); ++i) {
            if (i > 0) out += " ; ";
            out += format_gate(cycle.gates[i]);
        }
        out += "\n";
    }
    return out;
}

std::string emit_routed(const RoutedFile &f) {
    std::string body = emit_circuit(f.circuit);
    const auto header_end = body.find('\n') + 1;
    std::string place = "place";
    for (const auto &[q, s] : f.placement) {
        place += " " + std::to_string(q.value) + "@" + std::to_string(s.value);
    }
    place += "\n";
    body.insert(header_end, place);
    return body;
}

Circuit schedule_asap(const Circuit &c) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    // next_free[q] = first cycle index after the last gate that used q
    std::vector<std::size_t> next_free(c.n_qubits, 0);
    for (const auto &cycle : c.cycles) {
        for (const auto &g : cycle.gates) {
            std::size_t slot = 0;
            const auto ops = operands(g);
            for (auto q : ops) slot = std::max(slot, next_free[index(q)]);
            if (slot == out.cycles.size()) out.cycles.emplace_back();
            out.cycles[slot].gates.push_back(g);
            for (auto q : ops) next_free[index(q)] = slot + 1;
        }
    }
    return out;
}

Circuit serialize_circuit(const Circuit &c) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    for (const auto &cycle : c.cycles) {
        for (const auto &g : cycle.gates) out.cycles.push_back(Cycle{{g}});
    }
    return out;
}

std::size_t depth(const Circuit &c) { return c.cycles.size(); }

std::size_t gate_count(const Circuit &c) {
    std::size_t n = 0;
    for (const auto &cycle : c.cycles) n += cycle.gates.size();
    return n;
}

}  // namespace besnake
