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

// Command-line front end: route, verify, gen and bench.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#ifdef BESNAKE_VENDORED_JSON
#include <json.hpp>
#else
#include <nlohmann/json.hpp>
#endif

#include "besnake/besnake.hpp"

namespace {

using namespace besnake;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << text;
}

std::string render_trace(const Topology &t, DeviceState s, const Circuit &routed) {
    std::ostringstream os;
    os << "initial\n" << render_board(t, s);
    for (std::size_t i = 0; i < routed.cycles.size(); ++i) {
        const auto &c = routed.cycles[i];
        os << "\ncycle " << i << ":";
        for (std::size_t k = 0; k < c.gates.size(); ++k) os << (k ? " ; " : " ") << format_gate(c.gates[k]);
        os << '\n';
        for (const auto &g : c.gates) {
            if (const auto *sh = std::get_if<Shuttle>(&g)) s.shuttle(t, sh->q, sh->to, true);
            if (const auto *sw = std::get_if<Swap>(&g)) s.swap(t, sw->q, sw->r);
        }
        os << render_board(t, s);
    }
    return os.str();
}

nlohmann::json report_json(const VerificationReport &r) {
    nlohmann::json j;
    j["ok"] = r.ok();
    j["violations"] = nlohmann::json::array();
    for (const auto &v : r.violations) {
        j["violations"].push_back(
            {{"cycle", v.cycle}, {"gate", v.gate}, {"kind", std::string(to_string(v.kind))}, {"message", v.message}});
    }
    return j;
}

struct RouteArgs {
    std::string topology;
    std::string placement = "checkerboard";
    std::string circuit;
    std::string paths = "budget:32";
    std::string schedule = "keep";
    bool swap_replace = false;
    bool no_forced_swap = false;
    double shuttle_f = kDefaultShuttleFidelity;
    double swap_f = kDefaultSwapFidelity;
    std::uint64_t seed = 0;
    std::string out = "-";
    std::string trace;
    long path_time_limit_us = 0;
};

int run_route(const RouteArgs &a) {
    auto circuit = parse_circuit(read_file(a.circuit));
    if (a.schedule == "asap") circuit = schedule_asap(circuit);
    if (a.schedule == "serial") circuit = serialize_circuit(circuit);

    RoutingConfig cfg;
    cfg.paths = parse_path_mode(a.paths);
    cfg.swap_replace = a.swap_replace;
    cfg.forced_swap_enabled = !a.no_forced_swap;
    cfg.rng_seed = a.seed;
    if (a.path_time_limit_us > 0) cfg.path_time_limit = std::chrono::microseconds(a.path_time_limit_us);
    const auto topo = parse_topology_spec(a.topology, a.shuttle_f, a.swap_f);
    const auto s0 = parse_placement_spec(topo, a.placement, circuit.n_qubits);
    const auto report = route_circuit(topo, s0, circuit, cfg);

    write_file(a.out, emit_routed({report.initial_placement, report.routed}));
    if (!a.trace.empty()) write_file(a.trace, render_trace(topo, s0, report.routed));
    std::fprintf(stderr,
                 "input: %zu gates, depth %zu\nrouted: depth %zu, +%zu shuttles, +%zu swaps "
                 "(%zu forced, %zu replacements), %zu cycle splits\n",
                 report.input_gates, report.input_depth, report.output_depth, report.added_shuttles,
                 report.added_swaps, report.forced_swaps, report.swap_replacements, report.cycle_splits);
    if (report.input_gates > 0) {
        std::fprintf(stderr, "gate overhead %.2f%%, depth overhead %.2f%%\n",
                     gate_overhead(circuit, report.routed), depth_overhead(circuit, report.routed));
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Shuttle-based qubit router for spin-qubit arrays"};
    app.require_subcommand(1);

    RouteArgs ra;
    auto *route = app.add_subcommand("route", "Route a circuit onto a device");
    route->add_option("--topology", ra.topology, "grid:RxC | grid+diag:RxC | edges:FILE")->required();
    route->add_option("--placement", ra.placement, "checkerboard | density:F")->capture_default_str();
    route->add_option("--circuit", ra.circuit, "Input circuit file")->required()->check(CLI::ExistingFile);
    route->add_option("--paths", ra.paths, "single | budget:K")->capture_default_str();
    route->add_option("--schedule", ra.schedule, "keep | asap | serial")
        ->check(CLI::IsMember({"keep", "asap", "serial"}))
        ->capture_default_str();
    route->add_flag("--swap-replace", ra.swap_replace, "Replace costly shuttle steps by a SWAP");
    route->add_flag("--no-forced-swap", ra.no_forced_swap, "Resolve blockades by detours instead of SWAPs");
    route->add_option("--shuttle-fidelity", ra.shuttle_f)->capture_default_str();
    route->add_option("--swap-fidelity", ra.swap_f)->capture_default_str();
    route->add_option("--seed", ra.seed)->capture_default_str();
    route->add_option("--out", ra.out, "Routed output file ('-' for stdout)")->capture_default_str();
    route->add_option("--trace", ra.trace, "Write per-cycle board snapshots here");
    route->add_option("--path-time-limit-us", ra.path_time_limit_us,
                      "Wall-clock cap on path enumeration per goal (output becomes timing dependent)");

    std::string v_topology, v_placement = "checkerboard", v_original, v_routed;
    double v_shuttle_f = kDefaultShuttleFidelity, v_swap_f = kDefaultSwapFidelity;
    bool v_json = false;
    auto *verify = app.add_subcommand("verify", "Replay a routed circuit and check legality");
    verify->add_option("--topology", v_topology)->required();
    verify->add_option("--placement", v_placement)->capture_default_str();
    verify->add_option("--original", v_original)->required()->check(CLI::ExistingFile);
    verify->add_option("--routed", v_routed)->required()->check(CLI::ExistingFile);
    verify->add_option("--shuttle-fidelity", v_shuttle_f);
    verify->add_option("--swap-fidelity", v_swap_f);
    verify->add_flag("--json", v_json, "Print the report as JSON");

    std::size_t g_qubits = 0, g_gates = 0;
    double g_pct = 50;
    std::uint64_t g_seed = 0;
    std::string g_out = "-";
    auto *gen = app.add_subcommand("gen", "Generate a seeded random circuit");
    gen->add_option("--qubits", g_qubits)->required();
    gen->add_option("--gates", g_gates)->required();
    gen->add_option("--tqg-pct", g_pct)->capture_default_str();
    gen->add_option("--seed", g_seed)->capture_default_str();
    gen->add_option("--out", g_out)->capture_default_str();

    std::string b_spec, b_out = "-";
    bool b_baseline = false;
    std::size_t b_jobs = 1;
    auto *bench = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
    bench->add_option("--spec", b_spec)->required()->check(CLI::ExistingFile);
    bench->add_option("--out", b_out)->capture_default_str();
    bench->add_flag("--baseline", b_baseline, "Use the serial SWAP baseline instead");
    bench->add_option("--jobs", b_jobs, "Parallel jobs")->capture_default_str()->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*route) return run_route(ra);
        if (*verify) {
            const auto original = parse_circuit(read_file(v_original));
            const auto routed = parse_routed(read_file(v_routed));
            const auto topo = parse_topology_spec(v_topology, v_shuttle_f, v_swap_f);
            const auto s0 = parse_placement_spec(topo, v_placement, original.n_qubits);
            const auto report = verify_routed_file(topo, s0, routed, original);
            if (v_json) {
                std::cout << report_json(report).dump(2) << '\n';
            } else if (report.ok()) {
                std::cout << "ok\n";
            } else {
                std::cout << report.describe();
            }
            return report.ok() ? 0 : 1;
        }
        if (*gen) {
            write_file(g_out, emit_circuit(gen_random_circuit(g_qubits, g_gates, g_pct, g_seed)));
            return 0;
        }
        if (*bench) {
            const auto spec = parse_bench_spec(read_file(b_spec));
            if (b_baseline) std::cerr << "router: serial-swap baseline (comparison stand-in)\n";
            const auto rows = run_bench(spec, {b_baseline, b_jobs});
            std::ostringstream csv;
            write_csv(csv, rows);
            write_file(b_out, csv.str());
            return 0;
        }
    } catch (const BenchFailure &e) {
        std::cerr << "error: " << e.what() << "\nfailing seed: " << e.seed() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
