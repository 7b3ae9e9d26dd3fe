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

#include "besnake/bench.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

#include "besnake/errors.hpp"
#include "besnake/metrics.hpp"
#include "besnake/verify.hpp"

namespace besnake {

Circuit gen_random_circuit(std::size_t n_qubits, std::size_t n_gates, double tqg_pct, std::uint64_t seed) {
    if (n_gates == 0) throw InvalidArgument("n_gates must be at least 1");
    if (!(tqg_pct >= 0.0 && tqg_pct <= 100.0)) throw InvalidArgument("tqg_pct must lie in [0, 100]");
    if (n_qubits == 0 || (n_qubits < 2 && tqg_pct > 0.0)) throw InvalidArgument("too few qubits for the requested gates");
    Rng rng(seed);
    Circuit c;
    c.n_qubits = n_qubits;
    c.cycles.reserve(n_gates);
    const double p = tqg_pct / 100.0;
    for (std::size_t i = 0; i < n_gates; ++i) {
        if (rng.uniform() < p) {
            const auto a = static_cast<std::uint32_t>(rng.below(n_qubits));
            auto b = static_cast<std::uint32_t>(rng.below(n_qubits - 1));
            if (b >= a) ++b;
            c.cycles.push_back(Cycle{{TwoQubitGate{QubitId(a), QubitId(b)}}});
        } else {
            c.cycles.push_back(Cycle{{ZGate{QubitId(static_cast<std::uint32_t>(rng.below(n_qubits)))}}});
        }
    }
    return c;
}

std::size_t auto_grid_side(std::size_t n_qubits) {
    return static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(n_qubits))));
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string_view unquote(std::string_view s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

template <class T>
T number(std::string_view key, std::string_view s) {
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw InvalidArgument("bench spec: bad number '" + std::string(s) + "' for " + std::string(key));
    }
    return v;
}

template <class T>
std::vector<T> number_list(std::string_view key, std::string_view s) {
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::vector<T> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty()) out.push_back(number<T>(key, item));
        s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
    }
    if (out.empty()) throw InvalidArgument("bench spec: empty list for " + std::string(key));
    return out;
}

bool boolean(std::string_view key, std::string_view s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw InvalidArgument("bench spec: " + std::string(key) + " must be true or false");
}

struct Job {
    std::size_t point;
    double tqg_pct;
    std::uint64_t seed;
};

}  // namespace

BenchSpec parse_bench_spec(std::string_view text) {
    BenchSpec spec;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = unquote(trim(line.substr(eq + 1)));
        try {
            if (key == "topology") {
                spec.topology = value;
            } else if (key == "placement") {
                if (value.starts_with("density:")) {
                    spec.placement = "density";
                    spec.densities = number_list<double>(key, value.substr(8));
                } else {
                    spec.placement = value;
                }
            } else if (key == "qubits") {
                spec.qubits = number_list<std::size_t>(key, value);
            } else if (key == "tqg_pct") {
                spec.tqg_pct = number_list<double>(key, value);
            } else if (key == "gates") {
                spec.n_gates = number<std::size_t>(key, value);
            } else if (key == "samples") {
                spec.samples = number<std::size_t>(key, value);
            } else if (key == "schedule") {
                if (value == "asap") {
                    spec.schedule = Schedule::kAsap;
                } else if (value == "serial") {
                    spec.schedule = Schedule::kSerial;
                } else {
                    throw InvalidArgument("schedule must be asap or serial");
                }
            } else if (key == "paths") {
                spec.config.paths = parse_path_mode(value);
            } else if (key == "swap_replace") {
                spec.config.swap_replace = boolean(key, value);
            } else if (key == "forced_swap") {
                spec.config.forced_swap_enabled = boolean(key, value);
            } else if (key == "shuttle_fidelity") {
                spec.shuttle_fidelity = number<double>(key, value);
            } else if (key == "swap_fidelity") {
                spec.swap_fidelity = number<double>(key, value);
            } else if (key == "seed") {
                spec.seed = number<std::uint64_t>(key, value);
            } else {
                throw InvalidArgument("unknown key '" + std::string(key) + "'");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (spec.samples == 0) throw InvalidArgument("bench spec: samples must be at least 1");
    if (spec.n_gates == 0) throw InvalidArgument("bench spec: gates must be at least 1");
    for (auto p : spec.tqg_pct) {
        if (!(p > 0.0 && p < 100.0)) throw InvalidArgument("bench spec: tqg_pct values must lie in (0, 100)");
    }
    if (spec.placement == "checkerboard" && spec.qubits.empty()) {
        throw InvalidArgument("bench spec: checkerboard placement needs a qubits list");
    }
    if (spec.placement != "checkerboard" && spec.placement != "density") {
        throw InvalidArgument("bench spec: unknown placement '" + spec.placement + "'");
    }
    return spec;
}

namespace {

Topology resolve_topology(const BenchSpec &spec, std::size_t n_qubits) {
    std::string topo = spec.topology;
    if (topo.ends_with(":auto")) {
        const auto side = std::to_string(auto_grid_side(n_qubits));
        topo = topo.substr(0, topo.size() - 4) + side + "x" + side;
    }
    return parse_topology_spec(topo, spec.shuttle_fidelity, spec.swap_fidelity);
}

BenchRow run_job(const BenchSpec &spec, const Job &job, bool baseline) {
    const bool density = spec.placement == "density";
    if (density && spec.topology.ends_with(":auto")) {
        throw InvalidArgument("density placement needs an explicit topology size");
    }
    const auto n_req = density ? 0 : spec.qubits[job.point];
    const auto topo = resolve_topology(spec, n_req);
    const auto s0 = density ? density_init(topo, spec.densities[job.point]) : checkerboard_init(topo, n_req);
    const auto n = s0.num_qubits();

    auto circuit = gen_random_circuit(n, spec.n_gates, job.tqg_pct, job.seed);
    if (spec.schedule == Schedule::kAsap) circuit = schedule_asap(circuit);

    auto cfg = spec.config;
    cfg.rng_seed = derive_seed(job.seed, 1);
    const auto start = std::chrono::steady_clock::now();
    const auto report = baseline ? baseline_serial_swap_route(topo, s0, circuit, cfg.rng_seed)
                                 : route_circuit(topo, s0, circuit, cfg);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    const auto check = verify_trace(topo, s0, report.routed, circuit);
    if (!check.ok()) {
        throw BenchFailure(job.seed, "verification failed for seed " + std::to_string(job.seed) + ":\n" +
                                         check.describe());
    }
    BenchRow row;
    row.seed = job.seed;
    row.qubits = n;
    row.tqg_pct = job.tqg_pct;
    row.gate_overhead_pct = gate_overhead(circuit, report.routed);
    row.depth_overhead_pct = depth_overhead(circuit, report.routed);
    row.routing_time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    row.added_shuttles = report.added_shuttles;
    row.added_swaps = report.added_swaps;
    row.cycle_splits = report.cycle_splits;
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec &spec, const BenchOptions &opts) {
    const auto points = spec.placement == "density" ? spec.densities.size() : spec.qubits.size();
    std::vector<Job> jobs;
    for (std::size_t p = 0; p < points; ++p) {
        for (auto pct : spec.tqg_pct) {
            for (std::size_t k = 0; k < spec.samples; ++k) {
                jobs.push_back({p, pct, derive_seed(spec.seed, jobs.size())});
            }
        }
    }

    std::vector<BenchRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::size_t error_index = SIZE_MAX;
    std::mutex error_mutex;
    auto worker = [&] {
        for (auto i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            try {
                rows[i] = run_job(spec, jobs[i], opts.baseline);
            } catch (...) {
                // Report the earliest failing job so the error is deterministic.
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };
    const auto n_threads = std::max<std::size_t>(1, std::min(opts.jobs, jobs.size()));
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (error) std::rethrow_exception(error);
    return rows;
}

void write_csv(std::ostream &os, const std::vector<BenchRow> &rows) {
    os << kCsvHeader << '\n';
    const auto flags = os.flags();
    const auto precision = os.precision();
    for (const auto &r : rows) {
        os << r.seed << ',' << r.qubits << ',' << std::defaultfloat << std::setprecision(6) << r.tqg_pct << ','
           << std::fixed << std::setprecision(4) << r.gate_overhead_pct << ',' << r.depth_overhead_pct << ','
           << std::setprecision(3) << r.routing_time_ms << ',' << r.added_shuttles << ',' << r.added_swaps << ','
           << r.cycle_splits << '\n';
    }
    os.flags(flags);
    os.precision(precision);
}

}  // namespace besnake
