// Copyright 2026 The qdens authors.
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

#include "qdens/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qdens/circuit.hpp"
#include "qdens/instances.hpp"
#include "qdens/qubo.hpp"
#include "qdens/rng.hpp"

namespace qdens {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

constexpr Problem kAllProblems[] = {Problem::MaxCut, Problem::NumPart, Problem::Tsp,
                                    Problem::Max3Sat};

// density keys are salted into seeds at parts-per-million resolution
std::uint64_t density_key(double d) {
    return static_cast<std::uint64_t>(std::llround(d * 1e6));
}
}  // namespace

const char* problem_name(Problem p) {
    switch (p) {
        case Problem::MaxCut: return "maxcut";
        case Problem::NumPart: return "numpart";
        case Problem::Tsp: return "tsp";
        case Problem::Max3Sat: return "max3sat";
    }
    fail("problem_name: bad enum value");
}

Problem problem_from_name(const std::string& name) {
    for (const Problem p : kAllProblems)
        if (name == problem_name(p)) return p;
    fail("unknown problem: " + name);
}

SweepConfig default_sweep_config() {
    SweepConfig cfg;
    cfg.problems = {Problem::MaxCut, Problem::NumPart, Problem::Tsp, Problem::Max3Sat};
    for (const Problem p : cfg.problems) cfg.sizes[p] = {16};
    cfg.densities = {0.02, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0};
    return cfg;
}

namespace {

// Max3Sat sizes count variables plus one ancilla per clause; recover the
// variable count from the total qubit budget.
int max3sat_vars_for(int size, double alpha) {
    for (int v = 3; v <= size; ++v)
        if (v + static_cast<int>(std::llround(alpha * v)) == size) return v;
    std::ostringstream msg;
    msg << "max3sat: no variable count yields " << size << " qubits at ratio " << alpha;
    fail(msg.str());
}

ProblemInstance make_instance(Problem p, int size, const SweepExtra& extra,
                              std::uint64_t seed) {
    switch (p) {
        case Problem::MaxCut:
            return gen_maxcut(size, extra.maxcut_d, seed);
        case Problem::NumPart: {
            const std::int64_t mv =
                extra.numpart_max_value > 0 ? extra.numpart_max_value : 2 * size;
            return gen_numpart(size, mv, seed);
        }
        case Problem::Tsp: {
            const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(size))));
            if (n * n != size) fail("tsp: sweep sizes must be perfect squares of city counts");
            return gen_tsp(n, seed);
        }
        case Problem::Max3Sat:
            return gen_max3sat(max3sat_vars_for(size, extra.max3sat_alpha),
                               extra.max3sat_alpha, seed);
    }
    fail("make_instance: bad enum value");
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    if (cfg.runs_per_point < 1) fail("run_sweep: runs_per_point must be >= 1");
    if (cfg.trials < 1) fail("run_sweep: trials must be >= 1");
    const HardwareGraph base =
        cfg.backend ? heavy_hex_extended(*cfg.backend) : heavy_hex_base();
    const double base_density = connectivity_density(base);
    for (const double d : cfg.densities) {
        if (d > 1.0) fail("run_sweep: density above 1");
        if (d < base_density - 1e-12)
            fail("run_sweep: density below the backend's base connectivity density");
    }

    // Shared read-only caches built up front so the grid loop is pure.
    std::map<std::pair<Problem, int>, LogicalCircuit> circuits;
    std::map<std::tuple<Problem, int, std::uint64_t>, HardwareGraph> graphs;
    std::map<std::tuple<Problem, int, std::uint64_t>, double> achieved;
    struct Point {
        Problem prob;
        int size;
        double target;
        int run;
    };
    std::vector<Point> points;
    for (const Problem p : cfg.problems) {
        const auto it = cfg.sizes.find(p);
        if (it == cfg.sizes.end())
            fail(std::string("run_sweep: no sizes for ") + problem_name(p));
        for (const int size : it->second) {
            if (size < 2 || size > base.n_qubits)
                fail("run_sweep: size out of range for the chosen backend");
            if (!circuits.count({p, size})) {
                const auto inst = make_instance(
                    p, size, cfg.extra,
                    child_seed(cfg.base_seed, "instance", problem_name(p),
                               static_cast<std::uint64_t>(size), 0, 0));
                if (encoded_qubit_count(inst) != size)
                    throw std::logic_error("run_sweep: encoding size mismatch");
                circuits[{p, size}] = build_qaoa(encode(inst));
            }
            for (const double d : cfg.densities) {
                const auto key = std::make_tuple(p, size, density_key(d));
                if (!graphs.count(key)) {
                    const auto hw = augment_to_density(
                        base, d,
                        child_seed(cfg.base_seed, "hardware", problem_name(p),
                                   static_cast<std::uint64_t>(size), density_key(d), 0));
                    achieved[key] = connectivity_density(hw);
                    graphs[key] = hw;
                }
                for (int run = 0; run < cfg.runs_per_point; ++run)
                    points.push_back({p, size, d, run});
            }
        }
    }

    std::vector<SweepRecord> slots(points.size());
    std::vector<char> ok(points.size(), 0);
    const auto work = [&](std::size_t i) {
        const Point& pt = points[i];
        const auto key = std::make_tuple(pt.prob, pt.size, density_key(pt.target));
        const std::uint64_t run_seed =
            child_seed(cfg.base_seed, "route", problem_name(pt.prob),
                       static_cast<std::uint64_t>(pt.size), density_key(pt.target),
                       static_cast<std::uint64_t>(pt.run));
        try {
            TranspileOptions opt;
            opt.opt_level = cfg.opt_level;
            opt.mode = cfg.mode;
            opt.trials = cfg.trials;
            opt.seed = run_seed;
            const auto t0 = std::chrono::steady_clock::now();
            const TranspiledCircuit t =
                transpile(circuits.at({pt.prob, pt.size}), graphs.at(key), opt);
            const auto t1 = std::chrono::steady_clock::now();
            SweepRecord& r = slots[i];
            r.problem = pt.prob;
            r.n_qubits = pt.size;
            r.density = achieved.at(key);
            r.run_index = pt.run;
            r.depth = t.metrics.depth;
            r.swap_count = t.metrics.swap_count;
            r.cx_count = t.metrics.cx_count;
            r.total_gates = t.metrics.total_gates;
            r.wall_ms =
                cfg.measure_time
                    ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                    : 0;
            r.seed_used = run_seed;
            ok[i] = 1;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "sweep point failed: problem=%s size=%d density=%g run=%d: %s\n",
                         problem_name(pt.prob), pt.size, pt.target, pt.run, e.what());
        }
    };

#ifdef _OPENMP
    if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i)
            work(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) work(i);
    }
#else
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
#endif

    std::vector<SweepRecord> records;
    records.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        if (ok[i]) records.push_back(slots[i]);
    std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::make_tuple(static_cast<int>(a.problem), a.n_qubits, a.density, a.run_index) <
               std::make_tuple(static_cast<int>(b.problem), b.n_qubits, b.density, b.run_index);
    });
    return records;
}

std::vector<AggregateRow> aggregate(const std::vector<SweepRecord>& records) {
    if (records.empty()) fail("aggregate: no records");
    std::vector<SweepRecord> sorted = records;
    std::sort(sorted.begin(), sorted.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::make_tuple(static_cast<int>(a.problem), a.n_qubits, a.density, a.run_index) <
               std::make_tuple(static_cast<int>(b.problem), b.n_qubits, b.density, b.run_index);
    });

    std::vector<AggregateRow> rows;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].problem == sorted[i].problem &&
               sorted[j].n_qubits == sorted[i].n_qubits && sorted[j].density == sorted[i].density)
            ++j;
        AggregateRow row;
        row.problem = sorted[i].problem;
        row.n_qubits = sorted[i].n_qubits;
        row.density = sorted[i].density;
        row.n_records = static_cast<int>(j - i);
        double dsum = 0, ssum = 0;
        row.depth_min = row.depth_max = sorted[i].depth;
        row.swap_min = row.swap_max = sorted[i].swap_count;
        for (std::size_t k = i; k < j; ++k) {
            dsum += sorted[k].depth;
            ssum += sorted[k].swap_count;
            row.depth_min = std::min(row.depth_min, static_cast<double>(sorted[k].depth));
            row.depth_max = std::max(row.depth_max, static_cast<double>(sorted[k].depth));
            row.swap_min = std::min(row.swap_min, static_cast<double>(sorted[k].swap_count));
            row.swap_max = std::max(row.swap_max, static_cast<double>(sorted[k].swap_count));
        }
        row.depth_mean = dsum / row.n_records;
        row.swap_mean = ssum / row.n_records;
        double dvar = 0, svar = 0;
        for (std::size_t k = i; k < j; ++k) {
            dvar += (sorted[k].depth - row.depth_mean) * (sorted[k].depth - row.depth_mean);
            svar += (sorted[k].swap_count - row.swap_mean) * (sorted[k].swap_count - row.swap_mean);
        }
        row.depth_stddev = std::sqrt(dvar / row.n_records);
        row.swap_stddev = std::sqrt(svar / row.n_records);
        rows.push_back(row);
        i = j;
    }
    return rows;
}

namespace {
constexpr const char* kCsvHeader =
    "problem,n_qubits,density,run_index,depth,swap_count,cx_count,total_gates,wall_ms,seed_used";
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    char dens[32];
    for (const SweepRecord& r : records) {
        std::snprintf(dens, sizeof dens, "%.6f", r.density);
        out << problem_name(r.problem) << ',' << r.n_qubits << ',' << dens << ','
            << r.run_index << ',' << r.depth << ',' << r.swap_count << ',' << r.cx_count << ','
            << r.total_gates << ',' << r.wall_ms << ',' << r.seed_used << '\n';
    }
    return out.str();
}

std::vector<SweepRecord> records_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("records_from_csv: bad or missing header");
    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 10)
            throw std::runtime_error("records_from_csv: wrong field count: " + line);
        SweepRecord r;
        r.problem = problem_from_name(fields[0]);
        r.n_qubits = std::stoi(fields[1]);
        r.density = std::stod(fields[2]);
        r.run_index = std::stoi(fields[3]);
        r.depth = std::stoi(fields[4]);
        r.swap_count = std::stoi(fields[5]);
        r.cx_count = std::stoi(fields[6]);
        r.total_gates = std::stoi(fields[7]);
        r.wall_ms = std::stoll(fields[8]);
        r.seed_used = std::stoull(fields[9]);
        records.push_back(r);
    }
    return records;
}

std::vector<SweepRecord> read_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open records file: " + path);
    return records_from_csv(in);
}

void write_records_file(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write records file: " + path);
    out << records_to_csv(records);
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        part = trim(part);
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

long long to_ll(const std::string& s, const std::string& key) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        fail("config: bad integer for " + key + ": " + s);
    }
    if (used != s.size()) fail("config: bad integer for " + key + ": " + s);
    return v;
}

double to_double(const std::string& s, const std::string& key) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        fail("config: bad number for " + key + ": " + s);
    }
    if (used != s.size()) fail("config: bad number for " + key + ": " + s);
    return v;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in, const SweepConfig& defaults) {
    SweepConfig cfg = defaults;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            fail("config line " + std::to_string(lineno) + ": empty key or value");

        if (key == "problems") {
            cfg.problems.clear();
            for (const auto& name : split_list(value))
                cfg.problems.push_back(problem_from_name(name));
        } else if (key == "sizes") {
            std::vector<int> sizes;
            for (const auto& s : split_list(value))
                sizes.push_back(static_cast<int>(to_ll(s, key)));
            for (const Problem p : kAllProblems) cfg.sizes[p] = sizes;
        } else if (key.rfind("sizes.", 0) == 0) {
            const Problem p = problem_from_name(key.substr(6));
            std::vector<int> sizes;
            for (const auto& s : split_list(value))
                sizes.push_back(static_cast<int>(to_ll(s, key)));
            cfg.sizes[p] = sizes;
        } else if (key == "densities") {
            cfg.densities.clear();
            for (const auto& s : split_list(value)) cfg.densities.push_back(to_double(s, key));
        } else if (key == "runs") {
            cfg.runs_per_point = static_cast<int>(to_ll(value, key));
        } else if (key == "opt_level") {
            cfg.opt_level = static_cast<int>(to_ll(value, key));
        } else if (key == "seed") {
            cfg.base_seed = static_cast<std::uint64_t>(to_ll(value, key));
        } else if (key == "trials") {
            cfg.trials = static_cast<int>(to_ll(value, key));
        } else if (key == "backend") {
            if (value == "base127") {
                cfg.backend.reset();
            } else {
                const auto x = value.find('x');
                if (x == std::string::npos)
                    fail("config: backend must be base127 or ROWSxCOLS, got " + value);
                cfg.backend = HeavyHexSpec{
                    static_cast<int>(to_ll(value.substr(0, x), key)),
                    static_cast<int>(to_ll(value.substr(x + 1), key))};
            }
        } else if (key == "mode") {
            if (value == "depth")
                cfg.mode = CountingMode::Depth;
            else if (value == "swap")
                cfg.mode = CountingMode::Swap;
            else
                fail("config: mode must be depth or swap, got " + value);
        } else if (key == "maxcut_d") {
            cfg.extra.maxcut_d = to_double(value, key);
        } else if (key == "tsp_d") {
            cfg.extra.tsp_d = to_double(value, key);
        } else if (key == "max3sat_alpha") {
            cfg.extra.max3sat_alpha = to_double(value, key);
        } else if (key == "numpart_max_value") {
            cfg.extra.numpart_max_value = to_ll(value, key);
        } else {
            fail("config line " + std::to_string(lineno) + ": unknown key " + key);
        }
    }
    return cfg;
}

SweepConfig read_sweep_config_file(const std::string& path, const SweepConfig& defaults) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_sweep_config(in, defaults);
}

}  // namespace qdens
