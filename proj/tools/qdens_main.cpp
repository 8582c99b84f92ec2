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

// Command line front end. Subcommands: gen, transpile, sweep, fit, report.
// Exit codes: 0 success, 1 runtime failure, 2 command line misuse.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdens/circuit.hpp"
#include "qdens/fit.hpp"
#include "qdens/instances.hpp"
#include "qdens/qubo.hpp"
#include "qdens/rng.hpp"
#include "qdens/sweep.hpp"
#include "qdens/topology.hpp"
#include "qdens/transpiler.hpp"

namespace {

using namespace qdens;

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

HardwareGraph backend_graph(const std::string& spec) {
    if (spec == "base127") return heavy_hex_base();
    const auto x = spec.find('x');
    if (x == std::string::npos)
        throw std::runtime_error("backend must be base127 or ROWSxCOLS, got " + spec);
    return heavy_hex_extended(
        {std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1))});
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
    std::string problem;
    int size = 0;
    std::uint64_t seed = 1;
    double density = 0.7;
    std::int64_t max_value = 0;  // 0 = 2 * size
    double alpha = 4.2;
    int layers = 1;
    std::string out, qubo_out, circuit_out;
};

int run_gen(const GenArgs& a) {
    ProblemInstance inst;
    if (a.problem == "maxcut")
        inst = gen_maxcut(a.size, a.density, a.seed);
    else if (a.problem == "numpart")
        inst = gen_numpart(a.size, a.max_value > 0 ? a.max_value : 2 * a.size, a.seed);
    else if (a.problem == "tsp")
        inst = gen_tsp(a.size, a.seed);
    else
        inst = gen_max3sat(a.size, a.alpha, a.seed);

    emit(a.out, write_instance(inst));
    if (!a.qubo_out.empty() || !a.circuit_out.empty()) {
        const Qubo q = encode(inst);
        if (!a.qubo_out.empty()) write_text_file(a.qubo_out, write_qubo(q));
        if (!a.circuit_out.empty())
            write_text_file(a.circuit_out, write_circuit(build_qaoa(q, a.layers)));
    }
    return 0;
}

// --- transpile -----------------------------------------------------------------

struct TranspileArgs {
    std::string circuit_path, coupling_path, backend;
    double density = 0.0;  // 0 = leave the graph as built
    std::uint64_t seed = 1;
    int opt_level = 2;
    std::string mode = "depth";
    int trials = 20;
    std::string out;
    bool verify = false;
};

int run_transpile(const TranspileArgs& a) {
    const LogicalCircuit circ = read_circuit_file(a.circuit_path);
    HardwareGraph hw =
        a.coupling_path.empty() ? backend_graph(a.backend) : read_coupling_file(a.coupling_path);
    if (a.density > 0.0)
        hw = augment_to_density(
            hw, a.density,
            child_seed(a.seed, "hardware", "cli", static_cast<std::uint64_t>(hw.n_qubits),
                       static_cast<std::uint64_t>(std::llround(a.density * 1e6)), 0));

    TranspileOptions opt;
    opt.opt_level = a.opt_level;
    opt.mode = a.mode == "swap" ? CountingMode::Swap : CountingMode::Depth;
    opt.trials = a.trials;
    opt.seed = a.seed;
    const TranspiledCircuit t = transpile(circ, hw, opt);

    std::fprintf(stderr, "depth=%d swap_count=%d cx_count=%d total_gates=%d trials_used=%d\n",
                 t.metrics.depth, t.metrics.swap_count, t.metrics.cx_count,
                 t.metrics.total_gates, t.metrics.trials_used);
    if (!respects_coupling(t, hw)) throw std::runtime_error("transpile: coupling violated");
    emit(a.out, write_transpiled(t));
    if (a.verify) {
        const bool ok = verify_equivalence(circ, t);
        std::fprintf(stderr, "equivalence=%s\n", ok ? "ok" : "FAILED");
        if (!ok) return 1;
    }
    return 0;
}

// --- sweep ---------------------------------------------------------------------

struct SweepArgs {
    std::string config_path;
    std::vector<std::string> overrides;  // "key = value" lines applied after the file
    bool measure_time = false;
    bool serial = false;
    std::string out;
};

int run_sweep_cmd(const SweepArgs& a) {
    SweepConfig cfg = default_sweep_config();
    if (!a.config_path.empty()) cfg = read_sweep_config_file(a.config_path, cfg);
    if (!a.overrides.empty()) {
        std::string joined;
        for (const auto& line : a.overrides) joined += line + '\n';
        std::istringstream in(joined);
        cfg = parse_sweep_config(in, cfg);
    }
    cfg.measure_time = a.measure_time;
    if (a.serial) cfg.parallel = false;
    const auto records = run_sweep(cfg);
    emit(a.out, records_to_csv(records));
    return 0;
}

// --- fit -----------------------------------------------------------------------

std::map<std::pair<std::string, int>, std::vector<FitPoint>> group_points(
    const std::vector<SweepRecord>& records, const std::string& metric) {
    std::map<std::pair<std::string, int>, std::vector<FitPoint>> groups;
    for (const SweepRecord& r : records) {
        const double v = metric == "swap" ? r.swap_count : r.depth;
        groups[{problem_name(r.problem), r.n_qubits}].push_back({r.density, v});
    }
    return groups;
}

struct FitArgs {
    std::string records_path;
    std::string metric = "depth";
    bool constrain = false;
    bool compare = false;
    std::string out;
};

int run_fit(const FitArgs& a) {
    const auto records = read_records_file(a.records_path);
    const auto groups = group_points(records, a.metric);
    if (groups.empty()) throw std::runtime_error("fit: no records");

    std::ostringstream out;
    if (a.compare) {
        out << "problem\tn_qubits\tmodel\trss\tr_squared\tok\n";
        for (const auto& [key, points] : groups)
            for (const auto& row : compare_models(points))
                out << key.first << '\t' << key.second << '\t' << row.model << '\t'
                    << format_double(row.rss) << '\t' << format_double(row.r_squared) << '\t'
                    << (row.ok ? "yes" : "no") << '\n';
    } else {
        out << "problem\tn_qubits\tR0\tRinf\tdelta\trss\tr_squared\titerations\tconverged\n";
        for (const auto& [key, points] : groups) {
            const NegExpFit f = fit_negexp(points, a.constrain);
            out << key.first << '\t' << key.second << '\t' << format_double(f.R0) << '\t'
                << format_double(f.Rinf) << '\t' << format_double(f.delta) << '\t'
                << format_double(f.rss) << '\t' << format_double(f.r_squared) << '\t'
                << f.iterations << '\t' << (f.converged ? "yes" : "no") << '\n';
        }
    }
    emit(a.out, out.str());
    return 0;
}

// --- report --------------------------------------------------------------------

struct ReportArgs {
    std::string records_path;
    std::string out_dir;
    int samples = 200;
};

int run_report(const ReportArgs& a) {
    const auto records = read_records_file(a.records_path);
    if (records.empty()) throw std::runtime_error("report: no records");
    if (a.samples < 2) throw std::runtime_error("report: need at least 2 curve samples");
    const auto rows = aggregate(records);
    const auto depth_groups = group_points(records, "depth");
    const auto swap_groups = group_points(records, "swap");

    // All fits run before any file is written, so a failure leaves no
    // partial report behind.
    std::map<std::string, std::string> files;
    std::ostringstream coef_depth, coef_swap;
    const char* coef_header =
        "problem\tn_qubits\tR0\tRinf\tdelta\trss\tr_squared\tconverged\n";
    coef_depth << coef_header;
    coef_swap << coef_header;

    for (const auto& [key, points] : depth_groups) {
        const auto& [prob, nq] = key;
        const NegExpFit nef = fit_negexp(points);
        const InverseFit inv = fit_inverse(points);
        coef_depth << prob << '\t' << nq << '\t' << format_double(nef.R0) << '\t'
                   << format_double(nef.Rinf) << '\t' << format_double(nef.delta) << '\t'
                   << format_double(nef.rss) << '\t' << format_double(nef.r_squared) << '\t'
                   << (nef.converged ? "yes" : "no") << '\n';

        double lo = points[0].density, hi = points[0].density;
        for (const FitPoint& p : points) {
            lo = std::min(lo, p.density);
            hi = std::max(hi, p.density);
        }
        auto& body = files["depth_curves_" + prob + ".tsv"];
        if (body.empty()) body = "n_qubits\tdensity\tnegexp\tinverse\n";
        for (int i = 0; i < a.samples; ++i) {
            const double rho = lo + (hi - lo) * i / (a.samples - 1);
            body += std::to_string(nq) + '\t' + format_double(rho) + '\t' +
                    format_double(negexp_value(nef, rho)) + '\t' +
                    format_double(inv.a + inv.b / rho) + '\n';
        }
    }
    for (const auto& [key, points] : swap_groups) {
        const auto& [prob, nq] = key;
        const NegExpFit nef = fit_negexp(points, /*constrain_rinf_zero=*/true);
        coef_swap << prob << '\t' << nq << '\t' << format_double(nef.R0) << '\t'
                  << format_double(nef.Rinf) << '\t' << format_double(nef.delta) << '\t'
                  << format_double(nef.rss) << '\t' << format_double(nef.r_squared) << '\t'
                  << (nef.converged ? "yes" : "no") << '\n';
    }
    for (const AggregateRow& r : rows) {
        const std::string prob = problem_name(r.problem);
        auto& dp = files["depth_points_" + prob + ".tsv"];
        if (dp.empty()) dp = "n_qubits\tdensity\tn_records\tmean\tmin\tmax\tstddev\n";
        dp += std::to_string(r.n_qubits) + '\t' + format_double(r.density) + '\t' +
              std::to_string(r.n_records) + '\t' + format_double(r.depth_mean) + '\t' +
              format_double(r.depth_min) + '\t' + format_double(r.depth_max) + '\t' +
              format_double(r.depth_stddev) + '\n';
        auto& sp = files["swap_points_" + prob + ".tsv"];
        if (sp.empty()) sp = "n_qubits\tdensity\tn_records\tmean\tmin\tmax\tstddev\n";
        sp += std::to_string(r.n_qubits) + '\t' + format_double(r.density) + '\t' +
              std::to_string(r.n_records) + '\t' + format_double(r.swap_mean) + '\t' +
              format_double(r.swap_min) + '\t' + format_double(r.swap_max) + '\t' +
              format_double(r.swap_stddev) + '\n';
    }
    files["coefficients_depth.tsv"] = coef_depth.str();
    files["coefficients_swap.tsv"] = coef_swap.str();

    std::filesystem::create_directories(a.out_dir);
    for (const auto& [name, content] : files)
        write_text_file((std::filesystem::path(a.out_dir) / name).string(), content);
    std::fprintf(stderr, "wrote %zu files to %s\n", files.size(), a.out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QAOA circuit cost versus hardware connectivity density"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a problem instance");
    gen_cmd->add_option("--problem", gen.problem, "maxcut | numpart | tsp | max3sat")
        ->required()
        ->check(CLI::IsMember({"maxcut", "numpart", "tsp", "max3sat"}));
    gen_cmd->add_option("--size", gen.size, "nodes / values / cities / variables")->required();
    gen_cmd->add_option("--seed", gen.seed, "generator seed (default 1)");
    gen_cmd->add_option("--density", gen.density, "maxcut edge density (default 0.7)");
    gen_cmd->add_option("--max-value", gen.max_value, "numpart value cap (default 2*size)");
    gen_cmd->add_option("--alpha", gen.alpha, "max3sat clause ratio (default 4.2)");
    gen_cmd->add_option("--layers", gen.layers, "circuit layers for --circuit (default 1)");
    gen_cmd->add_option("--out", gen.out, "instance file (default stdout)");
    gen_cmd->add_option("--qubo", gen.qubo_out, "also write the encoded objective here");
    gen_cmd->add_option("--circuit", gen.circuit_out, "also write the synthesized circuit here");

    TranspileArgs tsp;
    auto* tsp_cmd = app.add_subcommand("transpile", "Map a circuit onto a coupling graph");
    tsp_cmd->add_option("--circuit", tsp.circuit_path, "logical circuit file")->required();
    tsp_cmd->add_option("--coupling", tsp.coupling_path, "coupling list file");
    tsp_cmd->add_option("--backend", tsp.backend, "base127 or ROWSxCOLS (e.g. 8x6)");
    tsp_cmd->add_option("--density", tsp.density, "augment the graph to this density first");
    tsp_cmd->add_option("--seed", tsp.seed, "layout/routing seed (default 1)");
    tsp_cmd->add_option("--opt-level", tsp.opt_level, "0, 1 or 2 (default 2)");
    tsp_cmd->add_option("--mode", tsp.mode, "depth | swap (default depth)")
        ->check(CLI::IsMember({"depth", "swap"}));
    tsp_cmd->add_option("--trials", tsp.trials, "routing attempts (default 20)");
    tsp_cmd->add_option("--out", tsp.out, "transpiled circuit file (default stdout)");
    tsp_cmd->add_flag("--verify", tsp.verify, "check unitary equivalence (<= 10 qubits)");

    SweepArgs swp;
    auto* swp_cmd = app.add_subcommand("sweep", "Run a density grid and emit CSV records");
    swp_cmd->add_option("--config", swp.config_path, "key = value config file");
    std::string o_problems, o_sizes, o_densities, o_backend, o_mode;
    int o_runs = -1, o_opt = -1, o_trials = -1;
    std::int64_t o_seed = -1;
    swp_cmd->add_option("--problems", o_problems, "comma list, e.g. maxcut,tsp");
    swp_cmd->add_option("--sizes", o_sizes, "comma list of qubit counts (all problems)");
    swp_cmd->add_option("--densities", o_densities, "comma list of target densities");
    swp_cmd->add_option("--runs", o_runs, "runs per grid point");
    swp_cmd->add_option("--seed", o_seed, "base seed");
    swp_cmd->add_option("--opt-level", o_opt, "0, 1 or 2");
    swp_cmd->add_option("--trials", o_trials, "routing attempts per run");
    swp_cmd->add_option("--backend", o_backend, "base127 or ROWSxCOLS");
    swp_cmd->add_option("--mode", o_mode, "depth | swap")
        ->check(CLI::IsMember({"depth", "swap"}));
    swp_cmd->add_flag("--measure-time", swp.measure_time,
                      "fill wall_ms (off by default so reruns are byte-identical)");
    swp_cmd->add_flag("--serial", swp.serial, "disable the parallel grid loop");
    swp_cmd->add_option("--out", swp.out, "CSV file (default stdout)");

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit scaling models to sweep records");
    fit_cmd->add_option("--records", fit.records_path, "sweep CSV file")->required();
    fit_cmd->add_option("--metric", fit.metric, "depth | swap (default depth)")
        ->check(CLI::IsMember({"depth", "swap"}));
    fit_cmd->add_flag("--constrain-rinf-zero", fit.constrain, "pin the floor at 0");
    fit_cmd->add_flag("--compare", fit.compare, "rank all model families instead");
    fit_cmd->add_option("--out", fit.out, "TSV file (default stdout)");

    ReportArgs rep;
    auto* rep_cmd = app.add_subcommand("report", "Emit per-problem tables from sweep records");
    rep_cmd->add_option("--records", rep.records_path, "sweep CSV file")->required();
    rep_cmd->add_option("--out-dir", rep.out_dir, "output directory")->required();
    rep_cmd->add_option("--samples", rep.samples, "curve samples per fit (default 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(gen_cmd)) return run_gen(gen);
        if (app.got_subcommand(tsp_cmd)) {
            if (tsp.coupling_path.empty() == tsp.backend.empty()) {
                std::fprintf(stderr, "transpile: give exactly one of --coupling / --backend\n");
                return 2;
            }
            return run_transpile(tsp);
        }
        if (app.got_subcommand(swp_cmd)) {
            if (!o_problems.empty()) swp.overrides.push_back("problems = " + o_problems);
            if (!o_sizes.empty()) swp.overrides.push_back("sizes = " + o_sizes);
            if (!o_densities.empty()) swp.overrides.push_back("densities = " + o_densities);
            if (o_runs >= 0) swp.overrides.push_back("runs = " + std::to_string(o_runs));
            if (o_seed >= 0) swp.overrides.push_back("seed = " + std::to_string(o_seed));
            if (o_opt >= 0) swp.overrides.push_back("opt_level = " + std::to_string(o_opt));
            if (o_trials >= 0) swp.overrides.push_back("trials = " + std::to_string(o_trials));
            if (!o_backend.empty()) swp.overrides.push_back("backend = " + o_backend);
            if (!o_mode.empty()) swp.overrides.push_back("mode = " + o_mode);
            return run_sweep_cmd(swp);
        }
        if (app.got_subcommand(fit_cmd)) return run_fit(fit);
        if (app.got_subcommand(rep_cmd)) return run_report(rep);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
