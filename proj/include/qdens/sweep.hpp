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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdens/topology.hpp"
#include "qdens/transpiler.hpp"

namespace qdens {

enum class Problem { MaxCut, NumPart, Tsp, Max3Sat };

const char* problem_name(Problem p);
Problem problem_from_name(const std::string& name);

/// Per-problem generator knobs used when the sweep synthesizes instances.
struct SweepExtra {
    double maxcut_d = 0.7;        // edge density of generated MaxCut graphs
    double tsp_d = 0.7;           // accepted for config compatibility; unused
    double max3sat_alpha = 4.2;   // clause-to-variable ratio
    std::int64_t numpart_max_value = 0;  // 0 = default 2n
};

/// Grid specification. Sizes are qubit counts; a problem present in
/// `problems` uses sizes[problem]. Densities apply to the chosen backend
/// (base 127-qubit map unless `backend` is set) and may not fall below its
/// base connectivity density.
struct SweepConfig {
    std::vector<Problem> problems;
    std::map<Problem, std::vector<int>> sizes;
    std::vector<double> densities;
    int runs_per_point = 20;
    int opt_level = 2;
    std::uint64_t base_seed = 1;
    std::optional<HeavyHexSpec> backend;  // nullopt = 127-qubit base
    CountingMode mode = CountingMode::Depth;
    SweepExtra extra;
    int trials = 20;
    bool parallel = true;     // grid points may run on OpenMP threads
    bool measure_time = false;  // when false, wall_ms stays 0 so outputs replay byte-identically
};

/// Built-in demonstration grid: all four problems at 16 qubits over the
/// default density ladder, 20 runs per point.
SweepConfig default_sweep_config();

/// One grid point result. Records sort by (problem, n_qubits, density,
/// run_index) regardless of execution order or thread count.
struct SweepRecord {
    Problem problem;
    int n_qubits = 0;
    double density = 0.0;  // achieved density after edge-count rounding
    int run_index = 0;
    int depth = 0;
    int swap_count = 0;
    int cx_count = 0;
    int total_gates = 0;
    std::int64_t wall_ms = 0;
    std::uint64_t seed_used = 0;
};

/// Runs the whole grid. One instance is generated per (problem, size) and
/// reused across densities and runs; the augmented hardware is fixed per
/// (problem, size, density) and the router seed varies per run. A failing
/// grid point is reported on stderr and skipped; every other point still
/// runs. Rerunning with the same config yields identical records.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

struct AggregateRow {
    Problem problem;
    int n_qubits = 0;
    double density = 0.0;
    int n_records = 0;
    double depth_mean = 0, depth_min = 0, depth_max = 0, depth_stddev = 0;
    double swap_mean = 0, swap_min = 0, swap_max = 0, swap_stddev = 0;
};

/// Exact mean/min/max and population standard deviation per
/// (problem, n_qubits, density) group. Throws on empty input.
std::vector<AggregateRow> aggregate(const std::vector<SweepRecord>& records);

// --- CSV ---------------------------------------------------------------------
// Header: problem,n_qubits,density,run_index,depth,swap_count,cx_count,
//         total_gates,wall_ms,seed_used

std::string records_to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> records_from_csv(std::istream& in);
std::vector<SweepRecord> read_records_file(const std::string& path);
void write_records_file(const std::vector<SweepRecord>& records, const std::string& path);

// --- config files --------------------------------------------------------------
// Flat "key = value" lines; '#' starts a comment. Unknown keys are errors.
// Keys: problems, sizes, sizes.<problem>, densities, runs, opt_level, seed,
// backend, mode, trials, maxcut_d, tsp_d, max3sat_alpha, numpart_max_value.

SweepConfig parse_sweep_config(std::istream& in, const SweepConfig& defaults);
SweepConfig read_sweep_config_file(const std::string& path, const SweepConfig& defaults);

}  // namespace qdens
