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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "qdens/sweep.hpp"

using namespace qdens;

namespace {

SweepConfig mini_config() {
    SweepConfig cfg;
    cfg.problems = {Problem::MaxCut, Problem::NumPart};
    cfg.sizes[Problem::MaxCut] = {9, 12};
    cfg.sizes[Problem::NumPart] = {9, 12};
    cfg.densities = {0.05, 0.3, 1.0};
    cfg.runs_per_point = 2;
    cfg.trials = 4;
    cfg.base_seed = 5;
    return cfg;
}

}  // namespace

TEST_CASE("problem names round trip") {
    const Problem all[] = {Problem::MaxCut, Problem::NumPart, Problem::Tsp,
                           Problem::Max3Sat};
    for (const auto p : all) CHECK(problem_from_name(problem_name(p)) == p);
    CHECK(std::string(problem_name(Problem::MaxCut)) == "maxcut");
    CHECK_THROWS(problem_from_name("sudoku"));
}

TEST_CASE("sweep replay is exact and thread-count independent") {
    auto cfg = mini_config();
    const auto first = run_sweep(cfg);
    const auto second = run_sweep(cfg);
    CHECK(records_to_csv(first) == records_to_csv(second));
    cfg.parallel = false;
    const auto serial = run_sweep(cfg);
    CHECK(records_to_csv(first) == records_to_csv(serial));
    // 2 problems x 2 sizes x 3 densities x 2 runs
    CHECK(first.size() == 24);
}

TEST_CASE("records come out sorted") {
    const auto recs = run_sweep(mini_config());
    for (std::size_t i = 1; i < recs.size(); ++i) {
        const auto key = [](const SweepRecord& r) {
            return std::make_tuple(static_cast<int>(r.problem), r.n_qubits, r.density,
                                   r.run_index);
        };
        CHECK(key(recs[i - 1]) < key(recs[i]));
    }
}

TEST_CASE("complete hardware needs no swaps") {
    SweepConfig cfg;
    cfg.problems = {Problem::MaxCut};
    cfg.sizes[Problem::MaxCut] = {10};
    cfg.densities = {1.0};
    cfg.runs_per_point = 3;
    cfg.trials = 4;
    cfg.mode = CountingMode::Swap;
    for (const auto& r : run_sweep(cfg)) {
        CHECK(r.swap_count == 0);
        CHECK(r.density == 1.0);
        CHECK(r.wall_ms == 0);  // timing off by default, outputs replay exactly
    }
}

TEST_CASE("aggregate means and spread") {
    std::vector<SweepRecord> recs(2);
    recs[0].problem = recs[1].problem = Problem::Tsp;
    recs[0].n_qubits = recs[1].n_qubits = 9;
    recs[0].density = recs[1].density = 0.5;
    recs[0].run_index = 0;
    recs[1].run_index = 1;
    recs[0].depth = 10;
    recs[1].depth = 20;
    recs[0].swap_count = 4;
    recs[1].swap_count = 4;
    const auto rows = aggregate(recs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].n_records == 2);
    CHECK(rows[0].depth_mean == 15.0);
    CHECK(rows[0].depth_min == 10.0);
    CHECK(rows[0].depth_max == 20.0);
    CHECK(rows[0].depth_stddev == 5.0);  // population stddev
    CHECK(rows[0].swap_stddev == 0.0);
    CHECK_THROWS(aggregate({}));

    std::vector<SweepRecord> one(1);
    one[0].depth = 7;
    const auto single = aggregate(one);
    CHECK(single[0].depth_stddev == 0.0);
    CHECK(single[0].depth_mean == 7.0);
}

TEST_CASE("csv round trips byte-exactly") {
    const auto recs = run_sweep(mini_config());
    const auto csv = records_to_csv(recs);
    CHECK(csv.rfind("problem,n_qubits,density,run_index,depth,swap_count,"
                    "cx_count,total_gates,wall_ms,seed_used\n",
                    0) == 0);
    std::istringstream in(csv);
    const auto back = records_from_csv(in);
    CHECK(records_to_csv(back) == csv);
    std::istringstream bad_header("foo,bar\n");
    CHECK_THROWS(records_from_csv(bad_header));
    std::istringstream short_row(
        "problem,n_qubits,density,run_index,depth,swap_count,cx_count,total_gates,"
        "wall_ms,seed_used\nmaxcut,9,0.5\n");
    CHECK_THROWS(records_from_csv(short_row));
}

TEST_CASE("config text controls the grid") {
    const std::string text =
        "# demo grid\n"
        "problems = maxcut, tsp\n"
        "sizes = 16\n"
        "sizes.tsp = 9, 16\n"
        "densities = 0.05, 0.3\n"
        "runs = 5\n"
        "opt_level = 1\n"
        "seed = 77\n"
        "trials = 6\n"
        "mode = swap\n"
        "maxcut_d = 0.6\n"
        "max3sat_alpha = 3.0\n";
    std::istringstream in(text);
    const auto cfg = parse_sweep_config(in, SweepConfig{});
    REQUIRE(cfg.problems.size() == 2);
    CHECK(cfg.problems[0] == Problem::MaxCut);
    CHECK(cfg.problems[1] == Problem::Tsp);
    CHECK(cfg.sizes.at(Problem::MaxCut) == std::vector<int>{16});
    CHECK(cfg.sizes.at(Problem::Tsp) == std::vector<int>{9, 16});
    CHECK(cfg.densities == std::vector<double>{0.05, 0.3});
    CHECK(cfg.runs_per_point == 5);
    CHECK(cfg.opt_level == 1);
    CHECK(cfg.base_seed == 77);
    CHECK(cfg.trials == 6);
    CHECK(cfg.mode == CountingMode::Swap);
    CHECK(cfg.extra.maxcut_d == 0.6);
    CHECK(cfg.extra.max3sat_alpha == 3.0);
    CHECK(!cfg.backend.has_value());

    std::istringstream b("backend = 8x6\n");
    const auto cb = parse_sweep_config(b, SweepConfig{});
    REQUIRE(cb.backend.has_value());
    CHECK(cb.backend->rows == 8);
    CHECK(cb.backend->cols == 6);
    std::istringstream b2("backend = base127\n");
    CHECK(!parse_sweep_config(b2, SweepConfig{}).backend.has_value());

    std::istringstream unknown("frobnicate = 3\n");
    CHECK_THROWS_WITH_AS(parse_sweep_config(unknown, SweepConfig{}),
                         doctest::Contains("line 1"), std::invalid_argument);
    std::istringstream badmode("mode = sideways\n");
    CHECK_THROWS(parse_sweep_config(badmode, SweepConfig{}));
}

TEST_CASE("grid validation rejects impossible points") {
    SweepConfig cfg = mini_config();
    cfg.densities = {0.001};  // below the base map's density
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg = mini_config();
    cfg.sizes[Problem::MaxCut] = {500};  // larger than the base map
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg = mini_config();
    cfg.problems = {Problem::Tsp};
    cfg.sizes[Problem::Tsp] = {10};  // not a perfect square
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("clause-count size solving for 3sat grids") {
    SweepConfig cfg;
    cfg.problems = {Problem::Max3Sat};
    cfg.sizes[Problem::Max3Sat] = {18};
    cfg.densities = {1.0};
    cfg.runs_per_point = 1;
    cfg.trials = 2;
    cfg.extra.max3sat_alpha = 2.0;
    const auto recs = run_sweep(cfg);
    REQUIRE(recs.size() == 1);
    // 6 variables + round(2.0 * 6) clause ancillas = 18 qubits
    CHECK(recs[0].n_qubits == 18);
}
