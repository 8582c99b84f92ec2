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

#include <cmath>
#include <sstream>

#include "qdens/qubo.hpp"

using namespace qdens;

TEST_CASE("coefficient bookkeeping") {
    Qubo q(3);
    q.add_linear(0, 1.5);
    q.add_linear(0, -1.5);  // cancels to exact zero, entry dropped
    q.add_quadratic(2, 1, 0.25);
    CHECK(q.linear().empty());
    REQUIRE(q.quadratic().size() == 1);
    CHECK(q.quadratic().begin()->first == std::pair<int, int>(1, 2));
    CHECK_THROWS_AS(q.add_quadratic(1, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(q.add_linear(3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(qubo_energy(q, {1, 0}), std::invalid_argument);
}

TEST_CASE("triangle cut energies") {
    const MaxCutInstance k3{3, {{0, 1}, {0, 2}, {1, 2}}};
    const auto q = encode_maxcut(k3);
    CHECK(q.n_vars() == 3);
    CHECK(q.offset() == 0.0);
    CHECK(qubo_energy(q, {1, 1, 0}) == -2.0);  // cut of size 2
    CHECK(qubo_energy(q, {0, 0, 0}) == 0.0);
    CHECK(qubo_energy(q, {1, 0, 0}) == -2.0);
    // per-edge structure: +2 on the pair, -1 on each endpoint
    CHECK(q.quadratic().at({0, 1}) == 2.0);
    CHECK(q.linear().at(0) == -2.0);  // node 0 touches two edges
}

TEST_CASE("two equal values partition to zero") {
    const auto q = encode_numpart(NumPartInstance{{1, 1}});
    CHECK(q.n_vars() == 2);
    CHECK(q.offset() == 4.0);
    CHECK(q.linear().at(0) == -4.0);
    CHECK(q.linear().at(1) == -4.0);
    CHECK(q.quadratic().at({0, 1}) == 8.0);
    CHECK(qubo_energy(q, {1, 0}) == 0.0);  // balanced split
    CHECK(qubo_energy(q, {1, 1}) == 4.0);  // difference 2, squared
    CHECK(qubo_energy(q, {0, 0}) == 4.0);
}

TEST_CASE("identity tour pays the cyclic route cost") {
    TspInstance inst;
    inst.n_cities = 3;
    inst.dist = {{0, 4, 7}, {4, 0, 2}, {7, 2, 0}};
    const auto q = encode_tsp(inst);
    CHECK(q.n_vars() == 9);
    // city i in slot i: feasible, so penalties vanish and only the tour
    // cost d01 + d12 + d20 remains
    std::vector<int> x(9, 0);
    x[0 * 3 + 0] = x[1 * 3 + 1] = x[2 * 3 + 2] = 1;
    CHECK(qubo_energy(q, x) == doctest::Approx(4 + 2 + 7).epsilon(1e-12));
    // dropping one assignment violates two one-hot constraints
    x[2 * 3 + 2] = 0;
    const double a = 3 * 7 + 1;  // default penalty weight
    CHECK(qubo_energy(q, x) > a - 1);
    // explicit weight is honored
    const auto q2 = encode_tsp(inst, 1000.0);
    std::vector<int> empty(9, 0);
    CHECK(qubo_energy(q2, empty) == doctest::Approx(6 * 1000.0).epsilon(1e-12));
}

TEST_CASE("clause gadget counts unsatisfied clauses") {
    // single clause (x0 OR NOT x1 OR x2), ancilla is variable 3
    Max3SatInstance inst{3, {{Lit{0, false}, Lit{1, true}, Lit{2, false}}}};
    const auto q = encode_max3sat(inst);
    CHECK(q.n_vars() == 4);
    for (int bits = 0; bits < 8; ++bits) {
        const int x0 = bits & 1, x1 = (bits >> 1) & 1, x2 = (bits >> 2) & 1;
        const bool sat = x0 || !x1 || x2;
        double best = 1e300;
        for (int w = 0; w < 2; ++w)
            best = std::min(best, qubo_energy(q, {x0, x1, x2, w}));
        CHECK(best == doctest::Approx(sat ? 0.0 : 1.0).epsilon(1e-12));
    }
}

TEST_CASE("encoded minima agree with exhaustive problem optima") {
    const ProblemInstance insts[] = {
        ProblemInstance{gen_maxcut(7, 0.5, 3)},
        ProblemInstance{gen_numpart(6, 20, 3)},
        ProblemInstance{gen_tsp(3, 3)},
        ProblemInstance{gen_max3sat(4, 2.0, 3)},
    };
    for (const auto& inst : insts) {
        const auto q = encode(inst);
        const auto bf = brute_force_optimum(inst);
        const auto qmin = qubo_brute_force_min(q);
        const std::string tag = problem_tag(inst);
        double expect = 0.0;
        if (tag == "maxcut") expect = -bf.objective;
        else if (tag == "numpart") expect = bf.objective * bf.objective;
        else if (tag == "tsp") expect = bf.objective;
        else expect = static_cast<double>(std::get<Max3SatInstance>(inst).clauses.size()) -
                      bf.objective;
        CHECK(qmin.energy == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("serial and parallel enumeration agree bit for bit") {
    const auto q = encode(ProblemInstance{gen_maxcut(16, 0.4, 9)});
    const auto s = qubo_brute_force_min(q, Exec::Serial);
    const auto p = qubo_brute_force_min(q, Exec::Parallel);
    const auto a = qubo_brute_force_min(q, Exec::Auto);
    CHECK(s.energy == p.energy);
    CHECK(s.assignment == p.assignment);
    CHECK(s.energy == a.energy);
    CHECK(s.assignment == a.assignment);
}

TEST_CASE("ties resolve to the lowest assignment index") {
    Qubo q(2);  // constant objective: every assignment ties
    q.set_offset(5.0);
    const auto s = qubo_brute_force_min(q, Exec::Serial);
    const auto p = qubo_brute_force_min(q, Exec::Parallel);
    CHECK(s.energy == 5.0);
    CHECK(s.assignment == std::vector<int>{0, 0});
    CHECK(p.assignment == std::vector<int>{0, 0});
}

TEST_CASE("enumeration rejects oversized problems") {
    Qubo q(25);
    CHECK_THROWS_AS(qubo_brute_force_min(q), std::invalid_argument);
}

TEST_CASE("qubo text round trips bit-exactly") {
    auto q = encode(ProblemInstance{gen_tsp(3, 5)});
    q.add_linear(2, 0.1 + 0.2);  // value with no short decimal form
    std::istringstream in(write_qubo(q));
    const auto back = read_qubo(in);
    CHECK(back.n_vars() == q.n_vars());
    CHECK(back.offset() == q.offset());
    CHECK(back.linear() == q.linear());
    CHECK(back.quadratic() == q.quadratic());
    CHECK(write_qubo(back) == write_qubo(q));
}
