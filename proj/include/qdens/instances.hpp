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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qdens {

/// Undirected graph whose maximum cut is sought. Edges are canonical:
/// u < v, sorted ascending, no duplicates.
struct MaxCutInstance {
    int n_nodes = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Multiset of positive integers to split into two sums of minimal
/// absolute difference.
struct NumPartInstance {
    std::vector<std::int64_t> values;
};

/// Symmetric distance matrix over n >= 3 cities; zero diagonal, positive
/// integer distances elsewhere.
struct TspInstance {
    int n_cities = 0;
    std::vector<std::vector<std::int64_t>> dist;  // n x n
};

/// A literal is a 0-based variable index plus a negation flag.
struct Lit {
    int var = 0;
    bool negated = false;
};

/// Conjunction of 3-literal clauses; the objective is to satisfy as many
/// clauses as possible. Variables inside a clause are distinct and stored
/// in ascending order.
struct Max3SatInstance {
    int n_vars = 0;
    std::vector<std::array<Lit, 3>> clauses;
};

using ProblemInstance =
    std::variant<MaxCutInstance, NumPartInstance, TspInstance, Max3SatInstance>;

/// Short machine tag for a problem family: "maxcut", "numpart", "tsp",
/// "max3sat". Used in file headers, CSV rows and seed derivation.
std::string problem_tag(const ProblemInstance& inst);

/// Number of binary variables (equivalently qubits) the QUBO encoding of
/// this instance uses.
int encoded_qubit_count(const ProblemInstance& inst);

// --- generators ----------------------------------------------------------
// All generators are pure functions of their arguments; the same seed
// reproduces the same instance on every platform.

/// Random graph with round(density * n(n-1)/2) distinct edges sampled
/// uniformly. Requires n >= 2 and 0 < density <= 1.
MaxCutInstance gen_maxcut(int n_nodes, double density, std::uint64_t seed);

/// n values uniform in [1, max_value]. Requires n >= 2, max_value >= 1.
NumPartInstance gen_numpart(int n, std::int64_t max_value, std::uint64_t seed);

/// Complete symmetric distance matrix with off-diagonal entries uniform in
/// [1, 100]. Requires n >= 3.
TspInstance gen_tsp(int n_cities, std::uint64_t seed);

/// round(clause_ratio * n_vars) clauses; each clause draws 3 distinct
/// variables uniformly and negates each literal with probability 1/2.
/// Requires n_vars >= 3 and clause_ratio > 0.
Max3SatInstance gen_max3sat(int n_vars, double clause_ratio, std::uint64_t seed);

// --- exact reference optima ----------------------------------------------

/// Problem-space optimum found by exhaustive enumeration, used as the
/// ground truth the QUBO encodings are tested against.
///   maxcut  -> largest cut size; assignment holds one side of the cut
///   numpart -> smallest |sum difference|; assignment holds one subset
///   tsp     -> cheapest tour length; assignment is the one-hot city/slot
///              matrix of an optimal tour, flattened row-major
///   max3sat -> most satisfiable clauses; assignment holds the variables
/// Enumeration cost is exponential; callers keep instances small (the QUBO
/// encoding must stay within 24 variables).
struct BruteForceResult {
    double objective = 0.0;
    std::vector<int> assignment;  // one bit per problem variable (see above)
};

BruteForceResult brute_force_optimum(const ProblemInstance& inst);

// --- serialization --------------------------------------------------------
// Line-oriented text format. First line: tag plus dimensions, then one
// record per line (edges / values / matrix rows / clauses). Writing then
// reading reproduces the instance exactly.

std::string write_instance(const ProblemInstance& inst);
ProblemInstance read_instance(std::istream& in);
ProblemInstance read_instance_file(const std::string& path);
void write_instance_file(const ProblemInstance& inst, const std::string& path);

}  // namespace qdens
