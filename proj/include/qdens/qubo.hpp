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
#include <string>
#include <utility>
#include <vector>

#include "qdens/instances.hpp"

namespace qdens {

/// Quadratic unconstrained binary objective
///     E(x) = offset + sum_i linear[i] x_i + sum_{i<j} quadratic[(i,j)] x_i x_j
/// over x in {0,1}^n_vars. Coefficients are stored sparsely; terms that
/// cancel to exactly zero are dropped, and quadratic keys always satisfy
/// i < j. Map storage keeps iteration order ascending, which downstream
/// circuit synthesis relies on.
class Qubo {
  public:
    Qubo() = default;
    explicit Qubo(int n_vars);

    int n_vars() const { return n_vars_; }
    double offset() const { return offset_; }
    const std::map<int, double>& linear() const { return linear_; }
    const std::map<std::pair<int, int>, double>& quadratic() const { return quadratic_; }

    void set_offset(double v) { offset_ = v; }
    void add_offset(double v) { offset_ += v; }

    /// Accumulates c onto the linear coefficient of variable i.
    void add_linear(int i, double c);

    /// Accumulates c onto the coefficient of x_i x_j (i != j; the key is
    /// normalized to i < j). Diagonal contributions belong in add_linear
    /// since x^2 = x for binaries.
    void add_quadratic(int i, int j, double c);

  private:
    void check_var(int i) const;

    int n_vars_ = 0;
    double offset_ = 0.0;
    std::map<int, double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;
};

/// Evaluates the objective at a full assignment (one 0/1 entry per
/// variable). Throws std::invalid_argument on length mismatch.
double qubo_energy(const Qubo& q, const std::vector<int>& assignment);

// --- encoders --------------------------------------------------------------

/// Cut maximization as energy minimization: every cut edge contributes -1,
/// so E(x) = -cut(x). One variable per node.
Qubo encode_maxcut(const MaxCutInstance& inst);

/// Squared signed partition difference (sum_i a_i (2 x_i - 1))^2. One
/// variable per value; the minimum energy equals the squared optimal
/// difference.
Qubo encode_numpart(const NumPartInstance& inst);

/// Tour encoding with one-hot penalties. Variable (city i, slot k) lives at
/// flat index i*N + k; slot arithmetic wraps modulo N. A penalty weight
/// penalty_a <= 0 selects the default N * max_distance + 1, which makes any
/// constraint violation cost more than the worst valid tour.
Qubo encode_tsp(const TspInstance& inst, double penalty_a = 0.0);

/// One ancilla variable per clause, appended after the n_vars problem
/// variables. Each clause contributes a penalty whose minimum over the
/// ancilla is 0 when the clause is satisfied and 1 otherwise, so the ground
/// energy counts unsatisfied clauses.
Qubo encode_max3sat(const Max3SatInstance& inst);

Qubo encode(const ProblemInstance& inst);

// --- exhaustive minimization ------------------------------------------------

enum class Exec { Serial, Parallel, Auto };

/// Exact minimum by enumerating all 2^n assignments (n <= 24 enforced).
/// Ties resolve to the lowest assignment index, so serial and parallel
/// execution return identical results.
struct QuboMinimum {
    double energy = 0.0;
    std::vector<int> assignment;
};

QuboMinimum qubo_brute_force_min(const Qubo& q, Exec exec = Exec::Auto);

// --- serialization -----------------------------------------------------------
// Sparse triplet text: header "qubo <n_vars>", one "offset <v>" line, then
// "L i c" and "Q i j c" lines in ascending order. Coefficients round-trip
// bit-exactly.

std::string write_qubo(const Qubo& q);
Qubo read_qubo(std::istream& in);

}  // namespace qdens
