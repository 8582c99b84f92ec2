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

#include "qdens/instances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qdens/rng.hpp"

namespace qdens {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

}  // namespace

std::string problem_tag(const ProblemInstance& inst) {
    struct V {
        std::string operator()(const MaxCutInstance&) const { return "maxcut"; }
        std::string operator()(const NumPartInstance&) const { return "numpart"; }
        std::string operator()(const TspInstance&) const { return "tsp"; }
        std::string operator()(const Max3SatInstance&) const { return "max3sat"; }
    };
    return std::visit(V{}, inst);
}

int encoded_qubit_count(const ProblemInstance& inst) {
    struct V {
        int operator()(const MaxCutInstance& i) const { return i.n_nodes; }
        int operator()(const NumPartInstance& i) const { return static_cast<int>(i.values.size()); }
        int operator()(const TspInstance& i) const { return i.n_cities * i.n_cities; }
        int operator()(const Max3SatInstance& i) const {
            return i.n_vars + static_cast<int>(i.clauses.size());
        }
    };
    return std::visit(V{}, inst);
}

MaxCutInstance gen_maxcut(int n_nodes, double density, std::uint64_t seed) {
    if (n_nodes < 2) fail("gen_maxcut: need at least 2 nodes");
    if (!(density > 0.0) || density > 1.0) fail("gen_maxcut: density must be in (0, 1]");

    auto pairs = all_pairs(n_nodes);
    const auto m = static_cast<std::size_t>(
        std::llround(density * static_cast<double>(pairs.size())));

    Rng rng(seed);
    // Partial Fisher-Yates: after i steps the first i entries are a uniform
    // sample without replacement.
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = i + rng.pick_index(pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(m);
    std::sort(pairs.begin(), pairs.end());

    return MaxCutInstance{n_nodes, std::move(pairs)};
}

NumPartInstance gen_numpart(int n, std::int64_t max_value, std::uint64_t seed) {
    if (n < 2) fail("gen_numpart: need at least 2 values");
    if (max_value < 1) fail("gen_numpart: max_value must be positive");
    Rng rng(seed);
    NumPartInstance inst;
    inst.values.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inst.values.push_back(rng.uniform_int(1, max_value));
    return inst;
}

TspInstance gen_tsp(int n_cities, std::uint64_t seed) {
    if (n_cities < 3) fail("gen_tsp: need at least 3 cities");
    Rng rng(seed);
    TspInstance inst;
    inst.n_cities = n_cities;
    inst.dist.assign(static_cast<std::size_t>(n_cities),
                     std::vector<std::int64_t>(static_cast<std::size_t>(n_cities), 0));
    for (int i = 0; i < n_cities; ++i)
        for (int j = i + 1; j < n_cities; ++j) {
            const std::int64_t d = rng.uniform_int(1, 100);
            inst.dist[i][j] = d;
            inst.dist[j][i] = d;
        }
    return inst;
}

Max3SatInstance gen_max3sat(int n_vars, double clause_ratio, std::uint64_t seed) {
    if (n_vars < 3) fail("gen_max3sat: need at least 3 variables");
    if (!(clause_ratio > 0.0)) fail("gen_max3sat: clause ratio must be positive");
    const auto n_clauses = static_cast<int>(std::llround(clause_ratio * n_vars));

    Rng rng(seed);
    Max3SatInstance inst;
    inst.n_vars = n_vars;
    inst.clauses.reserve(static_cast<std::size_t>(n_clauses));
    for (int c = 0; c < n_clauses; ++c) {
        int v[3];
        v[0] = static_cast<int>(rng.pick_index(static_cast<std::size_t>(n_vars)));
        do {
            v[1] = static_cast<int>(rng.pick_index(static_cast<std::size_t>(n_vars)));
        } while (v[1] == v[0]);
        do {
            v[2] = static_cast<int>(rng.pick_index(static_cast<std::size_t>(n_vars)));
        } while (v[2] == v[0] || v[2] == v[1]);
        std::sort(v, v + 3);
        std::array<Lit, 3> clause;
        for (int k = 0; k < 3; ++k) clause[k] = Lit{v[k], rng.coin()};
        inst.clauses.push_back(clause);
    }
    return inst;
}

namespace {

BruteForceResult solve_maxcut(const MaxCutInstance& inst) {
    const int n = inst.n_nodes;
    if (n > 24) fail("brute_force_optimum: instance too large");
    BruteForceResult best;
    best.objective = -1.0;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        int cut = 0;
        for (const auto& [u, v] : inst.edges)
            cut += static_cast<int>(((bits >> u) ^ (bits >> v)) & 1u);
        if (static_cast<double>(cut) > best.objective) {
            best.objective = cut;
            best.assignment.assign(static_cast<std::size_t>(n), 0);
            for (int q = 0; q < n; ++q) best.assignment[static_cast<std::size_t>(q)] = (bits >> q) & 1u;
        }
    }
    return best;
}

BruteForceResult solve_numpart(const NumPartInstance& inst) {
    const int n = static_cast<int>(inst.values.size());
    if (n > 24) fail("brute_force_optimum: instance too large");
    const std::int64_t total = std::accumulate(inst.values.begin(), inst.values.end(),
                                               static_cast<std::int64_t>(0));
    BruteForceResult best;
    best.objective = -1.0;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::int64_t side = 0;
        for (int q = 0; q < n; ++q)
            if ((bits >> q) & 1u) side += inst.values[static_cast<std::size_t>(q)];
        const std::int64_t diff = std::llabs(2 * side - total);
        if (best.objective < 0.0 || static_cast<double>(diff) < best.objective) {
            best.objective = static_cast<double>(diff);
            best.assignment.assign(static_cast<std::size_t>(n), 0);
            for (int q = 0; q < n; ++q) best.assignment[static_cast<std::size_t>(q)] = (bits >> q) & 1u;
        }
    }
    return best;
}

BruteForceResult solve_tsp(const TspInstance& inst) {
    const int n = inst.n_cities;
    if (n * n > 24) fail("brute_force_optimum: instance too large");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    BruteForceResult best;
    best.objective = -1.0;
    std::vector<int> best_order;
    do {
        std::int64_t cost = 0;
        for (int k = 0; k < n; ++k)
            cost += inst.dist[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]
                             [static_cast<std::size_t>(order[static_cast<std::size_t>((k + 1) % n)])];
        if (best.objective < 0.0 || static_cast<double>(cost) < best.objective) {
            best.objective = static_cast<double>(cost);
            best_order = order;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));  // city 0 fixed: tours are rotation-invariant

    best.assignment.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        const int city = best_order[static_cast<std::size_t>(k)];
        best.assignment[static_cast<std::size_t>(city * n + k)] = 1;
    }
    return best;
}

BruteForceResult solve_max3sat(const Max3SatInstance& inst) {
    const int n = inst.n_vars;
    if (n + static_cast<int>(inst.clauses.size()) > 24)
        fail("brute_force_optimum: instance too large");
    BruteForceResult best;
    best.objective = -1.0;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        int sat = 0;
        for (const auto& clause : inst.clauses) {
            bool ok = false;
            for (const Lit& lit : clause) {
                const bool value = ((bits >> lit.var) & 1u) != 0u;
                if (value != lit.negated) {
                    ok = true;
                    break;
                }
            }
            sat += ok ? 1 : 0;
        }
        if (static_cast<double>(sat) > best.objective) {
            best.objective = sat;
            best.assignment.assign(static_cast<std::size_t>(n), 0);
            for (int q = 0; q < n; ++q) best.assignment[static_cast<std::size_t>(q)] = (bits >> q) & 1u;
        }
    }
    return best;
}

}  // namespace

BruteForceResult brute_force_optimum(const ProblemInstance& inst) {
    struct V {
        BruteForceResult operator()(const MaxCutInstance& i) const { return solve_maxcut(i); }
        BruteForceResult operator()(const NumPartInstance& i) const { return solve_numpart(i); }
        BruteForceResult operator()(const TspInstance& i) const { return solve_tsp(i); }
        BruteForceResult operator()(const Max3SatInstance& i) const { return solve_max3sat(i); }
    };
    return std::visit(V{}, inst);
}

std::string write_instance(const ProblemInstance& inst) {
    std::ostringstream out;
    struct V {
        std::ostringstream& out;
        void operator()(const MaxCutInstance& i) const {
            out << "maxcut " << i.n_nodes << ' ' << i.edges.size() << '\n';
            for (const auto& [u, v] : i.edges) out << u << ' ' << v << '\n';
        }
        void operator()(const NumPartInstance& i) const {
            out << "numpart " << i.values.size() << '\n';
            for (std::size_t k = 0; k < i.values.size(); ++k)
                out << i.values[k] << (k + 1 < i.values.size() ? ' ' : '\n');
        }
        void operator()(const TspInstance& i) const {
            out << "tsp " << i.n_cities << '\n';
            for (const auto& row : i.dist) {
                for (std::size_t k = 0; k < row.size(); ++k)
                    out << row[k] << (k + 1 < row.size() ? ' ' : '\n');
            }
        }
        void operator()(const Max3SatInstance& i) const {
            out << "max3sat " << i.n_vars << ' ' << i.clauses.size() << '\n';
            // 1-based signed literals; the sign carries the negation flag.
            for (const auto& clause : i.clauses) {
                for (int k = 0; k < 3; ++k) {
                    const Lit& lit = clause[static_cast<std::size_t>(k)];
                    out << (lit.negated ? -(lit.var + 1) : (lit.var + 1)) << (k < 2 ? ' ' : '\n');
                }
            }
        }
    };
    std::visit(V{out}, inst);
    return out.str();
}

ProblemInstance read_instance(std::istream& in) {
    std::string tag;
    if (!(in >> tag)) fail("read_instance: empty input");
    if (tag == "maxcut") {
        MaxCutInstance i;
        std::size_t m = 0;
        if (!(in >> i.n_nodes >> m)) fail("read_instance: bad maxcut header");
        for (std::size_t k = 0; k < m; ++k) {
            int u = 0, v = 0;
            if (!(in >> u >> v)) fail("read_instance: truncated maxcut edges");
            if (u < 0 || v < 0 || u >= i.n_nodes || v >= i.n_nodes || u == v)
                fail("read_instance: maxcut edge out of range");
            i.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(i.edges.begin(), i.edges.end());
        return i;
    }
    if (tag == "numpart") {
        NumPartInstance i;
        std::size_t n = 0;
        if (!(in >> n)) fail("read_instance: bad numpart header");
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t v = 0;
            if (!(in >> v)) fail("read_instance: truncated numpart values");
            i.values.push_back(v);
        }
        return i;
    }
    if (tag == "tsp") {
        TspInstance i;
        if (!(in >> i.n_cities)) fail("read_instance: bad tsp header");
        i.dist.assign(static_cast<std::size_t>(i.n_cities),
                      std::vector<std::int64_t>(static_cast<std::size_t>(i.n_cities), 0));
        for (auto& row : i.dist)
            for (auto& cell : row)
                if (!(in >> cell)) fail("read_instance: truncated tsp matrix");
        return i;
    }
    if (tag == "max3sat") {
        Max3SatInstance i;
        std::size_t m = 0;
        if (!(in >> i.n_vars >> m)) fail("read_instance: bad max3sat header");
        for (std::size_t k = 0; k < m; ++k) {
            std::array<Lit, 3> clause;
            for (auto& lit : clause) {
                int raw = 0;
                if (!(in >> raw) || raw == 0) fail("read_instance: bad max3sat literal");
                lit.negated = raw < 0;
                lit.var = std::abs(raw) - 1;
                if (lit.var >= i.n_vars) fail("read_instance: max3sat literal out of range");
            }
            i.clauses.push_back(clause);
        }
        return i;
    }
    fail("read_instance: unknown problem tag '" + tag + "'");
}

ProblemInstance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return read_instance(in);
}

void write_instance_file(const ProblemInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << write_instance(inst);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qdens
