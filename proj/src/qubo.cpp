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

#include "qdens/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdens {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

Qubo::Qubo(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) fail("Qubo: need at least one variable");
}

void Qubo::check_var(int i) const {
    if (i < 0 || i >= n_vars_) fail("Qubo: variable index out of range");
}

void Qubo::add_linear(int i, double c) {
    check_var(i);
    if (c == 0.0) return;
    auto [it, inserted] = linear_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) linear_.erase(it);
    }
}

void Qubo::add_quadratic(int i, int j, double c) {
    check_var(i);
    check_var(j);
    if (i == j) fail("Qubo: diagonal quadratic term; fold into the linear part");
    if (c == 0.0) return;
    const auto key = std::minmax(i, j);
    auto [it, inserted] = quadratic_.try_emplace(std::pair<int, int>(key.first, key.second), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) quadratic_.erase(it);
    }
}

double qubo_energy(const Qubo& q, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != q.n_vars())
        fail("qubo_energy: assignment length does not match variable count");
    double e = q.offset();
    for (const auto& [i, c] : q.linear())
        if (assignment[static_cast<std::size_t>(i)]) e += c;
    for (const auto& [key, c] : q.quadratic())
        if (assignment[static_cast<std::size_t>(key.first)] &&
            assignment[static_cast<std::size_t>(key.second)])
            e += c;
    return e;
}

Qubo encode_maxcut(const MaxCutInstance& inst) {
    if (inst.n_nodes < 2) fail("encode_maxcut: need at least 2 nodes");
    Qubo q(inst.n_nodes);
    // Each edge contributes 2 x_u x_v - x_u - x_v: -1 when cut, 0 when not.
    for (const auto& [u, v] : inst.edges) {
        q.add_quadratic(u, v, 2.0);
        q.add_linear(u, -1.0);
        q.add_linear(v, -1.0);
    }
    return q;
}

Qubo encode_numpart(const NumPartInstance& inst) {
    const int n = static_cast<int>(inst.values.size());
    if (n < 2) fail("encode_numpart: need at least 2 values");
    Qubo q(n);
    // (sum_i a_i (2 x_i - 1))^2 expanded over binaries:
    //   4 a_i (a_i - S) on the diagonal, 8 a_i a_j off-diagonal, S^2 offset,
    // where S is the total sum.
    double total = 0.0;
    for (const auto v : inst.values) total += static_cast<double>(v);
    for (int i = 0; i < n; ++i) {
        const double a = static_cast<double>(inst.values[static_cast<std::size_t>(i)]);
        q.add_linear(i, 4.0 * a * (a - total));
        for (int j = i + 1; j < n; ++j)
            q.add_quadratic(i, j, 8.0 * a * static_cast<double>(inst.values[static_cast<std::size_t>(j)]));
    }
    q.set_offset(total * total);
    return q;
}

Qubo encode_tsp(const TspInstance& inst, double penalty_a) {
    const int n = inst.n_cities;
    if (n < 3) fail("encode_tsp: need at least 3 cities");
    std::int64_t max_d = 0;
    for (const auto& row : inst.dist)
        for (const auto d : row) max_d = std::max(max_d, d);
    const double a = penalty_a > 0.0 ? penalty_a : static_cast<double>(n) * static_cast<double>(max_d) + 1.0;

    Qubo q(n * n);
    const auto var = [n](int city, int slot) { return city * n + slot; };

    // One-hot penalties a (1 - sum x)^2 for every city row and slot column.
    // Expanded: constant a, diagonal -a per member, +2a per member pair.
    for (int city = 0; city < n; ++city) {
        q.add_offset(a);
        for (int k = 0; k < n; ++k) {
            q.add_linear(var(city, k), -a);
            for (int l = k + 1; l < n; ++l) q.add_quadratic(var(city, k), var(city, l), 2.0 * a);
        }
    }
    for (int k = 0; k < n; ++k) {
        q.add_offset(a);
        for (int city = 0; city < n; ++city) {
            q.add_linear(var(city, k), -a);
            for (int other = city + 1; other < n; ++other)
                q.add_quadratic(var(city, k), var(other, k), 2.0 * a);
        }
    }

    // Tour cost: city i in slot k followed by city j in slot k+1 (wrapping)
    // costs dist[i][j]. Summing ordered pairs charges each traversed leg
    // exactly once.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = static_cast<double>(inst.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            if (d == 0.0) continue;
            for (int k = 0; k < n; ++k) q.add_quadratic(var(i, k), var(j, (k + 1) % n), d);
        }
    return q;
}

Qubo encode_max3sat(const Max3SatInstance& inst) {
    if (inst.n_vars < 1) fail("encode_max3sat: need at least 1 variable");
    const int n_clauses = static_cast<int>(inst.clauses.size());
    Qubo q(inst.n_vars + n_clauses);

    // Clause penalty: with literals y_i (y = x or 1-x) and ancilla w,
    //   1 - y1 - y2 - y3 + y1y2 + y1y3 + y2y3 + w (2 - y1 - y2 - y3)
    // has minimum over w equal to 0 iff some literal is true, else 1, so
    // the ground energy counts unsatisfied clauses. Negated literals are
    // substituted before expansion; `add_term` folds the affine literal
    // forms (y = s*x + o with s = +-1) into QUBO coefficients.
    for (int c = 0; c < n_clauses; ++c) {
        const auto& clause = inst.clauses[static_cast<std::size_t>(c)];
        const int w = inst.n_vars + c;

        const auto sign = [&](int k) { return clause[static_cast<std::size_t>(k)].negated ? -1.0 : 1.0; };
        const auto off = [&](int k) { return clause[static_cast<std::size_t>(k)].negated ? 1.0 : 0.0; };
        const auto vr = [&](int k) { return clause[static_cast<std::size_t>(k)].var; };

        const auto add_lit = [&](int k, double coeff) {  // coeff * y_k
            q.add_linear(vr(k), coeff * sign(k));
            q.add_offset(coeff * off(k));
        };
        const auto add_lit_pair = [&](int k, int l, double coeff) {  // coeff * y_k y_l
            q.add_quadratic(vr(k), vr(l), coeff * sign(k) * sign(l));
            q.add_linear(vr(k), coeff * sign(k) * off(l));
            q.add_linear(vr(l), coeff * sign(l) * off(k));
            q.add_offset(coeff * off(k) * off(l));
        };
        const auto add_lit_anc = [&](int k, double coeff) {  // coeff * y_k w
            q.add_quadratic(vr(k), w, coeff * sign(k));
            q.add_linear(w, coeff * off(k));
        };

        q.add_offset(1.0);
        for (int k = 0; k < 3; ++k) add_lit(k, -1.0);
        add_lit_pair(0, 1, 1.0);
        add_lit_pair(0, 2, 1.0);
        add_lit_pair(1, 2, 1.0);
        q.add_linear(w, 2.0);
        for (int k = 0; k < 3; ++k) add_lit_anc(k, -1.0);
    }
    return q;
}

Qubo encode(const ProblemInstance& inst) {
    struct V {
        Qubo operator()(const MaxCutInstance& i) const { return encode_maxcut(i); }
        Qubo operator()(const NumPartInstance& i) const { return encode_numpart(i); }
        Qubo operator()(const TspInstance& i) const { return encode_tsp(i); }
        Qubo operator()(const Max3SatInstance& i) const { return encode_max3sat(i); }
    };
    return std::visit(V{}, inst);
}

namespace {

/// Flattened term lists evaluate much faster than map lookups in the 2^n loop.
struct FlatQubo {
    double offset;
    std::vector<std::pair<std::uint32_t, double>> linear;          // (bit mask, coeff)
    std::vector<std::pair<std::uint32_t, double>> quadratic;       // (pair mask, coeff)
};

FlatQubo flatten(const Qubo& q) {
    FlatQubo f;
    f.offset = q.offset();
    for (const auto& [i, c] : q.linear()) f.linear.emplace_back(1u << i, c);
    for (const auto& [key, c] : q.quadratic())
        f.quadratic.emplace_back((1u << key.first) | (1u << key.second), c);
    return f;
}

double flat_energy(const FlatQubo& f, std::uint32_t bits) {
    double e = f.offset;
    for (const auto& [mask, c] : f.linear)
        if (bits & mask) e += c;
    for (const auto& [mask, c] : f.quadratic)
        if ((bits & mask) == mask) e += c;
    return e;
}

}  // namespace

QuboMinimum qubo_brute_force_min(const Qubo& q, Exec exec) {
    const int n = q.n_vars();
    if (n > 24) fail("qubo_brute_force_min: more than 24 variables");
    const FlatQubo f = flatten(q);
    const std::uint32_t count = 1u << n;

    bool parallel = false;
#ifdef _OPENMP
    parallel = exec == Exec::Parallel || (exec == Exec::Auto && n >= 18);
#else
    (void)exec;
#endif

    double best_e = flat_energy(f, 0);
    std::uint32_t best_bits = 0;

    if (!parallel) {
        for (std::uint32_t bits = 1; bits < count; ++bits) {
            const double e = flat_energy(f, bits);
            if (e < best_e) {
                best_e = e;
                best_bits = bits;
            }
        }
    } else {
#ifdef _OPENMP
#pragma omp parallel
        {
            double local_e = flat_energy(f, 0);
            std::uint32_t local_bits = 0;
#pragma omp for schedule(static)
            for (std::int64_t i = 1; i < static_cast<std::int64_t>(count); ++i) {
                const auto bits = static_cast<std::uint32_t>(i);
                const double e = flat_energy(f, bits);
                if (e < local_e || (e == local_e && bits < local_bits)) {
                    local_e = e;
                    local_bits = bits;
                }
            }
#pragma omp critical
            {
                // Lexicographic (energy, index) merge keeps the winner
                // identical to the serial scan for any thread count.
                if (local_e < best_e || (local_e == best_e && local_bits < best_bits)) {
                    best_e = local_e;
                    best_bits = local_bits;
                }
            }
        }
#endif
    }

    QuboMinimum result;
    result.energy = best_e;
    result.assignment.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) result.assignment[static_cast<std::size_t>(i)] = (best_bits >> i) & 1u;
    return result;
}

std::string write_qubo(const Qubo& q) {
    std::ostringstream out;
    char buf[64];
    const auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    out << "qubo " << q.n_vars() << '\n';
    out << "offset " << num(q.offset()) << '\n';
    for (const auto& [i, c] : q.linear()) out << "L " << i << ' ' << num(c) << '\n';
    for (const auto& [key, c] : q.quadratic())
        out << "Q " << key.first << ' ' << key.second << ' ' << num(c) << '\n';
    return out.str();
}

Qubo read_qubo(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "qubo") fail("read_qubo: bad header");
    Qubo q(n);
    std::string kind;
    while (in >> kind) {
        if (kind == "offset") {
            double v = 0;
            if (!(in >> v)) fail("read_qubo: bad offset");
            q.set_offset(v);
        } else if (kind == "L") {
            int i = 0;
            double c = 0;
            if (!(in >> i >> c)) fail("read_qubo: bad linear term");
            q.add_linear(i, c);
        } else if (kind == "Q") {
            int i = 0, j = 0;
            double c = 0;
            if (!(in >> i >> j >> c)) fail("read_qubo: bad quadratic term");
            q.add_quadratic(i, j, c);
        } else {
            fail("read_qubo: unknown line kind '" + kind + "'");
        }
    }
    return q;
}

}  // namespace qdens
