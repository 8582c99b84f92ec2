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

#include "qdens/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qdens {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::SX: return "SX";
        case GateKind::RZ: return "RZ";
        case GateKind::RX: return "RX";
        case GateKind::RZZ: return "RZZ";
        case GateKind::CX: return "CX";
        case GateKind::SWAP: return "SWAP";
    }
    fail("gate_name: unknown kind");
}

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "H") return GateKind::H;
    if (name == "X") return GateKind::X;
    if (name == "SX") return GateKind::SX;
    if (name == "RZ") return GateKind::RZ;
    if (name == "RX") return GateKind::RX;
    if (name == "RZZ") return GateKind::RZZ;
    if (name == "CX") return GateKind::CX;
    if (name == "SWAP") return GateKind::SWAP;
    fail("unknown gate name '" + name + "'");
}

int gate_arity(GateKind k) {
    switch (k) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::SX:
        case GateKind::RZ:
        case GateKind::RX: return 1;
        case GateKind::RZZ:
        case GateKind::CX:
        case GateKind::SWAP: return 2;
    }
    fail("gate_arity: unknown kind");
}

bool gate_has_angle(GateKind k) {
    return k == GateKind::RZ || k == GateKind::RX || k == GateKind::RZZ;
}

bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.q0 == b.q0 && a.q1 == b.q1 && a.angle == b.angle;
}

void validate_circuit(const LogicalCircuit& c) {
    if (c.n_qubits < 1) fail("circuit: need at least one qubit");
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const int arity = gate_arity(g.kind);
        const auto bad = [&](const char* why) {
            fail("circuit: gate " + std::to_string(i) + " (" + gate_name(g.kind) + "): " + why);
        };
        if (g.q0 < 0 || g.q0 >= c.n_qubits) bad("q0 out of range");
        if (arity == 2) {
            if (g.q1 < 0 || g.q1 >= c.n_qubits) bad("q1 out of range");
            if (g.q1 == g.q0) bad("qubits must differ");
        } else if (g.q1 != -1) {
            bad("single-qubit gate carries a second qubit");
        }
        if (!gate_has_angle(g.kind) && g.angle != 0.0) bad("angle on a non-rotation gate");
    }
}

LogicalCircuit build_qaoa(const Qubo& q, int p, const std::vector<double>& gammas,
                          const std::vector<double>& betas) {
    if (p < 1) fail("build_qaoa: need at least one layer");
    if (static_cast<int>(gammas.size()) != p || static_cast<int>(betas.size()) != p)
        fail("build_qaoa: need exactly one (gamma, beta) pair per layer");

    LogicalCircuit c;
    c.n_qubits = q.n_vars();
    c.gates.reserve(static_cast<std::size_t>(q.n_vars()) * (1 + static_cast<std::size_t>(p)) +
                    static_cast<std::size_t>(p) * (q.linear().size() + q.quadratic().size()));

    for (int i = 0; i < q.n_vars(); ++i) c.gates.push_back({GateKind::H, i});
    for (int l = 0; l < p; ++l) {
        const double gamma = gammas[static_cast<std::size_t>(l)];
        const double beta = betas[static_cast<std::size_t>(l)];
        for (const auto& [i, coeff] : q.linear())
            c.gates.push_back({GateKind::RZ, i, -1, 2.0 * gamma * coeff});
        for (const auto& [key, coeff] : q.quadratic())
            c.gates.push_back({GateKind::RZZ, key.first, key.second, 2.0 * gamma * coeff});
        for (int i = 0; i < q.n_vars(); ++i)
            c.gates.push_back({GateKind::RX, i, -1, 2.0 * beta});
    }
    return c;
}

LogicalCircuit build_qaoa(const Qubo& q, int p) {
    return build_qaoa(q, p, std::vector<double>(static_cast<std::size_t>(p), 0.7),
                      std::vector<double>(static_cast<std::size_t>(p), 0.3));
}

int circuit_depth(const LogicalCircuit& c) {
    std::vector<int> ready(static_cast<std::size_t>(c.n_qubits), 0);
    int depth = 0;
    for (const Gate& g : c.gates) {
        int t = ready[static_cast<std::size_t>(g.q0)];
        if (g.q1 >= 0) t = std::max(t, ready[static_cast<std::size_t>(g.q1)]);
        ++t;
        ready[static_cast<std::size_t>(g.q0)] = t;
        if (g.q1 >= 0) ready[static_cast<std::size_t>(g.q1)] = t;
        depth = std::max(depth, t);
    }
    return depth;
}

std::map<GateKind, int> gate_counts(const LogicalCircuit& c) {
    std::map<GateKind, int> counts;
    for (const Gate& g : c.gates) ++counts[g.kind];
    return counts;
}

std::vector<std::pair<int, int>> interaction_graph(const LogicalCircuit& c) {
    std::set<std::pair<int, int>> pairs;
    for (const Gate& g : c.gates)
        if (g.q1 >= 0) pairs.emplace(std::min(g.q0, g.q1), std::max(g.q0, g.q1));
    return {pairs.begin(), pairs.end()};
}

GateDag build_gate_dag(const LogicalCircuit& c) {
    GateDag dag;
    dag.successors.assign(c.gates.size(), {});
    dag.in_degree.assign(c.gates.size(), 0);
    std::vector<int> last(static_cast<std::size_t>(c.n_qubits), -1);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const int qs[2] = {g.q0, g.q1};
        int prev_seen = -1;
        for (int qi = 0; qi < 2; ++qi) {
            const int q = qs[qi];
            if (q < 0) continue;
            const int prev = last[static_cast<std::size_t>(q)];
            if (prev >= 0 && prev != prev_seen) {  // both qubits may share the predecessor
                dag.successors[static_cast<std::size_t>(prev)].push_back(static_cast<int>(i));
                ++dag.in_degree[i];
                prev_seen = prev;
            }
            last[static_cast<std::size_t>(q)] = static_cast<int>(i);
        }
    }
    return dag;
}

std::string write_circuit(const LogicalCircuit& c) {
    std::ostringstream out;
    char buf[64];
    out << "circuit " << c.n_qubits << '\n';
    for (const Gate& g : c.gates) {
        out << gate_name(g.kind) << ' ' << g.q0;
        if (g.q1 >= 0) out << ' ' << g.q1;
        if (gate_has_angle(g.kind)) {
            std::snprintf(buf, sizeof buf, "%.17g", g.angle);
            out << ' ' << buf;
        }
        out << '\n';
    }
    return out.str();
}

LogicalCircuit read_circuit(std::istream& in) {
    std::string tag;
    LogicalCircuit c;
    if (!(in >> tag >> c.n_qubits) || tag != "circuit") fail("read_circuit: bad header");
    std::string name;
    while (in >> name) {
        Gate g;
        g.kind = gate_kind_from_name(name);
        if (!(in >> g.q0)) fail("read_circuit: missing qubit for " + name);
        if (gate_arity(g.kind) == 2 && !(in >> g.q1)) fail("read_circuit: missing second qubit for " + name);
        if (gate_has_angle(g.kind) && !(in >> g.angle)) fail("read_circuit: missing angle for " + name);
        c.gates.push_back(g);
    }
    validate_circuit(c);
    return c;
}

LogicalCircuit read_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit file: " + path);
    return read_circuit(in);
}

void write_circuit_file(const LogicalCircuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write circuit file: " + path);
    out << write_circuit(c);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qdens
