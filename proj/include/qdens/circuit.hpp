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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qdens/qubo.hpp"

namespace qdens {

enum class GateKind { H, X, SX, RZ, RX, RZZ, CX, SWAP };

const char* gate_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);
int gate_arity(GateKind k);
bool gate_has_angle(GateKind k);

/// One gate. q1 is -1 for single-qubit kinds; angle is meaningful only for
/// rotation kinds (radians). For CX, q0 is the control and q1 the target.
struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;
    double angle = 0.0;
};

bool operator==(const Gate& a, const Gate& b);

/// Gate list over qubits [0, n_qubits). Gates appear in execution order;
/// no measurements or classical control.
struct LogicalCircuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
};

/// Validates qubit indices, arity and angle fields; throws
/// std::invalid_argument naming the first offending gate.
void validate_circuit(const LogicalCircuit& c);

/// Alternating-operator ansatz for a QUBO objective with p layers:
/// a Hadamard on every qubit, then per layer l an RZ(2 gamma_l c_i) for
/// every linear term, an RZZ(2 gamma_l c_ij) for every quadratic term
/// (ascending index order), and an RX(2 beta_l) on every qubit.
/// Requires betas.size() == gammas.size() == p >= 1.
LogicalCircuit build_qaoa(const Qubo& q, int p, const std::vector<double>& gammas,
                          const std::vector<double>& betas);

/// Convenience overload: p layers of the default angles gamma = 0.7,
/// beta = 0.3. The circuit's structure (and hence every routing metric) is
/// independent of the angle values.
LogicalCircuit build_qaoa(const Qubo& q, int p = 1);

/// Longest dependency chain: gates occupy one time unit each, and gates
/// sharing a qubit are ordered as listed. Empty circuits have depth 0.
int circuit_depth(const LogicalCircuit& c);

std::map<GateKind, int> gate_counts(const LogicalCircuit& c);

/// Qubit pairs coupled by at least one 2-qubit gate, canonical (u < v,
/// sorted). For a QAOA circuit this equals the QUBO's quadratic key set.
std::vector<std::pair<int, int>> interaction_graph(const LogicalCircuit& c);

/// Dependency DAG: edge i -> j when gate j is the next gate after i on some
/// shared qubit. Used by routing and by scheduling-related tests.
struct GateDag {
    std::vector<std::vector<int>> successors;
    std::vector<int> in_degree;
};

GateDag build_gate_dag(const LogicalCircuit& c);

// --- serialization -----------------------------------------------------------
// Header "circuit <n_qubits>", then one gate per line:
//   KIND q0 [q1] [angle]
// Angles print with enough digits to round-trip bit-exactly.

std::string write_circuit(const LogicalCircuit& c);
LogicalCircuit read_circuit(std::istream& in);
LogicalCircuit read_circuit_file(const std::string& path);
void write_circuit_file(const LogicalCircuit& c, const std::string& path);

}  // namespace qdens
