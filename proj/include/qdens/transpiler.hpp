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
#include <vector>

#include "qdens/circuit.hpp"
#include "qdens/topology.hpp"

namespace qdens {

/// How inserted SWAPs are accounted for.
///   Depth: SWAPs decompose into 3 CX before the final optimization pass;
///          the depth metric reflects the fully native circuit.
///   Swap:  SWAP joins the native set and stays atomic, so the swap count
///          can be read off the final circuit directly.
enum class CountingMode { Depth, Swap };

/// Rewrites every gate into the native set {RZ, SX, X, CX} (plus SWAP when
/// include_swap is set):
///   H       -> RZ(pi/2) SX RZ(pi/2)
///   RX(t)   -> RZ(pi/2) SX RZ(t+pi) SX RZ(5pi/2)
///   RZZ(t)  -> CX RZ(t) CX
///   SWAP    -> CX CX CX (alternating direction), unless kept atomic
/// Already-native gates pass through unchanged; the rewrite is idempotent.
LogicalCircuit decompose(const LogicalCircuit& c, bool include_swap);

/// Greedy subgraph placement: logical qubits in descending interaction
/// degree, each placed on a free physical qubit adjacent to as many
/// already-placed neighbours as possible (falling back to proximity, then
/// hardware degree), ties broken by the seeded RNG. Returns logical ->
/// physical, injective. Requires n_qubits <= hw.n_qubits and hw connected.
std::vector<int> initial_layout(const LogicalCircuit& c, const HardwareGraph& hw,
                                std::uint64_t seed);

struct TranspileMetrics {
    int depth = 0;
    int swap_count = 0;
    int cx_count = 0;
    int total_gates = 0;
    int trials_used = 0;
};

/// Result of mapping a logical circuit onto hardware. Gate indices are
/// physical; initial_layout[q] is where logical q starts, final_layout[q]
/// where it ends after all routing SWAPs.
struct TranspiledCircuit {
    int n_hw_qubits = 0;
    std::vector<Gate> gates;
    std::vector<int> initial_layout;
    std::vector<int> final_layout;
    TranspileMetrics metrics;
};

/// Routes a (1- and 2-qubit gate) circuit onto hw starting from layout.
/// Gates are emitted in dependency order; when the front is blocked, the
/// blocked gate's qubits are brought together with SWAPs along a randomized
/// shortest path, preferring steps that also shorten other blocked front
/// gates. `trials` independent attempts run and the one with the fewest
/// SWAPs (ties: lowest depth, then lowest trial index) wins, which makes
/// the result a pure function of (circuit, hw, layout, seed, trials).
TranspiledCircuit route(const LogicalCircuit& c, const HardwareGraph& hw,
                        const std::vector<int>& layout, std::uint64_t seed, int trials);

/// Peephole optimization at a fixed level:
///   0: returns the circuit unchanged
///   1: cancels adjacent self-inverse pairs (CX CX, X X, SWAP SWAP) and
///      merges consecutive RZ on a qubit, dropping angles that are 0 mod
///      2 pi within 1e-12
///   2: level 1 plus a fixed commutation rule set to expose more matches:
///      RZ slides past CX controls, X-basis gates (X, SX, RX) past CX
///      targets
/// Runs to a fixpoint; level 3 is reserved and rejected with an error.
LogicalCircuit optimize(const LogicalCircuit& c, int level);

struct TranspileOptions {
    int opt_level = 2;
    CountingMode mode = CountingMode::Depth;
    int trials = 20;
    std::uint64_t seed = 1;
    int qaoa_layers = 1;  // used by callers that synthesize circuits
};

/// Full pipeline: optimize, decompose to the native set, place, route,
/// (depth mode) decompose leftover SWAPs, optimize again, and measure.
TranspiledCircuit transpile(const LogicalCircuit& c, const HardwareGraph& hw,
                            const TranspileOptions& opt);

/// True when every 2-qubit gate in t acts on a coupled pair of hw.
bool respects_coupling(const TranspiledCircuit& t, const HardwareGraph& hw);

/// Dense simulation of both circuits (the transpiled one conjugated by its
/// layout bookkeeping); true iff the final states agree up to a global
/// phase within 1e-9. Restricted to originals of at most 10 qubits.
bool verify_equivalence(const LogicalCircuit& original, const TranspiledCircuit& t);

// --- serialization -----------------------------------------------------------
// Header "transpiled <n_hw_qubits>", one "layout ..." and one "final ..."
// line (logical index order), then gates in the circuit text format with
// physical indices.

std::string write_transpiled(const TranspiledCircuit& t);
TranspiledCircuit read_transpiled(std::istream& in);

}  // namespace qdens
