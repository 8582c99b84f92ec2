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

#include <complex>
#include <vector>

#include "qdens/circuit.hpp"
#include "qdens/qubo.hpp"  // Exec

namespace qdens::sim {

/// Dense statevector over n qubits; qubit q is bit q of the basis index
/// (qubit 0 least significant). Every gate kernel exists in a serial and
/// an OpenMP form that perform identical per-amplitude arithmetic, so the
/// two produce bit-identical states; Exec::Auto picks the parallel path for
/// large registers only.
class Statevector {
  public:
    /// |0...0> on n qubits. n is capped at 26 to keep memory bounded.
    explicit Statevector(int n_qubits);

    int n_qubits() const { return n_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

    void apply(const Gate& g, Exec exec = Exec::Auto);

    /// Runs a whole circuit from |0...0>.
    static Statevector run(const LogicalCircuit& c, Exec exec = Exec::Auto);

  private:
    void apply_single(int q, const std::complex<double> u[2][2], bool parallel);
    void apply_phase_pair(int q0, int q1, std::complex<double> equal,
                          std::complex<double> differ, bool parallel);
    void apply_cx(int control, int target, bool parallel);
    void apply_swap(int a, int b, bool parallel);

    int n_;
    std::vector<std::complex<double>> amps_;
};

/// True when b equals a up to one global phase factor: the phase is fixed
/// on the largest amplitude of a, then every amplitude must match within
/// tol in max norm.
bool states_equal_up_to_phase(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b, double tol);

}  // namespace qdens::sim
