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

#include "qdens/statevector.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace qdens::sim {

namespace {
using cd = std::complex<double>;

// Runs body(k) for k in [0, count), optionally under OpenMP. The body is
// the same callable either way, so serial and parallel runs perform
// identical arithmetic per index and yield bit-identical states.
template <typename Body>
void for_each_index(std::size_t count, bool parallel, Body body) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k)
            body(static_cast<std::size_t>(k));
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t k = 0; k < count; ++k) body(k);
}

// Parallel pays off only once the register is large enough.
constexpr int kAutoParallelQubits = 14;
}  // namespace

Statevector::Statevector(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 26)
        throw std::invalid_argument("statevector: qubit count must be in [1, 26]");
    amps_.assign(std::size_t{1} << n_qubits, cd{0.0, 0.0});
    amps_[0] = cd{1.0, 0.0};
}

void Statevector::apply_single(int q, const cd u[2][2], bool parallel) {
    const std::size_t step = std::size_t{1} << q;
    const std::size_t mask = step - 1;
    const cd u00 = u[0][0], u01 = u[0][1], u10 = u[1][0], u11 = u[1][1];
    cd* a = amps_.data();
    for_each_index(amps_.size() >> 1, parallel, [=](std::size_t k) {
        const std::size_t i0 = ((k & ~mask) << 1) | (k & mask);
        const std::size_t i1 = i0 | step;
        const cd a0 = a[i0], a1 = a[i1];
        a[i0] = u00 * a0 + u01 * a1;
        a[i1] = u10 * a0 + u11 * a1;
    });
}

void Statevector::apply_phase_pair(int q0, int q1, cd equal, cd differ, bool parallel) {
    cd* a = amps_.data();
    for_each_index(amps_.size(), parallel, [=](std::size_t i) {
        const bool same = (((i >> q0) ^ (i >> q1)) & 1u) == 0;
        a[i] *= same ? equal : differ;
    });
}

void Statevector::apply_cx(int control, int target, bool parallel) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    cd* a = amps_.data();
    // Each amplitude pair is visited exactly once, from its target-clear side.
    for_each_index(amps_.size(), parallel, [=](std::size_t i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            const std::size_t j = i | tmask;
            const cd tmp = a[i];
            a[i] = a[j];
            a[j] = tmp;
        }
    });
}

void Statevector::apply_swap(int qa, int qb, bool parallel) {
    const std::size_t amask = std::size_t{1} << qa;
    const std::size_t bmask = std::size_t{1} << qb;
    cd* a = amps_.data();
    for_each_index(amps_.size(), parallel, [=](std::size_t i) {
        if ((i & amask) != 0 && (i & bmask) == 0) {
            const std::size_t j = (i ^ amask) | bmask;
            const cd tmp = a[i];
            a[i] = a[j];
            a[j] = tmp;
        }
    });
}

void Statevector::apply(const Gate& g, Exec exec) {
    const int arity = gate_arity(g.kind);
    if (g.q0 < 0 || g.q0 >= n_ || (arity == 2 && (g.q1 < 0 || g.q1 >= n_ || g.q1 == g.q0)))
        throw std::invalid_argument("statevector: gate qubits out of range");

    bool parallel = false;
#ifdef _OPENMP
    parallel = exec == Exec::Parallel || (exec == Exec::Auto && n_ >= kAutoParallelQubits);
#else
    (void)exec;
#endif

    const cd i1{0.0, 1.0};
    switch (g.kind) {
        case GateKind::H: {
            const double c = 1.0 / std::sqrt(2.0);
            const cd u[2][2] = {{c, c}, {c, -c}};
            apply_single(g.q0, u, parallel);
            break;
        }
        case GateKind::X: {
            const cd u[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
            apply_single(g.q0, u, parallel);
            break;
        }
        case GateKind::SX: {
            const cd d = 0.5 * (1.0 + i1), o = 0.5 * (1.0 - i1);
            const cd u[2][2] = {{d, o}, {o, d}};
            apply_single(g.q0, u, parallel);
            break;
        }
        case GateKind::RZ: {
            const cd u[2][2] = {{std::exp(-i1 * (g.angle / 2.0)), 0.0},
                                {0.0, std::exp(i1 * (g.angle / 2.0))}};
            apply_single(g.q0, u, parallel);
            break;
        }
        case GateKind::RX: {
            const cd c = std::cos(g.angle / 2.0);
            const cd s = -i1 * std::sin(g.angle / 2.0);
            const cd u[2][2] = {{c, s}, {s, c}};
            apply_single(g.q0, u, parallel);
            break;
        }
        case GateKind::RZZ:
            apply_phase_pair(g.q0, g.q1, std::exp(-i1 * (g.angle / 2.0)),
                             std::exp(i1 * (g.angle / 2.0)), parallel);
            break;
        case GateKind::CX:
            apply_cx(g.q0, g.q1, parallel);
            break;
        case GateKind::SWAP:
            apply_swap(g.q0, g.q1, parallel);
            break;
    }
}

Statevector Statevector::run(const LogicalCircuit& c, Exec exec) {
    Statevector sv(c.n_qubits);
    for (const Gate& g : c.gates) sv.apply(g, exec);
    return sv;
}

bool states_equal_up_to_phase(const std::vector<cd>& a, const std::vector<cd>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::size_t m = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (std::abs(a[i]) > std::abs(a[m])) m = i;
    if (std::abs(a[m]) == 0.0) {
        for (const cd& v : b)
            if (std::abs(v) > tol) return false;
        return true;
    }
    if (std::abs(b[m]) < tol && std::abs(a[m]) > tol) return false;
    cd phase = b[m] / a[m];
    const double mag = std::abs(phase);
    if (mag == 0.0) return false;
    phase /= mag;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(phase * a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace qdens::sim
