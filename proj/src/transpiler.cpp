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

#include "qdens/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qdens/rng.hpp"
#include "qdens/statevector.hpp"

namespace qdens {

namespace {
constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

LogicalCircuit decompose(const LogicalCircuit& c, bool include_swap) {
    validate_circuit(c);
    LogicalCircuit out{c.n_qubits, {}};
    out.gates.reserve(c.gates.size() * 3);
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H:
                out.gates.push_back({GateKind::RZ, g.q0, -1, kPi / 2});
                out.gates.push_back({GateKind::SX, g.q0, -1, 0.0});
                out.gates.push_back({GateKind::RZ, g.q0, -1, kPi / 2});
                break;
            case GateKind::RX:
                out.gates.push_back({GateKind::RZ, g.q0, -1, kPi / 2});
                out.gates.push_back({GateKind::SX, g.q0, -1, 0.0});
                out.gates.push_back({GateKind::RZ, g.q0, -1, g.angle + kPi});
                out.gates.push_back({GateKind::SX, g.q0, -1, 0.0});
                out.gates.push_back({GateKind::RZ, g.q0, -1, 5 * kPi / 2});
                break;
            case GateKind::RZZ:
                out.gates.push_back({GateKind::CX, g.q0, g.q1, 0.0});
                out.gates.push_back({GateKind::RZ, g.q1, -1, g.angle});
                out.gates.push_back({GateKind::CX, g.q0, g.q1, 0.0});
                break;
            case GateKind::SWAP:
                if (include_swap) {
                    out.gates.push_back(g);
                } else {
                    out.gates.push_back({GateKind::CX, g.q0, g.q1, 0.0});
                    out.gates.push_back({GateKind::CX, g.q1, g.q0, 0.0});
                    out.gates.push_back({GateKind::CX, g.q0, g.q1, 0.0});
                }
                break;
            default:
                out.gates.push_back(g);
                break;
        }
    }
    return out;
}

std::vector<int> initial_layout(const LogicalCircuit& c, const HardwareGraph& hw,
                                std::uint64_t seed) {
    validate_circuit(c);
    if (c.n_qubits > hw.n_qubits) fail("initial_layout: circuit larger than hardware");
    if (!is_connected(hw)) fail("initial_layout: hardware graph must be connected");

    const auto n = static_cast<std::size_t>(c.n_qubits);
    std::vector<std::set<int>> ladj(n);
    for (const auto& [u, v] : interaction_graph(c)) {
        ladj[static_cast<std::size_t>(u)].insert(v);
        ladj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<int> order(n);
    for (std::size_t q = 0; q < n; ++q) order[q] = static_cast<int>(q);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return ladj[static_cast<std::size_t>(a)].size() > ladj[static_cast<std::size_t>(b)].size();
    });

    const auto hadj = adjacency_lists(hw);
    const auto dist = all_pairs_distances(hw);
    std::vector<int> pos(n, -1);
    std::vector<char> used(static_cast<std::size_t>(hw.n_qubits), 0);
    Rng rng(seed);
    for (const int q : order) {
        // maximize placed neighbours adjacent, then closeness, then degree
        long best_adj = -1, best_prox = std::numeric_limits<long>::max(), best_deg = -1;
        std::vector<int> best;
        for (int p = 0; p < hw.n_qubits; ++p) {
            if (used[static_cast<std::size_t>(p)]) continue;
            long adj_placed = 0, prox = 0;
            for (const int r : ladj[static_cast<std::size_t>(q)]) {
                const int rp = pos[static_cast<std::size_t>(r)];
                if (rp < 0) continue;
                const long d = dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(rp)];
                adj_placed += d == 1;
                prox += d;
            }
            const long deg = static_cast<long>(hadj[static_cast<std::size_t>(p)].size());
            const auto key = std::make_tuple(adj_placed, -prox, deg);
            const auto best_key = std::make_tuple(best_adj, -best_prox, best_deg);
            if (key > best_key) {
                best_adj = adj_placed;
                best_prox = prox;
                best_deg = deg;
                best.clear();
            }
            if (key == std::make_tuple(best_adj, -best_prox, best_deg)) best.push_back(p);
        }
        const int p = best[rng.pick_index(best.size())];
        pos[static_cast<std::size_t>(q)] = p;
        used[static_cast<std::size_t>(p)] = 1;
    }
    return pos;
}

namespace {

struct RouteAttempt {
    std::vector<Gate> gates;
    std::vector<int> phys_of;
    int swaps = 0;
    int depth = 0;
};

// One routing attempt; the only randomness is the tie-break among equally
// scored SWAP candidates.
RouteAttempt route_attempt(const LogicalCircuit& c, const HardwareGraph& hw,
                           const std::vector<int>& layout, const GateDag& dag,
                           const std::vector<std::vector<int>>& hadj,
                           const std::vector<char>& adj,
                           const std::vector<std::vector<std::uint16_t>>& dist,
                           std::uint64_t trial_seed) {
    const int nhw = hw.n_qubits;
    Rng rng(trial_seed);
    RouteAttempt out;
    out.phys_of = layout;
    std::vector<int> log_at(static_cast<std::size_t>(nhw), -1);
    for (int q = 0; q < c.n_qubits; ++q) log_at[static_cast<std::size_t>(layout[q])] = q;

    std::vector<int> indeg = dag.in_degree;
    std::set<int> front;
    for (std::size_t i = 0; i < c.gates.size(); ++i)
        if (indeg[i] == 0) front.insert(static_cast<int>(i));

    const auto phys = [&](int lq) { return out.phys_of[static_cast<std::size_t>(lq)]; };
    const auto adjacent = [&](int a, int b) {
        return adj[static_cast<std::size_t>(a) * static_cast<std::size_t>(nhw) +
                   static_cast<std::size_t>(b)] != 0;
    };
    const auto executable = [&](const Gate& g) {
        return gate_arity(g.kind) == 1 || adjacent(phys(g.q0), phys(g.q1));
    };
    // Emits every executable front gate (ascending index) until only blocked
    // 2-qubit gates remain.
    const auto flush = [&]() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = front.begin(); it != front.end();) {
                const Gate& g = c.gates[static_cast<std::size_t>(*it)];
                if (!executable(g)) {
                    ++it;
                    continue;
                }
                Gate m = g;
                m.q0 = phys(g.q0);
                if (gate_arity(g.kind) == 2) m.q1 = phys(g.q1);
                out.gates.push_back(m);
                const int gi = *it;
                it = front.erase(it);
                for (const int s : dag.successors[static_cast<std::size_t>(gi)])
                    if (--indeg[static_cast<std::size_t>(s)] == 0) front.insert(s);
                progress = true;
            }
        }
    };

    flush();
    while (!front.empty()) {
        const Gate& tg = c.gates[static_cast<std::size_t>(*front.begin())];
        const int pa = phys(tg.q0), pb = phys(tg.q1);
        // swaps moving either endpoint one step along a shortest path
        std::vector<std::pair<int, int>> cands;
        const auto add_side = [&](int x, int other) {
            for (const int nb : hadj[static_cast<std::size_t>(x)])
                if (dist[static_cast<std::size_t>(nb)][static_cast<std::size_t>(other)] <
                    dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(other)])
                    cands.emplace_back(x, nb);
        };
        add_side(pa, pb);
        add_side(pb, pa);

        long best_score = std::numeric_limits<long>::min();
        std::vector<std::size_t> best;
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            const int x = cands[ci].first, nb = cands[ci].second;
            const auto remap = [&](int p) { return p == x ? nb : (p == nb ? x : p); };
            long score = 0;
            for (const int gi : front) {
                const Gate& fg = c.gates[static_cast<std::size_t>(gi)];
                if (gate_arity(fg.kind) != 2) continue;
                const int a = phys(fg.q0), b = phys(fg.q1);
                if (adjacent(a, b)) continue;
                score += static_cast<long>(dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) -
                         static_cast<long>(dist[static_cast<std::size_t>(remap(a))]
                                               [static_cast<std::size_t>(remap(b))]);
            }
            if (score > best_score) {
                best_score = score;
                best.clear();
            }
            if (score == best_score) best.push_back(ci);
        }

        const auto [x, nb] = cands[best[rng.pick_index(best.size())]];
        out.gates.push_back({GateKind::SWAP, x, nb, 0.0});
        ++out.swaps;
        const int lx = log_at[static_cast<std::size_t>(x)];
        const int ln = log_at[static_cast<std::size_t>(nb)];
        if (lx >= 0) out.phys_of[static_cast<std::size_t>(lx)] = nb;
        if (ln >= 0) out.phys_of[static_cast<std::size_t>(ln)] = x;
        log_at[static_cast<std::size_t>(x)] = ln;
        log_at[static_cast<std::size_t>(nb)] = lx;
        flush();
    }
    out.depth = circuit_depth({nhw, out.gates});
    return out;
}

}  // namespace

TranspiledCircuit route(const LogicalCircuit& c, const HardwareGraph& hw,
                        const std::vector<int>& layout, std::uint64_t seed, int trials) {
    validate_circuit(c);
    if (trials < 1) fail("route: trials must be >= 1");
    if (static_cast<int>(layout.size()) != c.n_qubits) fail("route: layout size mismatch");
    if (!is_connected(hw)) fail("route: hardware graph must be connected");
    std::vector<char> seen(static_cast<std::size_t>(hw.n_qubits), 0);
    for (const int p : layout) {
        if (p < 0 || p >= hw.n_qubits || seen[static_cast<std::size_t>(p)])
            fail("route: layout must map logical qubits to distinct hardware qubits");
        seen[static_cast<std::size_t>(p)] = 1;
    }

    const auto hadj = adjacency_lists(hw);
    const auto nhw = static_cast<std::size_t>(hw.n_qubits);
    std::vector<char> adj(nhw * nhw, 0);
    for (const auto& [u, v] : hw.edges) {
        adj[static_cast<std::size_t>(u) * nhw + static_cast<std::size_t>(v)] = 1;
        adj[static_cast<std::size_t>(v) * nhw + static_cast<std::size_t>(u)] = 1;
    }
    const auto dist = all_pairs_distances(hw);
    const auto dag = build_gate_dag(c);

    RouteAttempt best;
    int best_trial = -1;
    int ran = 0;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed =
            seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(t) + 1);
        RouteAttempt att = route_attempt(c, hw, layout, dag, hadj, adj, dist, trial_seed);
        ++ran;
        if (best_trial < 0 || std::make_tuple(att.swaps, att.depth, t) <
                                  std::make_tuple(best.swaps, best.depth, best_trial)) {
            best = std::move(att);
            best_trial = t;
        }
        // zero swaps cannot be beaten, and such attempts never draw from the
        // RNG, so every remaining trial would repeat this one exactly
        if (best.swaps == 0) break;
    }

    TranspiledCircuit out;
    out.n_hw_qubits = hw.n_qubits;
    out.gates = std::move(best.gates);
    out.initial_layout = layout;
    out.final_layout = std::move(best.phys_of);
    out.metrics.depth = best.depth;
    out.metrics.swap_count = best.swaps;
    out.metrics.cx_count = 0;
    for (const Gate& g : out.gates) out.metrics.cx_count += g.kind == GateKind::CX;
    out.metrics.total_gates = static_cast<int>(out.gates.size());
    out.metrics.trials_used = ran;
    return out;
}

namespace {

bool angle_zero_mod_2pi(double a) { return std::abs(std::remainder(a, 2 * kPi)) <= 1e-12; }

bool is_x_basis(GateKind k) { return k == GateKind::X || k == GateKind::SX || k == GateKind::RX; }

// Fixed level-2 rule set: does `moving`, considered on wire q, commute with
// the intervening gate m?
bool slides_past(const Gate& moving, int q, const Gate& m) {
    if (moving.kind == GateKind::RZ) return m.kind == GateKind::CX && m.q0 == q;
    if (is_x_basis(moving.kind)) return m.kind == GateKind::CX && m.q1 == q;
    if (moving.kind == GateKind::CX) {
        if (q == moving.q0) return m.kind == GateKind::RZ && m.q0 == q;
        return is_x_basis(m.kind) && m.q0 == q;
    }
    return false;
}

}  // namespace

LogicalCircuit optimize(const LogicalCircuit& c, int level) {
    if (level < 0 || level > 2) fail("optimize: valid levels are 0, 1 and 2");
    validate_circuit(c);
    if (level == 0) return c;
    const bool commute = level >= 2;

    std::vector<Gate> g = c.gates;
    std::vector<char> alive(g.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> chain(static_cast<std::size_t>(c.n_qubits));
        std::vector<int> pos0(g.size(), -1), pos1(g.size(), -1);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!alive[i]) continue;
            auto& c0 = chain[static_cast<std::size_t>(g[i].q0)];
            pos0[i] = static_cast<int>(c0.size());
            c0.push_back(static_cast<int>(i));
            if (gate_arity(g[i].kind) == 2) {
                auto& c1 = chain[static_cast<std::size_t>(g[i].q1)];
                pos1[i] = static_cast<int>(c1.size());
                c1.push_back(static_cast<int>(i));
            }
        }
        // next alive gate after i on wire q, skipping gates i slides past
        const auto next_on = [&](std::size_t i, int q, int from) -> int {
            const auto& ch = chain[static_cast<std::size_t>(q)];
            for (std::size_t k = static_cast<std::size_t>(from) + 1; k < ch.size(); ++k) {
                const int m = ch[k];
                if (!alive[static_cast<std::size_t>(m)]) continue;
                if (commute && slides_past(g[i], q, g[static_cast<std::size_t>(m)])) continue;
                return m;
            }
            return -1;
        };
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!alive[i]) continue;
            switch (g[i].kind) {
                case GateKind::RZ: {
                    if (angle_zero_mod_2pi(g[i].angle)) {
                        alive[i] = 0;
                        changed = true;
                        break;
                    }
                    const int j = next_on(i, g[i].q0, pos0[i]);
                    if (j >= 0 && g[static_cast<std::size_t>(j)].kind == GateKind::RZ) {
                        g[static_cast<std::size_t>(j)].angle += g[i].angle;
                        alive[i] = 0;
                        changed = true;
                    }
                    break;
                }
                case GateKind::X: {
                    const int j = next_on(i, g[i].q0, pos0[i]);
                    if (j >= 0 && g[static_cast<std::size_t>(j)].kind == GateKind::X) {
                        alive[i] = alive[static_cast<std::size_t>(j)] = 0;
                        changed = true;
                    }
                    break;
                }
                case GateKind::CX: {
                    const int j0 = next_on(i, g[i].q0, pos0[i]);
                    const int j1 = next_on(i, g[i].q1, pos1[i]);
                    if (j0 >= 0 && j0 == j1) {
                        const Gate& h = g[static_cast<std::size_t>(j0)];
                        if (h.kind == GateKind::CX && h.q0 == g[i].q0 && h.q1 == g[i].q1) {
                            alive[i] = alive[static_cast<std::size_t>(j0)] = 0;
                            changed = true;
                        }
                    }
                    break;
                }
                case GateKind::SWAP: {
                    const int j0 = next_on(i, g[i].q0, pos0[i]);
                    const int j1 = next_on(i, g[i].q1, pos1[i]);
                    if (j0 >= 0 && j0 == j1) {
                        const Gate& h = g[static_cast<std::size_t>(j0)];
                        if (h.kind == GateKind::SWAP &&
                            ((h.q0 == g[i].q0 && h.q1 == g[i].q1) ||
                             (h.q0 == g[i].q1 && h.q1 == g[i].q0))) {
                            alive[i] = alive[static_cast<std::size_t>(j0)] = 0;
                            changed = true;
                        }
                    }
                    break;
                }
                default:
                    break;
            }
        }
    }

    LogicalCircuit out{c.n_qubits, {}};
    for (std::size_t i = 0; i < g.size(); ++i)
        if (alive[i]) out.gates.push_back(g[i]);
    return out;
}

TranspiledCircuit transpile(const LogicalCircuit& c, const HardwareGraph& hw,
                            const TranspileOptions& opt) {
    validate_circuit(c);
    if (c.n_qubits > hw.n_qubits) fail("transpile: circuit larger than hardware");
    const bool swap_mode = opt.mode == CountingMode::Swap;

    LogicalCircuit pre = optimize(c, opt.opt_level);
    pre = decompose(pre, swap_mode);
    const std::vector<int> layout = initial_layout(pre, hw, opt.seed);
    TranspiledCircuit t = route(pre, hw, layout, opt.seed, opt.trials);

    LogicalCircuit post{t.n_hw_qubits, std::move(t.gates)};
    if (!swap_mode) post = decompose(post, false);  // leftover SWAPs -> 3 CX
    post = optimize(post, opt.opt_level);
    t.gates = std::move(post.gates);

    t.metrics.depth = circuit_depth({t.n_hw_qubits, t.gates});
    int cx = 0, sw = 0;
    for (const Gate& g : t.gates) {
        cx += g.kind == GateKind::CX;
        sw += g.kind == GateKind::SWAP;
    }
    t.metrics.cx_count = cx;
    t.metrics.total_gates = static_cast<int>(t.gates.size());
    if (swap_mode) t.metrics.swap_count = sw;  // depth mode keeps the routing count
    return t;
}

bool respects_coupling(const TranspiledCircuit& t, const HardwareGraph& hw) {
    if (t.n_hw_qubits != hw.n_qubits) return false;
    std::set<std::pair<int, int>> coupled(hw.edges.begin(), hw.edges.end());
    for (const Gate& g : t.gates) {
        if (gate_arity(g.kind) != 2) continue;
        const auto e = std::minmax(g.q0, g.q1);
        if (!coupled.count({e.first, e.second})) return false;
    }
    return true;
}

bool verify_equivalence(const LogicalCircuit& original, const TranspiledCircuit& t) {
    validate_circuit(original);
    if (original.n_qubits > 10) fail("verify_equivalence: originals capped at 10 qubits");
    if (static_cast<int>(t.initial_layout.size()) != original.n_qubits ||
        static_cast<int>(t.final_layout.size()) != original.n_qubits)
        fail("verify_equivalence: layout size mismatch");

    // compact the transpiled circuit onto the physical qubits it touches
    std::vector<int> compact(static_cast<std::size_t>(t.n_hw_qubits), -1);
    std::vector<int> support;
    const auto touch = [&](int p) {
        if (p < 0 || p >= t.n_hw_qubits) fail("verify_equivalence: physical index out of range");
        if (compact[static_cast<std::size_t>(p)] < 0) {
            compact[static_cast<std::size_t>(p)] = 0;
            support.push_back(p);
        }
    };
    for (const int p : t.initial_layout) touch(p);
    for (const int p : t.final_layout) touch(p);
    for (const Gate& g : t.gates) {
        touch(g.q0);
        if (gate_arity(g.kind) == 2) touch(g.q1);
    }
    std::sort(support.begin(), support.end());
    if (support.size() > 26) fail("verify_equivalence: transpiled circuit touches too many qubits");
    for (std::size_t i = 0; i < support.size(); ++i)
        compact[static_cast<std::size_t>(support[i])] = static_cast<int>(i);

    LogicalCircuit cc{static_cast<int>(support.size()), {}};
    cc.gates.reserve(t.gates.size());
    for (Gate g : t.gates) {
        g.q0 = compact[static_cast<std::size_t>(g.q0)];
        if (gate_arity(g.kind) == 2) g.q1 = compact[static_cast<std::size_t>(g.q1)];
        cc.gates.push_back(g);
    }

    const auto a = sim::Statevector::run(original, Exec::Serial);
    const auto b = sim::Statevector::run(cc, Exec::Serial);

    // the logical state, re-embedded at each qubit's final physical position
    std::vector<std::complex<double>> expected(b.amplitudes().size(), {0.0, 0.0});
    std::vector<int> bitpos(static_cast<std::size_t>(original.n_qubits));
    for (int q = 0; q < original.n_qubits; ++q)
        bitpos[static_cast<std::size_t>(q)] =
            compact[static_cast<std::size_t>(t.final_layout[static_cast<std::size_t>(q)])];
    for (std::size_t idx = 0; idx < a.amplitudes().size(); ++idx) {
        std::size_t j = 0;
        for (int q = 0; q < original.n_qubits; ++q)
            if ((idx >> q) & 1u) j |= std::size_t{1} << bitpos[static_cast<std::size_t>(q)];
        expected[j] = a.amplitudes()[idx];
    }
    return sim::states_equal_up_to_phase(expected, b.amplitudes(), 1e-9);
}

std::string write_transpiled(const TranspiledCircuit& t) {
    std::ostringstream out;
    char buf[64];
    out << "transpiled " << t.n_hw_qubits << '\n';
    out << "layout";
    for (const int p : t.initial_layout) out << ' ' << p;
    out << '\n';
    out << "final";
    for (const int p : t.final_layout) out << ' ' << p;
    out << '\n';
    for (const Gate& g : t.gates) {
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

TranspiledCircuit read_transpiled(std::istream& in) {
    TranspiledCircuit t;
    std::string tag;
    if (!(in >> tag >> t.n_hw_qubits) || tag != "transpiled")
        fail("read_transpiled: bad header");
    std::string line;
    std::getline(in, line);
    const auto read_row = [&](const char* want) {
        if (!std::getline(in, line)) fail(std::string("read_transpiled: missing ") + want);
        std::istringstream row(line);
        std::string head;
        row >> head;
        if (head != want) fail(std::string("read_transpiled: expected ") + want + " line");
        std::vector<int> vals;
        int v = 0;
        while (row >> v) vals.push_back(v);
        return vals;
    };
    t.initial_layout = read_row("layout");
    t.final_layout = read_row("final");
    if (t.initial_layout.size() != t.final_layout.size())
        fail("read_transpiled: layout and final differ in length");

    std::string name;
    while (in >> name) {
        Gate g;
        g.kind = gate_kind_from_name(name);
        if (!(in >> g.q0)) fail("read_transpiled: missing qubit for " + name);
        if (gate_arity(g.kind) == 2 && !(in >> g.q1))
            fail("read_transpiled: missing second qubit for " + name);
        if (gate_has_angle(g.kind) && !(in >> g.angle))
            fail("read_transpiled: missing angle for " + name);
        t.gates.push_back(g);
    }
    validate_circuit({t.n_hw_qubits, t.gates});
    for (const int p : t.initial_layout)
        if (p < 0 || p >= t.n_hw_qubits) fail("read_transpiled: layout index out of range");
    for (const int p : t.final_layout)
        if (p < 0 || p >= t.n_hw_qubits) fail("read_transpiled: final index out of range");

    // metrics are derived, not stored
    t.metrics.depth = circuit_depth({t.n_hw_qubits, t.gates});
    for (const Gate& g : t.gates) {
        t.metrics.cx_count += g.kind == GateKind::CX;
        t.metrics.swap_count += g.kind == GateKind::SWAP;
    }
    t.metrics.total_gates = static_cast<int>(t.gates.size());
    return t;
}

}  // namespace qdens
