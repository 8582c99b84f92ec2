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

#include "qdens/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qdens/rng.hpp"

namespace qdens {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check_graph(const HardwareGraph& g) {
    if (g.n_qubits < 2) fail("hardware graph: need at least 2 qubits");
    for (const auto& [u, v] : g.edges)
        if (u < 0 || v < 0 || u >= g.n_qubits || v >= g.n_qubits || u >= v)
            fail("hardware graph: edge list not canonical");
}
}  // namespace

double connectivity_density(const HardwareGraph& g) {
    check_graph(g);
    const double max_edges = static_cast<double>(g.n_qubits) * (g.n_qubits - 1) / 2.0;
    return static_cast<double>(g.edges.size()) / max_edges;
}

double mean_degree(const HardwareGraph& g) {
    check_graph(g);
    return 2.0 * static_cast<double>(g.edges.size()) / static_cast<double>(g.n_qubits);
}

std::vector<std::vector<int>> adjacency_lists(const HardwareGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n_qubits));
    for (const auto& [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

bool is_connected(const HardwareGraph& g) {
    check_graph(g);
    const auto adj = adjacency_lists(g);
    std::vector<char> seen(static_cast<std::size_t>(g.n_qubits), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (const int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                queue.push_back(v);
            }
    }
    return reached == g.n_qubits;
}

std::vector<std::vector<std::uint16_t>> all_pairs_distances(const HardwareGraph& g) {
    const auto adj = adjacency_lists(g);
    const auto n = static_cast<std::size_t>(g.n_qubits);
    constexpr std::uint16_t kUnreached = 0xffff;
    std::vector<std::vector<std::uint16_t>> dist(n, std::vector<std::uint16_t>(n, kUnreached));
    std::vector<int> queue;
    queue.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        auto& row = dist[s];
        row[s] = 0;
        queue.clear();
        queue.push_back(static_cast<int>(s));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const std::uint16_t du = row[static_cast<std::size_t>(u)];
            for (const int v : adj[static_cast<std::size_t>(u)])
                if (row[static_cast<std::size_t>(v)] == kUnreached) {
                    row[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(du + 1);
                    queue.push_back(v);
                }
        }
    }
    return dist;
}

HardwareGraph heavy_hex_extended(const HeavyHexSpec& spec) {
    const int r = spec.rows;
    const int c = spec.cols;
    if (r < 1 || c < 1) fail("heavy_hex_extended: rows and cols must be positive");

    const int width = 4 * c + 3;  // interior line width in column units
    // Published [6,4] device calibration: that variant ships 18 qubits
    // (one boundary line) short of the uniform lattice. See the header.
    const bool drop_bottom = (r == 6 && c == 4);

    // Column span of qubit line i. Boundary lines lose one end position;
    // the bottom line keeps whichever side its bridge layer needs.
    const auto line_span = [&](int i) -> std::pair<int, int> {
        if (i == 0) return {0, width - 2};
        if (i < r) return {0, width - 1};
        return (r % 2 == 0) ? std::pair<int, int>{1, width - 1}
                            : std::pair<int, int>{0, width - 2};
    };

    // Qubits are numbered line by line, each bridge layer interleaved
    // after the line above it, mirroring the base device's numbering.
    std::vector<int> line_base(static_cast<std::size_t>(r) + 1, -1);
    std::vector<int> layer_base(static_cast<std::size_t>(r), -1);
    std::vector<std::vector<int>> layer_cols(static_cast<std::size_t>(r));
    int next = 0;
    for (int i = 0; i <= r; ++i) {
        if (drop_bottom && i == r) break;
        const auto [lo, hi] = line_span(i);
        line_base[static_cast<std::size_t>(i)] = next;
        next += hi - lo + 1;
        if (i < r) {
            layer_base[static_cast<std::size_t>(i)] = next;
            const int start = (i % 2 == 0) ? 0 : 2;
            for (int x = start; x <= start + 4 * c; x += 4)
                layer_cols[static_cast<std::size_t>(i)].push_back(x);
            next += static_cast<int>(layer_cols[static_cast<std::size_t>(i)].size());
        }
    }

    const auto qubit_at = [&](int line, int col) {
        const auto [lo, hi] = line_span(line);
        if (col < lo || col > hi) fail("heavy_hex_extended: internal geometry error");
        return line_base[static_cast<std::size_t>(line)] + (col - lo);
    };

    HardwareGraph g;
    g.n_qubits = next;
    for (int i = 0; i <= r; ++i) {
        if (drop_bottom && i == r) break;
        const auto [lo, hi] = line_span(i);
        for (int x = lo; x < hi; ++x) g.edges.emplace_back(qubit_at(i, x), qubit_at(i, x + 1));
    }
    for (int i = 0; i < r; ++i) {
        const auto& cols = layer_cols[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const int b = layer_base[static_cast<std::size_t>(i)] + static_cast<int>(k);
            g.edges.emplace_back(std::min(b, qubit_at(i, cols[k])), std::max(b, qubit_at(i, cols[k])));
            if (!(drop_bottom && i == r - 1))
                g.edges.emplace_back(std::min(b, qubit_at(i + 1, cols[k])),
                                     std::max(b, qubit_at(i + 1, cols[k])));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

HardwareGraph augment_to_density(const HardwareGraph& g, double target, std::uint64_t seed) {
    check_graph(g);
    if (!(target > 0.0) || target > 1.0) fail("augment_to_density: target must be in (0, 1]");
    const auto n = static_cast<std::size_t>(g.n_qubits);
    const auto max_edges = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;
    const auto target_edges = std::llround(target * static_cast<double>(max_edges));
    const auto current = static_cast<std::int64_t>(g.edges.size());
    if (target_edges < current)
        fail("augment_to_density: target density below the current density");
    if (target_edges == current) return g;

    std::vector<char> present(n * n, 0);
    for (const auto& [u, v] : g.edges)
        present[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;

    std::vector<std::pair<int, int>> absent;
    absent.reserve(static_cast<std::size_t>(max_edges - current));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!present[u * n + v]) absent.emplace_back(static_cast<int>(u), static_cast<int>(v));

    const auto k = static_cast<std::size_t>(target_edges - current);
    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.pick_index(absent.size() - i);
        std::swap(absent[i], absent[j]);
    }

    HardwareGraph out;
    out.n_qubits = g.n_qubits;
    out.edges = g.edges;
    out.edges.insert(out.edges.end(), absent.begin(), absent.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::string write_coupling(const HardwareGraph& g) {
    check_graph(g);
    std::ostringstream out;
    out << g.n_qubits << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

HardwareGraph read_coupling(std::istream& in) {
    HardwareGraph g;
    if (!(in >> g.n_qubits)) fail("read_coupling: missing qubit count");
    int u = 0, v = 0;
    while (in >> u >> v) g.edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    check_graph(g);
    return g;
}

HardwareGraph read_coupling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coupling file: " + path);
    return read_coupling(in);
}

}  // namespace qdens
