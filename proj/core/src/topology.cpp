// Copyright 2026 Chaintune Contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "chaintune/topology.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json_io.hpp"

namespace chaintune {

HardwareGraph::HardwareGraph(int num_qubits, std::vector<std::pair<int, int>> edges, GraphKind kind,
                             std::string kind_label)
        : num_qubits_(num_qubits), edges_(std::move(edges)), kind_(kind), kind_label_(std::move(kind_label)) {
    if (num_qubits < 0) throw std::invalid_argument("HardwareGraph: negative num_qubits");
    for (auto& [a, b] : edges_) {
        if (a == b) throw std::invalid_argument("HardwareGraph: self-loop on qubit " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= num_qubits_)
            throw std::invalid_argument("HardwareGraph: edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                        ") out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("HardwareGraph: duplicate edge (" + std::to_string(dup->first) + ", " +
                                    std::to_string(dup->second) + ")");
    adjacency_.assign(static_cast<std::size_t>(num_qubits_), {});
    for (const auto& [a, b] : edges_) {
        adjacency_[static_cast<std::size_t>(a)].push_back(b);
        adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& HardwareGraph::neighbors(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) throw std::invalid_argument("neighbors: qubit out of range");
    return adjacency_[static_cast<std::size_t>(qubit)];
}

int HardwareGraph::degree(int qubit) const {
    return static_cast<int>(neighbors(qubit).size());
}

int HardwareGraph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

bool HardwareGraph::has_edge(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair<int, int>{a, b});
}

void HardwareGraph::set_coordinates(std::vector<std::array<int, 4>> coords) {
    if (!coords.empty() && coords.size() != static_cast<std::size_t>(num_qubits_))
        throw std::invalid_argument("set_coordinates: one coordinate per qubit required");
    coordinates_ = std::move(coords);
}

HardwareGraph gen_chimera(int m) {
    if (m < 1) throw std::invalid_argument("gen_chimera: m must be at least 1");
    // Cell (i, j) holds qubits 8*(i*m + j) + u*4 + k, u = 0 left / 1 right.
    auto qubit = [m](int i, int j, int u, int k) { return 8 * (i * m + j) + 4 * u + k; };
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 4>> coords(static_cast<std::size_t>(8 * m * m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int u = 0; u < 2; ++u) {
                for (int k = 0; k < 4; ++k) {
                    coords[static_cast<std::size_t>(qubit(i, j, u, k))] = {i, j, u, k};
                }
            }
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    edges.emplace_back(qubit(i, j, 0, a), qubit(i, j, 1, b));
                }
            }
            for (int k = 0; k < 4; ++k) {
                if (i + 1 < m) edges.emplace_back(qubit(i, j, 0, k), qubit(i + 1, j, 0, k));
                if (j + 1 < m) edges.emplace_back(qubit(i, j, 1, k), qubit(i, j + 1, 1, k));
            }
        }
    }
    HardwareGraph graph(8 * m * m, std::move(edges), GraphKind::chimera, "chimera(" + std::to_string(m) + ")");
    graph.set_coordinates(std::move(coords));
    return graph;
}

namespace {

// Standard Pegasus shift offsets (offsets_index 0).
constexpr int kVerticalOffsets[12] = {2, 2, 2, 2, 10, 10, 10, 10, 6, 6, 6, 6};
constexpr int kHorizontalOffsets[12] = {6, 6, 6, 6, 2, 2, 2, 2, 10, 10, 10, 10};

}  // namespace

HardwareGraph gen_pegasus(int m) {
    if (m < 2) throw std::invalid_argument("gen_pegasus: m must be at least 2");
    const int m1 = m - 1;
    // (u, w, k, z) -> linear index, the usual coordinate flattening.
    auto qubit = [m, m1](int u, int w, int k, int z) { return u * 12 * m * m1 + w * 12 * m1 + k * m1 + z; };
    const int num_qubits = 24 * m * m1;
    std::vector<std::array<int, 4>> coords(static_cast<std::size_t>(num_qubits));
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < m; ++w)
            for (int k = 0; k < 12; ++k)
                for (int z = 0; z < m1; ++z) coords[static_cast<std::size_t>(qubit(u, w, k, z))] = {u, w, k, z};

    std::vector<std::pair<int, int>> edges;
    // External couplers: consecutive segments of the same line.
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < m; ++w)
            for (int k = 0; k < 12; ++k)
                for (int z = 0; z + 1 < m1; ++z) edges.emplace_back(qubit(u, w, k, z), qubit(u, w, k, z + 1));
    // Odd couplers: side-by-side parallel pairs (2j, 2j+1).
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < m; ++w)
            for (int k = 0; k < 12; k += 2)
                for (int z = 0; z < m1; ++z) edges.emplace_back(qubit(u, w, k, z), qubit(u, w, k + 1, z));
    // Internal couplers: a vertical segment (column 12w + k, rows
    // [12z + voff_k, 12z + voff_k + 11]) crosses a horizontal segment
    // (row 12w' + k', cols [12z' + hoff_k' .. +11]). Each crossing is an
    // edge; for each (vertical qubit, k') there is at most one such (w', z').
    for (int w = 0; w < m; ++w) {
        for (int k = 0; k < 12; ++k) {
            for (int z = 0; z < m1; ++z) {
                for (int kp = 0; kp < 12; ++kp) {
                    const int wp = (kp >= kVerticalOffsets[k]) ? z : z + 1;
                    const int zp = (k >= kHorizontalOffsets[kp]) ? w : w - 1;
                    if (wp < 0 || wp >= m || zp < 0 || zp >= m1) continue;
                    edges.emplace_back(qubit(0, w, k, z), qubit(1, wp, kp, zp));
                }
            }
        }
    }
    HardwareGraph graph(num_qubits, std::move(edges), GraphKind::pegasus, "pegasus(" + std::to_string(m) + ")");
    graph.set_coordinates(std::move(coords));
    return graph;
}

HardwareGraph load_graph(const std::filesystem::path& path) {
    const nlohmann::json doc = detail::parse_json_file(path);
    try {
        const int num_qubits = doc.at("num_qubits").get<int>();
        std::vector<std::pair<int, int>> edges;
        const auto& edge_list = doc.at("edges");
        if (!edge_list.is_array()) throw std::runtime_error("\"edges\" must be an array");
        edges.reserve(edge_list.size());
        for (std::size_t row = 0; row < edge_list.size(); ++row) {
            const auto& e = edge_list[row];
            if (!e.is_array() || e.size() != 2)
                throw std::runtime_error("edge entry " + std::to_string(row) + " is not a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::string kind_label = doc.value("kind", std::string("custom"));
        GraphKind kind = GraphKind::custom;
        if (kind_label.rfind("chimera", 0) == 0) kind = GraphKind::chimera;
        else if (kind_label.rfind("pegasus", 0) == 0) kind = GraphKind::pegasus;
        return HardwareGraph(num_qubits, std::move(edges), kind, std::move(kind_label));
    } catch (const std::exception& exc) {
        throw std::runtime_error(path.string() + ": " + exc.what());
    }
}

void save_graph(const HardwareGraph& graph, const std::filesystem::path& path) {
    nlohmann::ordered_json doc;
    doc["num_qubits"] = graph.num_qubits();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
    doc["kind"] = graph.kind_label();
    detail::atomic_write_file(path, doc.dump());
}

}  // namespace chaintune
