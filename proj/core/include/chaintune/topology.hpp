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

#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace chaintune {

enum class GraphKind { chimera, pegasus, custom };

/// Physical qubit connectivity. Immutable after construction; the edge set is
/// kept sorted with a < b and per-qubit neighbor lists are prebuilt.
class HardwareGraph {
  public:
    /// Throws std::invalid_argument on self-loops, duplicate edges, or
    /// endpoints outside [0, num_qubits).
    HardwareGraph(int num_qubits, std::vector<std::pair<int, int>> edges, GraphKind kind = GraphKind::custom,
                  std::string kind_label = "custom");

    int num_qubits() const { return num_qubits_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t num_edges() const { return edges_.size(); }

    GraphKind kind() const { return kind_; }
    const std::string& kind_label() const { return kind_label_; }

    const std::vector<int>& neighbors(int qubit) const;
    int degree(int qubit) const;
    int max_degree() const;
    bool has_edge(int a, int b) const;

    /// Lattice coordinates for generated graphs, one entry per qubit:
    /// chimera (row, col, u, k), pegasus (u, w, k, z). Empty for custom graphs.
    const std::vector<std::array<int, 4>>& coordinates() const { return coordinates_; }
    void set_coordinates(std::vector<std::array<int, 4>> coords);

  private:
    int num_qubits_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::array<int, 4>> coordinates_;
    GraphKind kind_ = GraphKind::custom;
    std::string kind_label_;
};

/// Chimera C_m: an m x m grid of K_{4,4} cells. 8m^2 qubits and
/// 16m^2 + 8m(m-1) edges.
HardwareGraph gen_chimera(int m);

/// Ideal (defect-free) Pegasus P_m with the standard shift offsets:
/// 24m(m-1) qubits, maximum degree 15. Qubits are indexed by (u, w, k, z)
/// with u in {0,1}, w in 0..m-1, k in 0..11, z in 0..m-2.
HardwareGraph gen_pegasus(int m);

/// Load a custom graph from the JSON edge-list format
///   { "num_qubits": int, "edges": [[a, b], ...], "kind": string }.
/// Throws std::runtime_error with context on malformed input; graph
/// invariants are enforced by the HardwareGraph constructor.
HardwareGraph load_graph(const std::filesystem::path& path);

/// Write the JSON edge-list format above.
void save_graph(const HardwareGraph& graph, const std::filesystem::path& path);

}  // namespace chaintune
