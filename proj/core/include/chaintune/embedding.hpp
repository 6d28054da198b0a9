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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chaintune/ising.hpp"
#include "chaintune/topology.hpp"

namespace chaintune {

/// A minor embedding: each logical variable owns a chain of physical qubits.
/// Chains are stored as sorted sets; intra-chain edge selection happens when
/// the physical Hamiltonian is built.
struct Embedding {
    std::map<int, std::vector<int>> chains;

    int num_chains() const { return static_cast<int>(chains.size()); }

    /// Total number of physical qubits over all chains.
    int total_qubits() const;

    /// Largest chain size; 0 for an empty embedding.
    int max_chain_size() const;

    bool operator==(const Embedding&) const = default;
};

enum class ViolationKind { overlap, disconnection, missing_edge, dangling_qubit, unmapped_variable };

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Violations are data, not errors: an empty report means a valid embedding.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

const char* violation_kind_name(ViolationKind kind);

/// Check an embedding against a problem and hardware graph. Reports, per
/// class: chains sharing a qubit (overlap), chains that do not induce a
/// connected subgraph (disconnection), nonzero logical couplers with no
/// hardware edge between the two chains (missing_edge), chain qubits outside
/// the graph (dangling_qubit), and problem variables without a nonempty chain
/// (unmapped_variable).
ValidationReport validate(const Embedding& embedding, const IsingProblem& problem, const HardwareGraph& graph);

struct EmbedResult {
    bool found = false;
    Embedding embedding;
    int tries_used = 0;
    std::string message;
};

/// Randomized greedy path-growth heuristic. Variables are placed in
/// descending logical-degree order on free qubits adjacent to already-placed
/// neighbor chains; unreachable logical edges are realized by growing the
/// chain along a shortest free path. On failure the placement order is
/// reshuffled (seed-derived) and the search restarts, up to max_tries.
/// Failure to embed is a result, not an exception.
EmbedResult find_embedding(const IsingProblem& problem, const HardwareGraph& graph, std::uint64_t seed,
                           int max_tries = 32);

/// JSON format: { "chains": [[var, [q0, q1, ...]], ...] }.
void save_embedding(const Embedding& embedding, const std::filesystem::path& path);

/// Load and re-validate the graph-dependent invariants (qubit range,
/// disjointness, chain connectivity) against the supplied graph; throws
/// std::runtime_error on malformed input or violations.
Embedding load_embedding(const std::filesystem::path& path, const HardwareGraph& graph);

std::string embedding_to_json(const Embedding& embedding);
Embedding embedding_from_json(const std::string& text);

}  // namespace chaintune
