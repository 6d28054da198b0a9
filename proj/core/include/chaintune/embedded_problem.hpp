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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chaintune/embedding.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/topology.hpp"

namespace chaintune {

/// The physical Hamiltonian H = H_problem + H_chain for one embedding and one
/// chain strength.
///
/// The physical IsingProblem is indexed over the qubits the embedding
/// actually uses, compacted to 0..num_used-1 in ascending hardware-qubit
/// order (qubit_ids maps back). Unused qubits carry no terms and would only
/// pad the state space, which matters because exact enumeration of the
/// physical spectrum is capped at 28 spins.
struct EmbeddedProblem {
    IsingProblem physical;
    std::vector<int> qubit_ids;  // compact index -> hardware qubit id
    Embedding chains_compact;    // chains rewritten into compact indices
    std::map<int, std::vector<std::pair<int, int>>> chain_edges;             // var -> intra-chain edges
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> inter_edges;  // logical pair -> edges
    double chain_strength = 0.0;
    std::string source_label;

    int num_used_qubits() const { return static_cast<int>(qubit_ids.size()); }
    int total_chain_edges() const;
};

/// Build the physical Hamiltonian. Every hardware edge inside a chain gets
/// coupler -chain_strength; each logical coupler is split equally over all
/// hardware edges between the two chains; each logical field is split equally
/// over the chain's qubits. Throws std::invalid_argument carrying the
/// validation report when the embedding is invalid, and when chain_strength
/// is not positive.
EmbeddedProblem embed_problem(const IsingProblem& problem, const Embedding& embedding, const HardwareGraph& graph,
                              double chain_strength);

/// Default chain strength: 1.41 * rms(couplers) * sqrt(mean logical degree).
/// Explicit zero couplers count toward both the coupler number M_c and the
/// degrees unless include_zero_couplers is false. Throws std::invalid_argument
/// when the problem has no (counted) couplers.
double default_chain_strength(const IsingProblem& problem, bool include_zero_couplers = true);

}  // namespace chaintune
