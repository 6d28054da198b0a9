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

#include "chaintune/embedded_problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chaintune {

int EmbeddedProblem::total_chain_edges() const {
    int total = 0;
    for (const auto& [var, edges] : chain_edges) {
        (void)var;
        total += static_cast<int>(edges.size());
    }
    return total;
}

EmbeddedProblem embed_problem(const IsingProblem& problem, const Embedding& embedding, const HardwareGraph& graph,
                              double chain_strength) {
    if (!(chain_strength > 0)) throw std::invalid_argument("embed_problem: chain_strength must be positive");
    const ValidationReport report = validate(embedding, problem, graph);
    if (!report.ok()) throw std::invalid_argument("embed_problem: invalid embedding: " + report.to_string());

    EmbeddedProblem out;
    out.chain_strength = chain_strength;
    out.source_label = problem.label();

    // Compact index space over the used qubits, ascending hardware id.
    for (const auto& [var, chain] : embedding.chains) {
        (void)var;
        out.qubit_ids.insert(out.qubit_ids.end(), chain.begin(), chain.end());
    }
    std::sort(out.qubit_ids.begin(), out.qubit_ids.end());
    std::map<int, int> compact;
    for (std::size_t i = 0; i < out.qubit_ids.size(); ++i) compact[out.qubit_ids[i]] = static_cast<int>(i);

    out.physical = IsingProblem(static_cast<int>(out.qubit_ids.size()),
                                problem.label().empty() ? "embedded" : problem.label() + " embedded");

    for (const auto& [var, chain] : embedding.chains) {
        std::vector<int> compact_chain;
        compact_chain.reserve(chain.size());
        for (int q : chain) compact_chain.push_back(compact.at(q));
        std::sort(compact_chain.begin(), compact_chain.end());
        out.chains_compact.chains[var] = std::move(compact_chain);
    }

    // Intra-chain couplers: every hardware edge with both endpoints in the
    // chain carries -J_c.
    for (const auto& [var, chain] : embedding.chains) {
        auto& edges = out.chain_edges[var];
        for (std::size_t a = 0; a < chain.size(); ++a) {
            for (std::size_t b = a + 1; b < chain.size(); ++b) {
                if (graph.has_edge(chain[a], chain[b])) {
                    edges.emplace_back(compact.at(chain[a]), compact.at(chain[b]));
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        for (const auto& [a, b] : edges) out.physical.set_quadratic(a, b, -chain_strength);
    }

    // Logical couplers split equally over the hardware edges joining the two
    // chains. Zero couplers with no joining edge are allowed (and dropped).
    for (const auto& [pair, value] : problem.quadratic()) {
        const auto& chain_a = embedding.chains.at(pair.first);
        const auto& chain_b = embedding.chains.at(pair.second);
        std::vector<std::pair<int, int>> edges;
        for (int qa : chain_a) {
            for (int qb : chain_b) {
                if (graph.has_edge(qa, qb)) {
                    int ca = compact.at(qa), cb = compact.at(qb);
                    if (ca > cb) std::swap(ca, cb);
                    edges.emplace_back(ca, cb);
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        if (edges.empty()) {
            if (value == 0.0) continue;  // nothing to carry
            throw std::logic_error("embed_problem: validated embedding lost an edge");
        }
        const double share = value / static_cast<double>(edges.size());
        for (const auto& [a, b] : edges) out.physical.set_quadratic(a, b, share);
        out.inter_edges[pair] = std::move(edges);
    }

    // Fields split equally over the chain's qubits.
    for (const auto& [var, chain] : embedding.chains) {
        const double h = problem.linear(var);
        if (h == 0.0) continue;
        const double share = h / static_cast<double>(chain.size());
        for (int q : chain) out.physical.set_linear(compact.at(q), share);
    }

    return out;
}

double default_chain_strength(const IsingProblem& problem, bool include_zero_couplers) {
    double sum_sq = 0.0;
    std::int64_t num_couplers = 0;
    std::vector<int> deg(static_cast<std::size_t>(problem.num_vars()), 0);
    for (const auto& [pair, value] : problem.quadratic()) {
        if (!include_zero_couplers && value == 0.0) continue;
        sum_sq += value * value;
        ++num_couplers;
        ++deg[static_cast<std::size_t>(pair.first)];
        ++deg[static_cast<std::size_t>(pair.second)];
    }
    if (num_couplers == 0) throw std::invalid_argument("default_chain_strength: problem has no couplers");
    double sum_deg = 0.0;
    for (int d : deg) sum_deg += d;
    const double rms = std::sqrt(sum_sq / static_cast<double>(num_couplers));
    const double mean_degree = sum_deg / static_cast<double>(problem.num_vars());
    return 1.41 * rms * std::sqrt(mean_degree);
}

}  // namespace chaintune
