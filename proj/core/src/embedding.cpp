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

#include "chaintune/embedding.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chaintune/hashing.hpp"
#include "json_io.hpp"

namespace chaintune {

int Embedding::total_qubits() const {
    int total = 0;
    for (const auto& [var, chain] : chains) {
        (void)var;
        total += static_cast<int>(chain.size());
    }
    return total;
}

int Embedding::max_chain_size() const {
    int best = 0;
    for (const auto& [var, chain] : chains) {
        (void)var;
        best = std::max(best, static_cast<int>(chain.size()));
    }
    return best;
}

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::overlap: return "overlap";
        case ViolationKind::disconnection: return "disconnection";
        case ViolationKind::missing_edge: return "missing_edge";
        case ViolationKind::dangling_qubit: return "dangling_qubit";
        case ViolationKind::unmapped_variable: return "unmapped_variable";
    }
    return "unknown";
}

std::string ValidationReport::to_string() const {
    if (ok()) return "valid";
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) out << "; ";
        out << violation_kind_name(violations[i].kind) << ": " << violations[i].detail;
    }
    return out.str();
}

namespace {

bool chain_connected(const std::vector<int>& chain, const HardwareGraph& graph) {
    if (chain.empty()) return false;
    if (chain.size() == 1) return true;
    std::set<int> members(chain.begin(), chain.end());
    std::set<int> seen{chain.front()};
    std::deque<int> frontier{chain.front()};
    while (!frontier.empty()) {
        const int q = frontier.front();
        frontier.pop_front();
        for (int nbr : graph.neighbors(q)) {
            if (members.count(nbr) && !seen.count(nbr)) {
                seen.insert(nbr);
                frontier.push_back(nbr);
            }
        }
    }
    return seen.size() == members.size();
}

bool chains_coupled(const std::vector<int>& a, const std::vector<int>& b, const HardwareGraph& graph) {
    for (int qa : a) {
        for (int qb : b) {
            if (graph.has_edge(qa, qb)) return true;
        }
    }
    return false;
}

}  // namespace

ValidationReport validate(const Embedding& embedding, const IsingProblem& problem, const HardwareGraph& graph) {
    ValidationReport report;
    auto add = [&report](ViolationKind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
    };

    std::map<int, int> owner;  // qubit -> first owning variable
    for (const auto& [var, chain] : embedding.chains) {
        if (chain.empty()) {
            add(ViolationKind::unmapped_variable, "variable " + std::to_string(var) + " has an empty chain");
            continue;
        }
        bool in_range = true;
        for (int q : chain) {
            if (q < 0 || q >= graph.num_qubits()) {
                add(ViolationKind::dangling_qubit,
                    "variable " + std::to_string(var) + " uses qubit " + std::to_string(q) +
                            " outside the graph (num_qubits=" + std::to_string(graph.num_qubits()) + ")");
                in_range = false;
                continue;
            }
            auto [it, inserted] = owner.emplace(q, var);
            if (!inserted) {
                add(ViolationKind::overlap, "qubit " + std::to_string(q) + " shared by variables " +
                                                    std::to_string(it->second) + " and " + std::to_string(var));
            }
        }
        if (in_range && !chain_connected(chain, graph)) {
            add(ViolationKind::disconnection,
                "chain of variable " + std::to_string(var) + " is not connected in the hardware graph");
        }
    }

    for (int v = 0; v < problem.num_vars(); ++v) {
        auto it = embedding.chains.find(v);
        if (it == embedding.chains.end()) {
            add(ViolationKind::unmapped_variable, "variable " + std::to_string(v) + " has no chain");
        }
    }

    for (const auto& [pair, value] : problem.quadratic()) {
        if (value == 0.0) continue;
        auto ai = embedding.chains.find(pair.first);
        auto bi = embedding.chains.find(pair.second);
        if (ai == embedding.chains.end() || bi == embedding.chains.end()) continue;
        bool ranges_ok = true;
        for (int q : ai->second)
            if (q < 0 || q >= graph.num_qubits()) ranges_ok = false;
        for (int q : bi->second)
            if (q < 0 || q >= graph.num_qubits()) ranges_ok = false;
        if (!ranges_ok) continue;
        if (!chains_coupled(ai->second, bi->second, graph)) {
            add(ViolationKind::missing_edge, "no hardware edge between chains of variables " +
                                                     std::to_string(pair.first) + " and " +
                                                     std::to_string(pair.second));
        }
    }
    return report;
}

namespace {

// Logical adjacency over nonzero couplers only; zero couplers carry no
// constraint on the embedding.
std::vector<std::vector<int>> logical_adjacency(const IsingProblem& problem) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(problem.num_vars()));
    for (const auto& [pair, value] : problem.quadratic()) {
        if (value == 0.0) continue;
        adj[static_cast<std::size_t>(pair.first)].push_back(pair.second);
        adj[static_cast<std::size_t>(pair.second)].push_back(pair.first);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

struct TryState {
    const HardwareGraph& graph;
    std::vector<int> owner;       // qubit -> owning variable, -1 if free
    std::vector<int> free_degree; // number of free neighbors per qubit

    explicit TryState(const HardwareGraph& g)
            : graph(g), owner(static_cast<std::size_t>(g.num_qubits()), -1),
              free_degree(static_cast<std::size_t>(g.num_qubits()), 0) {
        for (int q = 0; q < g.num_qubits(); ++q)
            free_degree[static_cast<std::size_t>(q)] = g.degree(q);
    }

    bool is_free(int q) const { return owner[static_cast<std::size_t>(q)] < 0; }

    void claim(int q, int var) {
        owner[static_cast<std::size_t>(q)] = var;
        for (int nbr : graph.neighbors(q)) --free_degree[static_cast<std::size_t>(nbr)];
    }
};

// Deterministic pick among the best-scoring candidates: ties are broken by a
// single bounded rng draw so retries explore different placements.
template <typename Score>
int pick_best(const std::vector<int>& candidates, Score score, std::mt19937_64& rng) {
    std::vector<int> best;
    auto best_score = score(candidates.front());
    best.push_back(candidates.front());
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        auto s = score(candidates[i]);
        if (s > best_score) {
            best_score = s;
            best.assign(1, candidates[i]);
        } else if (s == best_score) {
            best.push_back(candidates[i]);
        }
    }
    return best[rng() % best.size()];
}

// Grow `chain` through free qubits until it gains a hardware edge to
// `target`; returns false when no such path exists.
bool grow_to_chain(std::vector<int>& chain, const std::vector<int>& target, TryState& state, int var) {
    const HardwareGraph& graph = state.graph;
    std::set<int> target_set(target.begin(), target.end());
    std::vector<int> parent(static_cast<std::size_t>(graph.num_qubits()), -2);
    std::deque<int> frontier;
    for (int q : chain) {
        parent[static_cast<std::size_t>(q)] = -1;
        frontier.push_back(q);
    }
    int reached = -1;
    while (!frontier.empty() && reached < 0) {
        const int q = frontier.front();
        frontier.pop_front();
        for (int nbr : graph.neighbors(q)) {
            if (parent[static_cast<std::size_t>(nbr)] != -2) continue;
            if (!state.is_free(nbr)) continue;
            parent[static_cast<std::size_t>(nbr)] = q;
            bool touches_target = false;
            for (int t : graph.neighbors(nbr)) {
                if (target_set.count(t)) {
                    touches_target = true;
                    break;
                }
            }
            if (touches_target) {
                reached = nbr;
                break;
            }
            frontier.push_back(nbr);
        }
    }
    if (reached < 0) return false;
    // Walk back to the chain, claiming the free path qubits.
    std::vector<int> path;
    for (int q = reached; parent[static_cast<std::size_t>(q)] >= 0; q = parent[static_cast<std::size_t>(q)])
        path.push_back(q);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        state.claim(*it, var);
        chain.push_back(*it);
    }
    return true;
}

// Drop chain qubits that are not needed for connectivity or for any carried
// logical coupler; path growth can leave a redundant start or branch qubit.
void prune_chains(Embedding& embedding, const std::vector<std::vector<int>>& adj, const HardwareGraph& graph) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [var, chain] : embedding.chains) {
            if (chain.size() <= 1) continue;
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                const int q = *it;
                std::vector<int> reduced;
                reduced.reserve(chain.size() - 1);
                for (int other : chain)
                    if (other != q) reduced.push_back(other);
                if (!chain_connected(reduced, graph)) continue;
                bool carries = false;
                for (int u : adj[static_cast<std::size_t>(var)]) {
                    if (!chains_coupled(reduced, embedding.chains.at(u), graph)) {
                        carries = true;
                        break;
                    }
                }
                if (carries) continue;
                chain = std::move(reduced);
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

EmbedResult find_embedding(const IsingProblem& problem, const HardwareGraph& graph, std::uint64_t seed,
                           int max_tries) {
    if (max_tries < 1) throw std::invalid_argument("find_embedding: max_tries must be at least 1");
    if (problem.num_vars() > graph.num_qubits()) {
        return {false, {}, 0,
                "graph has " + std::to_string(graph.num_qubits()) + " qubits but the problem needs at least " +
                        std::to_string(problem.num_vars())};
    }

    const auto adj = logical_adjacency(problem);
    std::vector<int> base_order(static_cast<std::size_t>(problem.num_vars()));
    for (int v = 0; v < problem.num_vars(); ++v) base_order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(base_order.begin(), base_order.end(), [&adj](int a, int b) {
        return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
    });

    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<int> order = base_order;
        if (attempt > 0) {
            // Keep the degree heuristic but reshuffle within equal-degree
            // groups, a seed-derived permutation per restart.
            std::vector<std::uint64_t> key(order.size());
            for (auto& k : key) k = rng();
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                const auto da = adj[static_cast<std::size_t>(a)].size();
                const auto db = adj[static_cast<std::size_t>(b)].size();
                if (da != db) return da > db;
                return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
            });
        }

        TryState state(graph);
        std::map<int, std::vector<int>> chains;
        bool failed = false;
        for (int v : order) {
            std::vector<int> placed_neighbors;
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (chains.count(u)) placed_neighbors.push_back(u);
            }

            std::vector<int> start_candidates;
            if (placed_neighbors.empty()) {
                for (int q = 0; q < graph.num_qubits(); ++q) {
                    if (state.is_free(q)) start_candidates.push_back(q);
                }
                if (start_candidates.empty()) {
                    failed = true;
                    break;
                }
                const int q = pick_best(
                        start_candidates,
                        [&state](int c) { return state.free_degree[static_cast<std::size_t>(c)]; }, rng);
                state.claim(q, v);
                chains[v] = {q};
                continue;
            }

            // Free qubits adjacent to at least one placed neighbor chain.
            std::set<int> adjacent_free;
            for (int u : placed_neighbors) {
                for (int cq : chains[u]) {
                    for (int nbr : graph.neighbors(cq)) {
                        if (state.is_free(nbr)) adjacent_free.insert(nbr);
                    }
                }
            }
            if (adjacent_free.empty()) {
                failed = true;
                break;
            }
            start_candidates.assign(adjacent_free.begin(), adjacent_free.end());
            auto coverage = [&](int q) {
                int covered = 0;
                for (int u : placed_neighbors) {
                    for (int cq : chains[u]) {
                        if (graph.has_edge(q, cq)) {
                            ++covered;
                            break;
                        }
                    }
                }
                return std::pair<int, int>(covered, state.free_degree[static_cast<std::size_t>(q)]);
            };
            const int start = pick_best(start_candidates, coverage, rng);
            state.claim(start, v);
            std::vector<int> chain{start};

            for (int u : placed_neighbors) {
                if (chains_coupled(chain, chains[u], graph)) continue;
                if (!grow_to_chain(chain, chains[u], state, v)) {
                    failed = true;
                    break;
                }
            }
            if (failed) break;
            chains[v] = std::move(chain);
        }
        if (failed) continue;

        Embedding embedding;
        for (auto& [var, chain] : chains) {
            std::sort(chain.begin(), chain.end());
            embedding.chains[var] = chain;
        }
        prune_chains(embedding, adj, graph);
        if (validate(embedding, problem, graph).ok()) {
            return {true, std::move(embedding), attempt + 1, ""};
        }
    }
    return {false, {}, max_tries,
            "no embedding found in " + std::to_string(max_tries) + " tries (seed " + std::to_string(seed) + ")"};
}

std::string embedding_to_json(const Embedding& embedding) {
    nlohmann::ordered_json doc;
    auto& chains = doc["chains"] = nlohmann::ordered_json::array();
    for (const auto& [var, chain] : embedding.chains) {
        chains.push_back({var, chain});
    }
    return doc.dump();
}

Embedding embedding_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    Embedding embedding;
    const auto& chains = doc.at("chains");
    if (!chains.is_array()) throw std::runtime_error("\"chains\" must be an array");
    for (std::size_t row = 0; row < chains.size(); ++row) {
        const auto& entry = chains[row];
        if (!entry.is_array() || entry.size() != 2)
            throw std::runtime_error("chain entry " + std::to_string(row) + " is not [var, [qubits]]");
        const int var = entry[0].get<int>();
        if (embedding.chains.count(var))
            throw std::runtime_error("duplicate chain for variable " + std::to_string(var));
        std::vector<int> chain = entry[1].get<std::vector<int>>();
        std::sort(chain.begin(), chain.end());
        if (std::adjacent_find(chain.begin(), chain.end()) != chain.end())
            throw std::runtime_error("chain of variable " + std::to_string(var) + " repeats a qubit");
        embedding.chains[var] = std::move(chain);
    }
    return embedding;
}

void save_embedding(const Embedding& embedding, const std::filesystem::path& path) {
    detail::atomic_write_file(path, embedding_to_json(embedding));
}

Embedding load_embedding(const std::filesystem::path& path, const HardwareGraph& graph) {
    Embedding embedding;
    try {
        embedding = embedding_from_json(detail::read_file(path));
    } catch (const std::exception& exc) {
        throw std::runtime_error(path.string() + ": " + exc.what());
    }
    // Graph-dependent invariants; problem-dependent checks happen later in
    // validate() with the actual problem.
    std::set<int> used;
    for (const auto& [var, chain] : embedding.chains) {
        if (chain.empty())
            throw std::runtime_error(path.string() + ": variable " + std::to_string(var) + " has an empty chain");
        for (int q : chain) {
            if (q < 0 || q >= graph.num_qubits())
                throw std::runtime_error(path.string() + ": qubit " + std::to_string(q) + " of variable " +
                                         std::to_string(var) + " is outside the graph");
            if (!used.insert(q).second)
                throw std::runtime_error(path.string() + ": qubit " + std::to_string(q) + " appears in two chains");
        }
        if (!chain_connected(chain, graph))
            throw std::runtime_error(path.string() + ": chain of variable " + std::to_string(var) +
                                     " is not connected");
    }
    return embedding;
}

}  // namespace chaintune
