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

#include <cmath>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "chaintune/embedded_problem.hpp"
#include "test_support.hpp"

namespace chaintune {

TEST_CASE("identity embedding reproduces the logical problem", "[parameterize]") {
    IsingProblem problem(3, "triangle");
    problem.set_quadratic(0, 1, -1.0);
    problem.set_quadratic(0, 2, 0.5);
    problem.set_quadratic(1, 2, -0.25);
    problem.set_linear(1, 0.125);
    const HardwareGraph graph(3, {{0, 1}, {0, 2}, {1, 2}});
    Embedding embedding;
    for (int v = 0; v < 3; ++v) embedding.chains[v] = {v};

    const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, 2.0);
    CHECK(embedded.physical.quadratic() == problem.quadratic());
    CHECK(embedded.physical.linear_terms() == problem.linear_terms());
    CHECK(embedded.total_chain_edges() == 0);
    CHECK(embedded.qubit_ids == std::vector<int>{0, 1, 2});
}

TEST_CASE("logical couplers split equally over parallel edges", "[parameterize]") {
    IsingProblem problem(2, "pair");
    problem.set_quadratic(0, 1, -1.0);
    // Chains {0,1} and {2,3}; both (1,2) and (0,3) join them.
    const HardwareGraph graph(4, {{0, 1}, {2, 3}, {1, 2}, {0, 3}});
    Embedding embedding;
    embedding.chains[0] = {0, 1};
    embedding.chains[1] = {2, 3};

    const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, 1.68);
    const auto& quadratic = embedded.physical.quadratic();
    CHECK(quadratic.at({1, 2}) == -0.5);
    CHECK(quadratic.at({0, 3}) == -0.5);
    // One intra-chain edge per chain at -J_c.
    CHECK(quadratic.at({0, 1}) == -1.68);
    CHECK(quadratic.at({2, 3}) == -1.68);
    CHECK(embedded.inter_edges.at({0, 1}).size() == 2);
    CHECK(embedded.total_chain_edges() == 2);
}

TEST_CASE("fields split equally over chain qubits", "[parameterize]") {
    IsingProblem problem(2, "fields");
    problem.set_quadratic(0, 1, -1.0);
    problem.set_linear(0, 0.9);
    problem.set_linear(1, -0.3);
    const HardwareGraph graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Embedding embedding;
    embedding.chains[0] = {0, 1, 2};
    embedding.chains[1] = {3};

    const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, 1.0);
    const auto& h = embedded.physical.linear_terms();
    CHECK_THAT(h[0] + h[1] + h[2], Catch::Matchers::WithinAbs(0.9, 1e-12));
    CHECK(h[0] == h[1]);
    CHECK(h[1] == h[2]);
    CHECK(h[3] == -0.3);
}

TEST_CASE("split conservation on a heuristic embedding", "[parameterize]") {
    const IsingProblem problem = testing::random_problem(5, 42, 0.8, true);
    const HardwareGraph graph = gen_chimera(2);
    const EmbedResult found = find_embedding(problem, graph, 5, 32);
    REQUIRE(found.found);
    const EmbeddedProblem embedded = embed_problem(problem, found.embedding, graph, 2.5);

    // Summing the distributed physical couplers recovers each logical value.
    for (const auto& [pair, value] : problem.quadratic()) {
        const auto it = embedded.inter_edges.find(pair);
        REQUIRE(it != embedded.inter_edges.end());
        double total = 0.0;
        for (const auto& edge : it->second) total += embedded.physical.quadratic().at(edge);
        CHECK_THAT(total, Catch::Matchers::WithinAbs(value, 1e-12));
    }
    // And the distributed fields recover each logical field.
    for (int v = 0; v < problem.num_vars(); ++v) {
        double total = 0.0;
        for (int q : embedded.chains_compact.chains.at(v)) total += embedded.physical.linear(q);
        CHECK_THAT(total, Catch::Matchers::WithinAbs(problem.linear(v), 1e-12));
    }
}

TEST_CASE("all intra-chain edges carry the chain coupler", "[parameterize]") {
    // A 4-qubit cycle as one chain: 4 intra-chain edges, not a spanning tree.
    IsingProblem problem(1, "one");
    problem.set_linear(0, 1.0);
    const HardwareGraph graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Embedding embedding;
    embedding.chains[0] = {0, 1, 2, 3};
    const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, 3.0);
    CHECK(embedded.total_chain_edges() == 4);
    for (const auto& [pair, value] : embedded.physical.quadratic()) {
        (void)pair;
        CHECK(value == -3.0);
    }
}

TEST_CASE("energy consistency for unbroken configurations", "[parameterize]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const HardwareGraph graph = testing::k4_with_one_chain_graph();
    const Embedding embedding = testing::k4_with_one_chain_embedding();
    const double jc = 1.7;
    const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, jc);

    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        const Configuration logical = Configuration::from_mask(mask, 4);
        // Extend to the physical space with every chain uniform.
        Configuration physical;
        physical.spins.resize(static_cast<std::size_t>(embedded.physical.num_vars()));
        for (const auto& [var, chain] : embedded.chains_compact.chains) {
            for (int q : chain) physical.spins[static_cast<std::size_t>(q)] = logical.spins[static_cast<std::size_t>(var)];
        }
        const double expected = energy(problem, logical) - jc * embedded.total_chain_edges();
        CHECK_THAT(energy(embedded.physical, physical), Catch::Matchers::WithinAbs(expected, 1e-12));
    }
}

TEST_CASE("raising the chain strength shifts unbroken states uniformly", "[parameterize]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const HardwareGraph graph = testing::k4_with_one_chain_graph();
    const Embedding embedding = testing::k4_with_one_chain_embedding();
    const EmbeddedProblem weak = embed_problem(problem, embedding, graph, 1.0);
    const EmbeddedProblem strong = embed_problem(problem, embedding, graph, 2.5);

    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        const Configuration logical = Configuration::from_mask(mask, 4);
        Configuration physical;
        physical.spins.resize(static_cast<std::size_t>(weak.physical.num_vars()));
        for (const auto& [var, chain] : weak.chains_compact.chains) {
            for (int q : chain) physical.spins[static_cast<std::size_t>(q)] = logical.spins[static_cast<std::size_t>(var)];
        }
        const double shift = (2.5 - 1.0) * weak.total_chain_edges();
        CHECK_THAT(energy(strong.physical, physical),
                   Catch::Matchers::WithinAbs(energy(weak.physical, physical) - shift, 1e-12));
    }
}

TEST_CASE("embed_problem rejects bad inputs", "[parameterize]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const HardwareGraph graph = testing::k4_with_one_chain_graph();
    SECTION("invalid embedding carries the report") {
        Embedding broken;
        broken.chains[0] = {0};
        broken.chains[1] = {1};
        broken.chains[2] = {2};
        broken.chains[3] = {3};
        // A nearly edgeless host: most couplers have no carrying edge.
        CHECK_THROWS_WITH(embed_problem(problem, broken, HardwareGraph(4, {{0, 1}}), 1.0),
                          Catch::Matchers::ContainsSubstring("missing_edge"));
    }
    SECTION("chain strength must be positive") {
        CHECK_THROWS_AS(embed_problem(problem, testing::k4_with_one_chain_embedding(), graph, 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("default chain strength formula", "[parameterize]") {
    SECTION("complete graph on four variables") {
        IsingProblem k4(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) k4.set_quadratic(i, j, (i + j) % 2 ? -1.0 : 1.0);
        CHECK_THAT(default_chain_strength(k4), Catch::Matchers::WithinAbs(1.41 * std::sqrt(3.0), 1e-12));
        CHECK_THAT(default_chain_strength(k4), Catch::Matchers::WithinAbs(2.4422, 1e-4));
    }
    SECTION("single coupler") {
        IsingProblem pair(2);
        pair.set_quadratic(0, 1, -1.0);
        CHECK(default_chain_strength(pair) == 1.41);
    }
    SECTION("8x8 lattice at the benchmark ratio") {
        const IsingProblem problem = gen_j1j2(8, 1.0, 0.42);
        // Direct evaluation: 112 bonds at 1, 98 at 0.42, 210 couplers, 64 vars.
        const double rms = std::sqrt((112.0 + 98.0 * 0.42 * 0.42) / 210.0);
        const double mean_degree = 2.0 * 210.0 / 64.0;
        const double expected = 1.41 * rms * std::sqrt(mean_degree);
        CHECK_THAT(default_chain_strength(problem), Catch::Matchers::WithinAbs(expected, 1e-12));
        CHECK_THAT(default_chain_strength(problem), Catch::Matchers::WithinAbs(2.834, 1e-3));
    }
    SECTION("zero couplers count unless excluded") {
        IsingProblem problem(3);
        problem.set_quadratic(0, 1, 1.0);
        problem.set_quadratic(1, 2, 0.0);
        const double with_zeros = default_chain_strength(problem, true);
        const double without = default_chain_strength(problem, false);
        CHECK_THAT(with_zeros,
                   Catch::Matchers::WithinAbs(1.41 * std::sqrt(0.5) * std::sqrt(4.0 / 3.0), 1e-12));
        CHECK_THAT(without, Catch::Matchers::WithinAbs(1.41 * std::sqrt(2.0 / 3.0), 1e-12));
    }
    SECTION("no couplers is an error") {
        CHECK_THROWS_AS(default_chain_strength(IsingProblem(3)), std::invalid_argument);
    }
}

}  // namespace chaintune
