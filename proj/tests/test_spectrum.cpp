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

#include "catch2/catch_amalgamated.hpp"
#include "chaintune/detail/io.hpp"
#include "chaintune/samplers.hpp"
#include "chaintune/serialization.hpp"
#include "chaintune/spectrum.hpp"
#include "test_support.hpp"

namespace chaintune {

namespace {

std::vector<double> grid(double start, double stop, double step) {
    std::vector<double> values;
    for (double v = start; v <= stop + 1e-9; v += step) values.push_back(v);
    return values;
}

}  // namespace

TEST_CASE("gap scan with an identity embedding is flat", "[spectrum]") {
    IsingProblem problem(3, "triangle");
    problem.set_quadratic(0, 1, -1.0);
    problem.set_quadratic(0, 2, -1.0);
    problem.set_quadratic(1, 2, 0.5);
    const HardwareGraph graph(3, {{0, 1}, {0, 2}, {1, 2}});
    Embedding embedding;
    for (int v = 0; v < 3; ++v) embedding.chains[v] = {v};

    const GapScan scan = gap_scan(problem, embedding, graph, {1.0, 2.0, 3.0});
    REQUIRE(scan.points.size() == 3);
    for (const GapPoint& point : scan.points) {
        CHECK_FALSE(point.ground_has_break);
        CHECK_THAT(point.delta_c, Catch::Matchers::WithinAbs(scan.logical_delta, 1e-12));
    }
    REQUIRE(scan.jc_star.has_value());
    CHECK(*scan.jc_star == 1.0);
    CHECK(*scan.jc_kink == 1.0);
}

TEST_CASE("gap scan on a chained 2x2 lattice", "[spectrum]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const HardwareGraph graph = testing::k4_with_one_chain_graph();
    const Embedding embedding = testing::k4_with_one_chain_embedding();
    const GapScan scan = gap_scan(problem, embedding, graph, grid(0.05, 4.0, 0.05));

    CHECK_THAT(scan.logical_delta, Catch::Matchers::WithinAbs(2.32, 1e-12));

    SECTION("a broken region precedes an unbroken region") {
        REQUIRE(scan.jc_star.has_value());
        CHECK(*scan.jc_star > scan.points.front().jc);
        bool positive = false;
        for (const GapPoint& point : scan.points) {
            if (point.delta_c > 0.0) positive = true;
            // Once unbroken, the gap never collapses again.
            if (positive) {
                CHECK(point.delta_c > 0.0);
                CHECK_FALSE(point.ground_has_break);
            } else {
                CHECK(point.ground_has_break);
            }
        }
        CHECK(positive);
    }
    SECTION("the plateau reaches the logical gap") {
        REQUIRE(scan.jc_kink.has_value());
        CHECK_THAT(scan.points.back().delta_c, Catch::Matchers::WithinAbs(scan.logical_delta, 1e-9));
    }
    SECTION("points are ascending and flagged consistently") {
        for (std::size_t i = 0; i < scan.points.size(); ++i) {
            if (i) CHECK(scan.points[i].jc > scan.points[i - 1].jc);
            if (scan.points[i].ground_has_break) CHECK(scan.points[i].delta_c == 0.0);
        }
    }
}

TEST_CASE("far above the kink the embedded gap equals the logical gap", "[spectrum]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const GapScan scan = gap_scan(problem, testing::k4_with_one_chain_embedding(),
                                  testing::k4_with_one_chain_graph(), {10.0});
    CHECK_THAT(scan.points[0].delta_c, Catch::Matchers::WithinAbs(scan.logical_delta, 1e-9));
}

TEST_CASE("critical coupling grows with frustration", "[spectrum]") {
    // On the small chained lattice the break region widens as J2/J1 rises,
    // the same ordering the scan is meant to expose at full scale.
    std::vector<double> stars;
    for (const double ratio : {0.42, 0.46, 0.48}) {
        const IsingProblem problem = gen_j1j2(2, 1.0, ratio);
        const GapScan scan = gap_scan(problem, testing::k4_with_one_chain_embedding(),
                                      testing::k4_with_one_chain_graph(), grid(0.05, 4.0, 0.05));
        REQUIRE(scan.jc_star.has_value());
        stars.push_back(*scan.jc_star);
    }
    CHECK(stars[0] <= stars[1]);
    CHECK(stars[1] <= stars[2]);
}

TEST_CASE("gap scan preconditions", "[spectrum]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const HardwareGraph graph = testing::k4_with_one_chain_graph();
    const Embedding embedding = testing::k4_with_one_chain_embedding();

    CHECK_THROWS_AS(gap_scan(problem, embedding, graph, {}), std::invalid_argument);
    CHECK_THROWS_AS(gap_scan(problem, embedding, graph, {-1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(gap_scan(problem, embedding, graph, {2.0, 1.0}), std::invalid_argument);

    SECTION("qubit budget") {
        const IsingProblem large = gen_j1j2(6, 1.0, 0.42);  // 36 > 28 qubits even unchained
        HardwareGraph host(36, [] {
            std::vector<std::pair<int, int>> edges;
            const IsingProblem p = gen_j1j2(6, 1.0, 0.42);
            for (const auto& [pair, value] : p.quadratic()) {
                (void)value;
                edges.push_back(pair);
            }
            return edges;
        }());
        Embedding identity;
        for (int v = 0; v < 36; ++v) identity.chains[v] = {v};
        CHECK_THROWS_WITH(gap_scan(large, identity, host, {1.0}),
                          Catch::Matchers::ContainsSubstring("cap"));
    }
}

TEST_CASE("gap scan csv output", "[spectrum]") {
    const auto dir = testing::scratch_dir("spectrum");
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const GapScan scan = gap_scan(problem, testing::k4_with_one_chain_embedding(),
                                  testing::k4_with_one_chain_graph(), {0.5, 1.0, 4.0});
    write_gap_scan_csv(scan, {{"config_hash", "deadbeef"}, {"sampler", "exact"}}, dir / "scan.csv");
    const std::string text = detail::read_file(dir / "scan.csv");
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("# config_hash=deadbeef"));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("# sampler=exact"));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("jc,delta_c,ground_has_break"));
    // One data line per scanned point.
    CHECK(std::count(text.begin(), text.end(), '\n') >= 3 + 2);
}

}  // namespace chaintune
