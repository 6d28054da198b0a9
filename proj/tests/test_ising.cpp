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

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/serialization.hpp"
#include "test_support.hpp"

namespace chaintune {

TEST_CASE("energy on the 2x2 frustrated lattice", "[ising]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const Configuration all_up = Configuration::from_mask(0, 4);

    // Brute force over all 16 states pins the ground energy first.
    double brute_min = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        brute_min = std::min(brute_min, energy(problem, Configuration::from_mask(mask, 4)));
    }
    CHECK_THAT(brute_min, Catch::Matchers::WithinAbs(-3.16, 1e-12));
    CHECK(energy(problem, all_up) == brute_min);
}

TEST_CASE("energy of a single coupler", "[ising]") {
    IsingProblem problem(2);
    problem.set_quadratic(0, 1, 1.0);
    CHECK(energy(problem, Configuration{{1, 1}}) == 1.0);
    CHECK(energy(problem, Configuration{{1, -1}}) == -1.0);
}

TEST_CASE("energy rejects length mismatch", "[ising]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.5);
    CHECK_THROWS_AS(energy(problem, Configuration{{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("spin-flip symmetry for field-free problems", "[ising]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const IsingProblem problem = testing::random_problem(6, rng());
        Configuration config;
        Configuration flipped;
        for (int i = 0; i < 6; ++i) {
            const Spin s = (rng() & 1u) ? Spin{1} : Spin{-1};
            config.spins.push_back(s);
            flipped.spins.push_back(static_cast<Spin>(-s));
        }
        CHECK(energy(problem, config) == energy(problem, flipped));
    }
}

TEST_CASE("fields contribute to the energy", "[ising]") {
    IsingProblem problem(1);
    problem.set_linear(0, 0.75);
    CHECK(energy(problem, Configuration{{-1}}) == -0.75);
    CHECK(problem.has_linear());
}

TEST_CASE("j1j2 generator shape", "[ising]") {
    SECTION("single plaquette") {
        const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
        REQUIRE(problem.num_vars() == 4);
        int nn = 0, diag = 0;
        for (const auto& [pair, value] : problem.quadratic()) {
            (void)pair;
            if (value == -1.0) ++nn;
            if (value == 0.42) ++diag;
        }
        CHECK(nn == 4);
        CHECK(diag == 2);
        CHECK(problem.num_couplers() == 6);
    }
    SECTION("bond counts match the closed forms up to L=10") {
        for (int L = 2; L <= 10; ++L) {
            const IsingProblem problem = gen_j1j2(L, 1.0, 0.42);
            std::size_t nn = 0, diag = 0;
            for (const auto& [pair, value] : problem.quadratic()) {
                (void)pair;
                value < 0 ? ++nn : ++diag;
            }
            CHECK(problem.num_vars() == L * L);
            CHECK(nn == static_cast<std::size_t>(2 * L * (L - 1)));
            CHECK(diag == static_cast<std::size_t>(2 * (L - 1) * (L - 1)));
        }
    }
    SECTION("the 8x8 instance used in the experiments") {
        const IsingProblem problem = gen_j1j2(8, 1.0, 0.42);
        std::size_t nn = 0, diag = 0;
        for (const auto& [pair, value] : problem.quadratic()) {
            (void)pair;
            value < 0 ? ++nn : ++diag;
        }
        CHECK(problem.num_vars() == 64);
        CHECK(nn == 112);
        CHECK(diag == 98);
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(gen_j1j2(1, 1.0, 0.42), std::invalid_argument);
        CHECK_THROWS_AS(gen_j1j2(4, 0.0, 0.42), std::invalid_argument);
    }
}

TEST_CASE("fully connected generator", "[ising]") {
    SECTION("pair count and value range") {
        const IsingProblem problem = gen_fully_connected(4, 99);
        CHECK(problem.num_couplers() == 6);
        for (const auto& [pair, value] : problem.quadratic()) {
            (void)pair;
            CHECK((value == -1.0 || value == 0.0 || value == 1.0));
        }
    }
    SECTION("N=20 has 190 couplers") {
        CHECK(gen_fully_connected(20, 1).num_couplers() == 190);
    }
    SECTION("deterministic, byte-identical serialization") {
        const IsingProblem a = gen_fully_connected(12, 7);
        const IsingProblem b = gen_fully_connected(12, 7);
        CHECK(a == b);
        CHECK(problem_to_json(a) == problem_to_json(b));
        CHECK(problem_to_json(a) != problem_to_json(gen_fully_connected(12, 8)));
    }
    SECTION("zero couplers are stored explicitly") {
        bool saw_zero = false;
        for (int seed = 0; seed < 5 && !saw_zero; ++seed) {
            const IsingProblem problem = gen_fully_connected(10, seed);
            for (const auto& [pair, value] : problem.quadratic()) {
                (void)pair;
                if (value == 0.0) saw_zero = true;
            }
        }
        CHECK(saw_zero);
    }
    SECTION("precondition") {
        CHECK_THROWS_AS(gen_fully_connected(1, 0), std::invalid_argument);
    }
}

TEST_CASE("problem mutation guards", "[ising]") {
    IsingProblem problem(3);
    CHECK_THROWS_AS(problem.set_quadratic(1, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(problem.set_quadratic(0, 3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(problem.set_linear(3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(problem.set_linear(0, std::numeric_limits<double>::infinity()), std::invalid_argument);
    problem.set_quadratic(2, 0, 0.25);  // stored normalized
    CHECK(problem.quadratic().count({0, 2}) == 1);
}

TEST_CASE("configuration mask round trip", "[ising]") {
    const Configuration config = Configuration::from_mask(0b1011, 4);
    CHECK(config.spins == std::vector<Spin>{-1, -1, 1, -1});
    CHECK(config.to_mask() == 0b1011);
    CHECK(config.valid());
    CHECK_FALSE(Configuration{{1, 0}}.valid());
}

}  // namespace chaintune
