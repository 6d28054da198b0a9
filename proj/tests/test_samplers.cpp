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

#include <algorithm>

#include "catch2/catch_amalgamated.hpp"
#include "chaintune/samplers.hpp"
#include "chaintune/serialization.hpp"
#include "test_support.hpp"

namespace chaintune {

namespace {

std::vector<std::uint32_t> ground_masks(const SpectrumSummary& summary) {
    std::vector<std::uint32_t> masks;
    masks.reserve(summary.ground_states.size());
    for (const Configuration& config : summary.ground_states) masks.push_back(config.to_mask());
    std::sort(masks.begin(), masks.end());
    return masks;
}

}  // namespace

TEST_CASE("exact spectrum of the 2x2 frustrated lattice", "[samplers]") {
    const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
    const SpectrumSummary summary = exact_spectrum(problem);
    const testing::NaiveSpectrum oracle = testing::naive_spectrum(problem);

    CHECK(summary.ground_energy == oracle.ground_energy);
    CHECK_THAT(summary.ground_energy, Catch::Matchers::WithinAbs(-3.16, 1e-12));
    CHECK(summary.ground_degeneracy == 2);
    CHECK(ground_masks(summary) == std::vector<std::uint32_t>{0b0000, 0b1111});
    CHECK_THAT(summary.first_excited_energy, Catch::Matchers::WithinAbs(-0.84, 1e-12));
    CHECK(summary.first_excited_degeneracy == 4);
    CHECK_THAT(summary.gap(), Catch::Matchers::WithinAbs(2.32, 1e-12));
}

TEST_CASE("exact spectrum of one free spin in a field", "[samplers]") {
    IsingProblem problem(1, "spin");
    problem.set_linear(0, 1.0);
    const SpectrumSummary summary = exact_spectrum(problem);
    CHECK(summary.ground_energy == -1.0);
    REQUIRE(summary.ground_states.size() == 1);
    CHECK(summary.ground_states[0].spins == std::vector<Spin>{-1});
    CHECK(summary.first_excited_energy == 1.0);
    CHECK(summary.gap() == 2.0);
}

TEST_CASE("field-free spectra have even ground degeneracy", "[samplers]") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const IsingProblem problem = testing::random_problem(8, 500 + seed);
        CHECK(exact_spectrum(problem).ground_degeneracy % 2 == 0);
    }
}

TEST_CASE("gray-code enumeration matches naive re-evaluation", "[samplers]") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const int n = 10 + static_cast<int>(seed % 7);
        const IsingProblem problem = testing::random_problem(n, 900 + seed, 0.4, seed % 2 == 0);
        const SpectrumSummary fast = exact_spectrum(problem);
        const testing::NaiveSpectrum oracle = testing::naive_spectrum(problem);
        CHECK(fast.ground_energy == oracle.ground_energy);
        CHECK(fast.ground_degeneracy == oracle.ground_degeneracy);
        CHECK(fast.first_excited_energy == oracle.first_excited_energy);
        CHECK(fast.first_excited_degeneracy == oracle.first_excited_degeneracy);
        CHECK(ground_masks(fast) == oracle.ground_masks);
    }
}

TEST_CASE("enumerator cap and cutoff", "[samplers]") {
    SECTION("refuses above the cap") {
        CHECK_THROWS_WITH(exact_spectrum(IsingProblem(29)), Catch::Matchers::ContainsSubstring("28"));
    }
    SECTION("counts states below a cutoff") {
        const IsingProblem problem = gen_j1j2(2, 1.0, 0.42);
        ExactOptions options;
        options.energy_cutoff = -0.84 + 1e-6;  // ground and first excited levels
        const SpectrumSummary summary = exact_spectrum(problem, options);
        CHECK(summary.states_below_cutoff == 6);
        CHECK(exact_spectrum(problem).states_below_cutoff == -1);
    }
}

TEST_CASE("enumerator is thread-count independent", "[samplers]") {
    const IsingProblem problem = testing::random_problem(14, 77, 0.3);
    const SpectrumSummary serial = exact_spectrum(problem);
    ExactOptions options;
    options.threads = 4;
    const SpectrumSummary parallel = exact_spectrum(problem, options);
    CHECK(serial.ground_energy == parallel.ground_energy);
    CHECK(serial.ground_degeneracy == parallel.ground_degeneracy);
    CHECK(serial.first_excited_energy == parallel.first_excited_energy);
    CHECK(serial.first_excited_degeneracy == parallel.first_excited_degeneracy);
    CHECK(ground_masks(serial) == ground_masks(parallel));
}

TEST_CASE("simulated annealing finds ferromagnetic ground states", "[samplers]") {
    IsingProblem chain(8, "fm chain");
    for (int i = 0; i + 1 < 8; ++i) chain.set_quadratic(i, i + 1, -1.0);
    const double ground = exact_spectrum(chain).ground_energy;
    CHECK(ground == -7.0);

    SaParams params;
    params.num_reads = 100;
    params.sweeps = 200;
    params.seed = 21;
    const SampleSet samples = sa_sample(chain, params);
    std::int64_t hits = 0;
    for (const Read& read : samples.reads) {
        if (read.energy <= ground + 1e-9) hits += read.occurrences;
    }
    CHECK(hits >= 95);
}

TEST_CASE("sample sets are deterministic and self-consistent", "[samplers]") {
    const IsingProblem problem = testing::random_problem(10, 4242, 0.5);
    SaParams params;
    params.num_reads = 60;
    params.sweeps = 150;
    params.seed = 9;

    const SampleSet first = sa_sample(problem, params);
    const SampleSet second = sa_sample(problem, params);
    CHECK(sampleset_to_json(first) == sampleset_to_json(second));

    SECTION("occurrences account for every read") {
        CHECK(first.total_occurrences() == params.num_reads);
    }
    SECTION("stored energies are recomputable exactly") {
        for (const Read& read : first.reads) CHECK(read.energy == energy(problem, read.config));
    }
    SECTION("reads are sorted by energy") {
        CHECK(std::is_sorted(first.reads.begin(), first.reads.end(),
                             [](const Read& a, const Read& b) { return a.energy < b.energy; }));
    }
    SECTION("single-read determinism") {
        SaParams one = params;
        one.num_reads = 1;
        CHECK(sampleset_to_json(sa_sample(problem, one)) == sampleset_to_json(sa_sample(problem, one)));
    }
}

TEST_CASE("sampling is thread-count independent", "[samplers]") {
    const IsingProblem problem = testing::random_problem(12, 1234, 0.5);
    SaParams serial;
    serial.num_reads = 40;
    serial.sweeps = 100;
    serial.seed = 5;
    SaParams parallel = serial;
    parallel.threads = 4;
    CHECK(sampleset_to_json(sa_sample(problem, serial)) == sampleset_to_json(sa_sample(problem, parallel)));
}

TEST_CASE("simulated annealing never beats the exact ground", "[samplers]") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const IsingProblem problem = testing::random_problem(12, 3000 + seed, 0.5, true);
        const double ground = exact_spectrum(problem).ground_energy;
        SaParams params;
        params.num_reads = 50;
        params.sweeps = 100;
        params.seed = seed;
        CHECK(sa_sample(problem, params).best_energy() >= ground - 1e-9);
    }
}

TEST_CASE("sampler parameter validation", "[samplers]") {
    const IsingProblem problem = testing::random_problem(4, 1);
    SaParams params;
    SECTION("zero sweeps") {
        params.sweeps = 0;
        CHECK_THROWS_AS(sa_sample(problem, params), std::invalid_argument);
    }
    SECTION("zero reads") {
        params.num_reads = 0;
        CHECK_THROWS_AS(sa_sample(problem, params), std::invalid_argument);
    }
    SECTION("inverted beta range") {
        params.beta_min = 2.0;
        params.beta_max = 1.0;
        CHECK_THROWS_AS(sa_sample(problem, params), std::invalid_argument);
    }
}

}  // namespace chaintune
