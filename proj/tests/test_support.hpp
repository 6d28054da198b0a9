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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "chaintune/embedding.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/topology.hpp"

namespace chaintune::testing {

/// Independent spectrum oracle: enumerate every state, re-evaluating the
/// energy from scratch, then group levels anchored at the minimum with the
/// same 1e-12 tolerance the production enumerator documents. Used to check
/// the Gray-code path; deliberately has no incremental machinery.
struct NaiveSpectrum {
    double ground_energy;
    std::int64_t ground_degeneracy;
    std::vector<std::uint32_t> ground_masks;  // sorted
    double first_excited_energy;
    std::int64_t first_excited_degeneracy;

    double gap() const { return first_excited_energy - ground_energy; }
};

inline NaiveSpectrum naive_spectrum(const IsingProblem& problem) {
    const int n = problem.num_vars();
    const std::uint64_t count = 1ull << n;
    std::vector<double> energies(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        energies[mask] = energy(problem, Configuration::from_mask(static_cast<std::uint32_t>(mask), n));
    }
    const double tol = 1e-12;
    NaiveSpectrum result{};
    result.ground_energy = *std::min_element(energies.begin(), energies.end());
    double excited = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (energies[mask] <= result.ground_energy + tol) {
            ++result.ground_degeneracy;
            result.ground_masks.push_back(static_cast<std::uint32_t>(mask));
        } else {
            excited = std::min(excited, energies[mask]);
        }
    }
    result.first_excited_energy = excited;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (energies[mask] > result.ground_energy + tol && energies[mask] <= excited + tol)
            ++result.first_excited_degeneracy;
    }
    std::sort(result.ground_masks.begin(), result.ground_masks.end());
    return result;
}

/// Seeded random problem over n variables: each pair present with the given
/// probability, couplers and (optionally) fields uniform in [-1, 1].
inline IsingProblem random_problem(int n, std::uint64_t seed, double edge_probability = 0.5,
                                   bool with_fields = false) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    IsingProblem problem(n, "random n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (unit() < edge_probability) problem.set_quadratic(i, j, 2.0 * unit() - 1.0);
        }
    }
    if (with_fields) {
        for (int i = 0; i < n; ++i) problem.set_linear(i, 2.0 * unit() - 1.0);
    }
    return problem;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("chaintune_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

/// A small 5-qubit host for the 2x2 lattice where variable 3 needs the
/// two-qubit chain {3, 4}; the smallest instance with one real chain.
inline HardwareGraph k4_with_one_chain_graph() {
    return HardwareGraph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline Embedding k4_with_one_chain_embedding() {
    Embedding embedding;
    embedding.chains[0] = {0};
    embedding.chains[1] = {1};
    embedding.chains[2] = {2};
    embedding.chains[3] = {3, 4};
    return embedding;
}

}  // namespace chaintune::testing
