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
#include <optional>
#include <string>
#include <vector>

#include "chaintune/ising.hpp"

namespace chaintune {

/// Hard cap on exact enumeration: 2^28 states.
inline constexpr int kMaxExactVars = 28;

/// Exact ground and first-excited levels of a problem.
struct SpectrumSummary {
    double ground_energy = 0.0;
    std::vector<Configuration> ground_states;  // all degenerate minima, sorted
    std::int64_t ground_degeneracy = 0;
    double first_excited_energy = 0.0;  // lowest distinct energy above ground
    std::int64_t first_excited_degeneracy = 0;
    std::int64_t states_below_cutoff = -1;  // -1 when no cutoff was given

    double gap() const { return first_excited_energy - ground_energy; }
};

struct ExactOptions {
    int threads = 1;
    std::optional<double> energy_cutoff;
};

/// Exhaustive enumeration in Gray-code order with incremental local-field
/// updates, so each state costs O(deg) instead of a full re-evaluation.
/// Candidate states near the running levels are re-evaluated with the
/// canonical energy() sum, which keeps reported energies bit-identical to a
/// naive re-evaluation scan. Energies within 1e-12 of a level are treated as
/// degenerate with it; this assumes real level spacings are much larger than
/// 1e-12, which holds for the problem families here.
///
/// Throws std::invalid_argument above kMaxExactVars and for empty problems.
SpectrumSummary exact_spectrum(const IsingProblem& problem, const ExactOptions& options = {});

struct SamplerInfo {
    std::string kind;  // "sa", optionally decorated by postprocessing steps
    std::int64_t num_reads = 0;
    std::int64_t sweeps = 0;
    std::string schedule;
    std::uint64_t seed = 0;
};

/// One row of a sample set: a configuration observed `occurrences` times.
struct Read {
    Configuration config;
    double energy = 0.0;
    std::int64_t occurrences = 0;
};

/// Reads are aggregated (identical configurations share a row) and sorted by
/// (energy, configuration), so the set is independent of read order.
struct SampleSet {
    std::vector<Read> reads;
    SamplerInfo sampler_info;
    std::string problem_ref;

    std::int64_t total_occurrences() const;
    double best_energy() const;  // throws on empty set
};

struct SaParams {
    std::int64_t num_reads = 100;
    std::int64_t sweeps = 1000;
    double beta_min = 0.1;
    double beta_max = 10.0;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Seeded simulated annealing, the desk-scale stand-in for annealing
/// hardware shots. Each read is an independent anneal from a random
/// configuration through a geometric inverse-temperature ladder, one
/// sequential Metropolis sweep per rung. Read r uses generator seed
/// hash(seed, r), so the sample set is bit-identical for any thread count.
SampleSet sa_sample(const IsingProblem& problem, const SaParams& params);

}  // namespace chaintune
