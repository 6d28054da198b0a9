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
#include <vector>

#include "chaintune/embedding.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/samplers.hpp"

namespace chaintune {

/// Chain-break statistics for one sample set. Rows parallel the sample set's
/// rows; the aggregate is the occurrence-weighted mean broken fraction.
struct ChainBreaks {
    std::vector<int> broken_chain_ids;
    double broken_fraction = 0.0;  // |broken chains| / |chains|
};

struct ChainReport {
    std::vector<ChainBreaks> per_read;
    double aggregate_broken_fraction = 0.0;

    /// Occurrence-weighted fraction of reads with no broken chain at all.
    double unbroken_read_fraction = 1.0;
};

/// A chain is broken in a read iff its qubits do not all agree. The sample
/// configurations and the embedding must live in the same index space (for
/// embedded problems that is the compact space, EmbeddedProblem::chains_compact).
/// Throws std::invalid_argument on index mismatch.
ChainReport detect_breaks(const SampleSet& samples, const Embedding& embedding);

enum class UnembedPolicy {
    majority_vote,   // every read kept; ties decided by a seeded coin
    discard_broken,  // reads containing any broken chain are dropped
};

/// Map physical reads to logical configurations: each variable takes the
/// majority spin of its chain; exact ties are resolved by a deterministic
/// coin keyed on (tie_seed, read configuration, variable), so equal reads
/// resolve equally regardless of read order. Logical energies are recomputed
/// against `logical`. With discard_broken the returned set keeps
/// sampler_info.num_reads as the original shot count while its occurrences
/// only cover the surviving reads.
SampleSet unembed(const SampleSet& samples, const Embedding& embedding, const IsingProblem& logical,
                  std::uint64_t tie_seed, UnembedPolicy policy = UnembedPolicy::majority_vote);

/// p = (occurrences with energy <= reference + tol) / sampler_info.num_reads.
/// The denominator is the requested shot count, so discarded reads count as
/// misses. Throws std::invalid_argument on an empty sample set.
double success_probability(const SampleSet& logical_samples, double reference_energy, double tol = 1e-9);

}  // namespace chaintune
