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
#include <vector>

#include "chaintune/embedding.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/topology.hpp"

namespace chaintune {

enum class TuneStatus { found, no_chains, not_converged };

struct TuneStep {
    double jc = 0.0;
    double broken_fraction = 0.0;  // aggregate over chains and reads
    std::int64_t reads_used = 0;
};

struct TuneResult {
    double jc_default = 0.0;
    std::optional<double> jc_star;
    std::optional<double> jc_optimal;  // exactly optimal_factor * jc_star when found
    std::vector<TuneStep> trace;
    TuneStatus status = TuneStatus::not_converged;
};

const char* tune_status_name(TuneStatus status);

struct TuneParams {
    std::int64_t search_reads = 100;
    int step_cap = 50;
    /// The operating-point multiplier applied to the critical coupling.
    double optimal_factor = 1.2;
    /// A step counts as unbroken when at least this fraction of its reads has
    /// zero broken chains; 1.0 is the strict every-read criterion.
    double required_unbroken_fraction = 1.0;
    std::int64_t sweeps = 1000;
    double beta_min = 0.1;
    double beta_max = 10.0;
    std::uint64_t seed = 0;
    int threads = 1;
    bool include_zero_couplers = true;
};

/// Sweep the chain strength upward from a tenth of the default, in steps of a
/// tenth of the default, sampling at each step and watching the chains:
/// the critical coupling is the first step where they hold, and the operating
/// point is that value scaled by optimal_factor. Gives no_chains for
/// all-singleton embeddings and not_converged when step_cap is exhausted
/// (both are results, not errors).
TuneResult tune(const IsingProblem& problem, const Embedding& embedding, const HardwareGraph& graph,
                const TuneParams& params = {});

}  // namespace chaintune
