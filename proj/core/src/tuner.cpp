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

#include "chaintune/tuner.hpp"

#include <stdexcept>

#include "chaintune/chains.hpp"
#include "chaintune/embedded_problem.hpp"
#include "chaintune/hashing.hpp"
#include "chaintune/samplers.hpp"

namespace chaintune {

const char* tune_status_name(TuneStatus status) {
    switch (status) {
        case TuneStatus::found: return "found";
        case TuneStatus::no_chains: return "no_chains";
        case TuneStatus::not_converged: return "not_converged";
    }
    return "unknown";
}

TuneResult tune(const IsingProblem& problem, const Embedding& embedding, const HardwareGraph& graph,
                const TuneParams& params) {
    if (params.search_reads < 1) throw std::invalid_argument("tune: search_reads must be at least 1");
    if (params.step_cap < 1) throw std::invalid_argument("tune: step_cap must be at least 1");
    if (!(params.optimal_factor > 0)) throw std::invalid_argument("tune: optimal_factor must be positive");
    if (!(params.required_unbroken_fraction > 0) || params.required_unbroken_fraction > 1.0)
        throw std::invalid_argument("tune: required_unbroken_fraction must be in (0, 1]");
    const ValidationReport report = validate(embedding, problem, graph);
    if (!report.ok()) throw std::invalid_argument("tune: invalid embedding: " + report.to_string());

    TuneResult result;
    result.jc_default = default_chain_strength(problem, params.include_zero_couplers);

    if (embedding.max_chain_size() <= 1) {
        result.status = TuneStatus::no_chains;
        return result;
    }

    const double step = 0.1 * result.jc_default;
    for (int k = 1; k <= params.step_cap; ++k) {
        const double jc = static_cast<double>(k) * step;
        const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, jc);

        SaParams sa;
        sa.num_reads = params.search_reads;
        sa.sweeps = params.sweeps;
        sa.beta_min = params.beta_min;
        sa.beta_max = params.beta_max;
        sa.seed = mix_seed(params.seed, static_cast<std::uint64_t>(k));
        sa.threads = params.threads;
        const SampleSet samples = sa_sample(embedded.physical, sa);

        const ChainReport breaks = detect_breaks(samples, embedded.chains_compact);
        result.trace.push_back({jc, breaks.aggregate_broken_fraction, params.search_reads});

        if (breaks.unbroken_read_fraction >= params.required_unbroken_fraction) {
            result.jc_star = jc;
            result.jc_optimal = params.optimal_factor * jc;
            result.status = TuneStatus::found;
            return result;
        }
    }
    result.status = TuneStatus::not_converged;
    return result;
}

}  // namespace chaintune
