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

#include "chaintune/chains.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string_view>

#include "chaintune/hashing.hpp"

namespace chaintune {

namespace {

void check_index_space(const SampleSet& samples, const Embedding& embedding) {
    if (samples.reads.empty()) return;
    const std::size_t width = samples.reads.front().config.size();
    for (const Read& read : samples.reads) {
        if (read.config.size() != width)
            throw std::invalid_argument("sample set mixes configuration lengths");
    }
    for (const auto& [var, chain] : embedding.chains) {
        for (int q : chain) {
            if (q < 0 || static_cast<std::size_t>(q) >= width)
                throw std::invalid_argument("chain of variable " + std::to_string(var) + " references qubit " +
                                            std::to_string(q) + " outside the sampled configuration (length " +
                                            std::to_string(width) + ")");
        }
    }
}

std::uint64_t config_hash(const Configuration& config) {
    return fnv1a64(std::string_view(reinterpret_cast<const char*>(config.spins.data()), config.spins.size()));
}

}  // namespace

ChainReport detect_breaks(const SampleSet& samples, const Embedding& embedding) {
    check_index_space(samples, embedding);
    const int num_chains = embedding.num_chains();
    ChainReport report;
    report.per_read.reserve(samples.reads.size());
    double weighted_broken = 0.0;
    double weighted_clean_reads = 0.0;
    std::int64_t total_reads = 0;
    for (const Read& read : samples.reads) {
        ChainBreaks breaks;
        for (const auto& [var, chain] : embedding.chains) {
            const Spin first = read.config.spins[static_cast<std::size_t>(chain.front())];
            for (std::size_t i = 1; i < chain.size(); ++i) {
                if (read.config.spins[static_cast<std::size_t>(chain[i])] != first) {
                    breaks.broken_chain_ids.push_back(var);
                    break;
                }
            }
        }
        breaks.broken_fraction = num_chains == 0 ? 0.0
                                                 : static_cast<double>(breaks.broken_chain_ids.size()) /
                                                           static_cast<double>(num_chains);
        weighted_broken += breaks.broken_fraction * static_cast<double>(read.occurrences);
        if (breaks.broken_chain_ids.empty()) weighted_clean_reads += static_cast<double>(read.occurrences);
        total_reads += read.occurrences;
        report.per_read.push_back(std::move(breaks));
    }
    if (total_reads > 0) {
        report.aggregate_broken_fraction = weighted_broken / static_cast<double>(total_reads);
        report.unbroken_read_fraction = weighted_clean_reads / static_cast<double>(total_reads);
    }
    return report;
}

SampleSet unembed(const SampleSet& samples, const Embedding& embedding, const IsingProblem& logical,
                  std::uint64_t tie_seed, UnembedPolicy policy) {
    check_index_space(samples, embedding);
    if (embedding.num_chains() != logical.num_vars())
        throw std::invalid_argument("unembed: embedding covers " + std::to_string(embedding.num_chains()) +
                                    " variables, problem has " + std::to_string(logical.num_vars()));
    for (const auto& [var, chain] : embedding.chains) {
        (void)chain;
        if (var < 0 || var >= logical.num_vars())
            throw std::invalid_argument("unembed: chain variable " + std::to_string(var) + " out of range");
    }

    std::map<Configuration, std::int64_t> aggregated;
    for (const Read& read : samples.reads) {
        bool broken = false;
        Configuration logical_config;
        logical_config.spins.resize(static_cast<std::size_t>(logical.num_vars()));
        const std::uint64_t read_key = config_hash(read.config);
        for (const auto& [var, chain] : embedding.chains) {
            int up = 0;
            for (int q : chain) {
                if (read.config.spins[static_cast<std::size_t>(q)] > 0) ++up;
            }
            const int down = static_cast<int>(chain.size()) - up;
            if (up != static_cast<int>(chain.size()) && down != static_cast<int>(chain.size())) broken = true;
            Spin value;
            if (up > down) {
                value = 1;
            } else if (down > up) {
                value = -1;
            } else {
                value = (mix_seed(mix_seed(tie_seed, read_key), static_cast<std::uint64_t>(var)) & 1u) ? Spin{1}
                                                                                                       : Spin{-1};
            }
            logical_config.spins[static_cast<std::size_t>(var)] = value;
        }
        if (broken && policy == UnembedPolicy::discard_broken) continue;
        aggregated[std::move(logical_config)] += read.occurrences;
    }

    SampleSet out;
    out.sampler_info = samples.sampler_info;
    out.sampler_info.kind += policy == UnembedPolicy::majority_vote ? "|unembed=majority_vote"
                                                                    : "|unembed=discard_broken";
    out.problem_ref = logical.label();
    out.reads.reserve(aggregated.size());
    for (auto& [config, occurrences] : aggregated) {
        Read read;
        read.energy = energy(logical, config);
        read.config = config;
        read.occurrences = occurrences;
        out.reads.push_back(std::move(read));
    }
    std::stable_sort(out.reads.begin(), out.reads.end(),
                     [](const Read& a, const Read& b) { return a.energy < b.energy; });
    return out;
}

double success_probability(const SampleSet& logical_samples, double reference_energy, double tol) {
    const std::int64_t shots = logical_samples.sampler_info.num_reads;
    if (shots < 1) throw std::invalid_argument("success_probability: empty sample set");
    std::int64_t hits = 0;
    for (const Read& read : logical_samples.reads) {
        if (read.energy <= reference_energy + tol) hits += read.occurrences;
    }
    return static_cast<double>(hits) / static_cast<double>(shots);
}

}  // namespace chaintune
