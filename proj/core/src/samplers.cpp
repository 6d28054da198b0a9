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

#include "chaintune/samplers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "chaintune/hashing.hpp"

namespace chaintune {

namespace {

// Tolerance for grouping float-noisy copies of the same exact level.
constexpr double kLevelTol = 1e-12;
// Candidate guard band: states whose running energy is within this of the
// tracked levels get a canonical re-evaluation. Covers incremental drift.
constexpr double kCandidateGuard = 1e-9;
// All degenerate minima are retained; past this something is wrong.
constexpr std::size_t kMaxStoredStates = 1u << 20;

// Compressed neighbor lists for O(deg) spin-flip updates.
struct Couplings {
    int num_vars;
    std::vector<int> offsets;
    std::vector<int> neighbor;
    std::vector<double> weight;
    std::vector<double> field;

    explicit Couplings(const IsingProblem& problem) : num_vars(problem.num_vars()) {
        std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(num_vars));
        for (const auto& [pair, value] : problem.quadratic()) {
            if (value == 0.0) continue;
            adj[static_cast<std::size_t>(pair.first)].emplace_back(pair.second, value);
            adj[static_cast<std::size_t>(pair.second)].emplace_back(pair.first, value);
        }
        offsets.reserve(static_cast<std::size_t>(num_vars) + 1);
        offsets.push_back(0);
        for (const auto& nbrs : adj) {
            for (const auto& [j, w] : nbrs) {
                neighbor.push_back(j);
                weight.push_back(w);
            }
            offsets.push_back(static_cast<int>(neighbor.size()));
        }
        field.assign(problem.linear_terms().begin(), problem.linear_terms().end());
    }

    // Local field L_i = sum_j J_ij s_j + h_i for every i.
    std::vector<double> local_fields(const std::vector<Spin>& spins) const {
        std::vector<double> local(field);
        for (int i = 0; i < num_vars; ++i) {
            double acc = 0.0;
            for (int idx = offsets[static_cast<std::size_t>(i)]; idx < offsets[static_cast<std::size_t>(i) + 1];
                 ++idx) {
                acc += weight[static_cast<std::size_t>(idx)] *
                       spins[static_cast<std::size_t>(neighbor[static_cast<std::size_t>(idx)])];
            }
            local[static_cast<std::size_t>(i)] += acc;
        }
        return local;
    }
};

// One energy level: the minimum canonical energy seen, the exact state count,
// and the states themselves (as masks).
struct Level {
    double energy = 0.0;
    std::int64_t count = 0;
    std::vector<std::uint32_t> states;
};

// The two lowest levels of a (sub)space, merged associatively across blocks.
struct LevelTracker {
    std::vector<Level> levels;  // at most 2, ascending

    void add_state(double exact_energy, std::uint32_t mask) {
        for (std::size_t i = 0; i < levels.size(); ++i) {
            Level& level = levels[i];
            if (std::abs(exact_energy - level.energy) <= kLevelTol) {
                level.energy = std::min(level.energy, exact_energy);
                ++level.count;
                if (level.states.size() >= kMaxStoredStates)
                    throw std::runtime_error("exact_spectrum: degenerate level exceeds storage cap");
                level.states.push_back(mask);
                return;
            }
            if (exact_energy < level.energy) {
                levels.insert(levels.begin() + static_cast<std::ptrdiff_t>(i),
                              Level{exact_energy, 1, {mask}});
                if (levels.size() > 2) levels.pop_back();
                return;
            }
        }
        if (levels.size() < 2) {
            levels.push_back(Level{exact_energy, 1, {mask}});
        }
    }

    // Upper bound under which a state could still matter.
    double interest_bound() const {
        if (levels.size() < 2) return std::numeric_limits<double>::infinity();
        return levels[1].energy + kLevelTol;
    }

    void merge(LevelTracker&& other) {
        for (Level& level : other.levels) {
            for (std::size_t i = 0;; ++i) {
                if (i == levels.size()) {
                    if (levels.size() < 2) levels.push_back(std::move(level));
                    break;
                }
                Level& mine = levels[i];
                if (std::abs(level.energy - mine.energy) <= kLevelTol) {
                    mine.energy = std::min(mine.energy, level.energy);
                    mine.count += level.count;
                    mine.states.insert(mine.states.end(), level.states.begin(), level.states.end());
                    break;
                }
                if (level.energy < mine.energy) {
                    levels.insert(levels.begin() + static_cast<std::ptrdiff_t>(i), std::move(level));
                    if (levels.size() > 2) levels.pop_back();
                    break;
                }
            }
        }
    }
};

struct BlockResult {
    LevelTracker tracker;
    std::int64_t below_cutoff = 0;
};

// Enumerate the subspace where the top `prefix_bits` spins are fixed by
// `block`, Gray-coding over the remaining low variables.
BlockResult enumerate_block(const IsingProblem& problem, const Couplings& couplings, int prefix_bits,
                            std::uint32_t block, const std::optional<double>& cutoff) {
    const int n = couplings.num_vars;
    const int low = n - prefix_bits;
    const std::uint32_t base = block << low;

    std::vector<Spin> spins = Configuration::from_mask(base, n).spins;
    std::vector<double> local = couplings.local_fields(spins);
    double running = energy(problem, Configuration{spins});

    BlockResult result;
    std::uint32_t mask = base;
    const std::uint64_t count = 1ull << low;
    for (std::uint64_t step = 0;; ++step) {
        if (running <= result.tracker.interest_bound() + kCandidateGuard) {
            result.tracker.add_state(energy(problem, Configuration::from_mask(mask, n)), mask);
        }
        if (cutoff && running < *cutoff) ++result.below_cutoff;
        if (step + 1 == count) break;

        const int flip = std::countr_zero(step + 1);
        const auto fi = static_cast<std::size_t>(flip);
        running += -2.0 * spins[fi] * local[fi];
        spins[fi] = static_cast<Spin>(-spins[fi]);
        mask ^= (1u << flip);
        const double delta = 2.0 * spins[fi];
        for (int idx = couplings.offsets[fi]; idx < couplings.offsets[fi + 1]; ++idx) {
            local[static_cast<std::size_t>(couplings.neighbor[static_cast<std::size_t>(idx)])] +=
                    delta * couplings.weight[static_cast<std::size_t>(idx)];
        }
    }
    return result;
}

}  // namespace

SpectrumSummary exact_spectrum(const IsingProblem& problem, const ExactOptions& options) {
    const int n = problem.num_vars();
    if (n < 1) throw std::invalid_argument("exact_spectrum: empty problem");
    if (n > kMaxExactVars)
        throw std::invalid_argument("exact_spectrum: " + std::to_string(n) + " variables exceeds the exact cap of " +
                                    std::to_string(kMaxExactVars) + " (2^" + std::to_string(kMaxExactVars) +
                                    " states); use the sampling path instead");

    const Couplings couplings(problem);

    int prefix_bits = 0;
    if (options.threads > 1 && n > 12) {
        while ((1 << prefix_bits) < 4 * options.threads && prefix_bits < n - 10) ++prefix_bits;
    }
    const std::uint32_t num_blocks = 1u << prefix_bits;

    std::vector<BlockResult> results(num_blocks);
    if (num_blocks == 1) {
        results[0] = enumerate_block(problem, couplings, prefix_bits, 0, options.energy_cutoff);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::uint32_t> next{0};
        const int num_workers = std::min<int>(options.threads, static_cast<int>(num_blocks));
        workers.reserve(static_cast<std::size_t>(num_workers));
        for (int w = 0; w < num_workers; ++w) {
            workers.emplace_back([&]() {
                for (;;) {
                    const std::uint32_t block = next.fetch_add(1);
                    if (block >= num_blocks) return;
                    results[block] =
                            enumerate_block(problem, couplings, prefix_bits, block, options.energy_cutoff);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }

    // Merge in block order; block results do not depend on which thread ran
    // them, so the outcome is thread-count independent.
    LevelTracker merged;
    std::int64_t below_cutoff = 0;
    for (auto& block : results) {
        merged.merge(std::move(block.tracker));
        below_cutoff += block.below_cutoff;
    }

    if (merged.levels.empty()) throw std::logic_error("exact_spectrum: no states visited");

    SpectrumSummary summary;
    const Level& ground = merged.levels[0];
    summary.ground_energy = ground.energy;
    summary.ground_degeneracy = ground.count;
    std::vector<std::uint32_t> masks = ground.states;
    std::sort(masks.begin(), masks.end());
    summary.ground_states.reserve(masks.size());
    for (std::uint32_t mask : masks) summary.ground_states.push_back(Configuration::from_mask(mask, n));
    if (merged.levels.size() > 1) {
        summary.first_excited_energy = merged.levels[1].energy;
        summary.first_excited_degeneracy = merged.levels[1].count;
    } else {
        // Single-level spectrum (every state degenerate); report an empty gap.
        summary.first_excited_energy = ground.energy;
        summary.first_excited_degeneracy = 0;
    }
    summary.states_below_cutoff = options.energy_cutoff ? below_cutoff : -1;
    return summary;
}

std::int64_t SampleSet::total_occurrences() const {
    std::int64_t total = 0;
    for (const Read& read : reads) total += read.occurrences;
    return total;
}

double SampleSet::best_energy() const {
    if (reads.empty()) throw std::invalid_argument("best_energy: empty sample set");
    double best = reads.front().energy;
    for (const Read& read : reads) best = std::min(best, read.energy);
    return best;
}

namespace {

// [0, 1) from the top 53 bits; uniform_real_distribution is not pinned by the
// standard, this is.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Spin> run_one_anneal(const Couplings& couplings, std::uint64_t read_seed, std::int64_t sweeps,
                                 double beta_min, double beta_max) {
    const int n = couplings.num_vars;
    std::mt19937_64 rng(read_seed);
    std::vector<Spin> spins(static_cast<std::size_t>(n));
    for (auto& s : spins) s = (rng() & 1u) ? Spin{-1} : Spin{1};
    std::vector<double> local = couplings.local_fields(spins);

    const double ratio = beta_max / beta_min;
    for (std::int64_t sweep = 0; sweep < sweeps; ++sweep) {
        const double beta = (sweeps == 1)
                                    ? beta_max
                                    : beta_min * std::pow(ratio, static_cast<double>(sweep) /
                                                                         static_cast<double>(sweeps - 1));
        for (int i = 0; i < n; ++i) {
            const auto fi = static_cast<std::size_t>(i);
            const double delta_e = -2.0 * spins[fi] * local[fi];
            bool accept;
            if (delta_e <= 0.0) {
                accept = true;
            } else {
                const double exponent = beta * delta_e;
                // exp(-46) is below the resolution of unit_double.
                accept = exponent <= 46.0 && unit_double(rng) < std::exp(-exponent);
            }
            if (accept) {
                spins[fi] = static_cast<Spin>(-spins[fi]);
                const double shift = 2.0 * spins[fi];
                for (int idx = couplings.offsets[fi]; idx < couplings.offsets[fi + 1]; ++idx) {
                    local[static_cast<std::size_t>(couplings.neighbor[static_cast<std::size_t>(idx)])] +=
                            shift * couplings.weight[static_cast<std::size_t>(idx)];
                }
            }
        }
    }
    return spins;
}

std::string schedule_descriptor(const SaParams& params) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "geometric(beta=[%g,%g],sweeps=%lld)", params.beta_min, params.beta_max,
                  static_cast<long long>(params.sweeps));
    return buf;
}

}  // namespace

SampleSet sa_sample(const IsingProblem& problem, const SaParams& params) {
    if (problem.num_vars() < 1) throw std::invalid_argument("sa_sample: empty problem");
    if (params.num_reads < 1) throw std::invalid_argument("sa_sample: num_reads must be at least 1");
    if (params.sweeps < 1) throw std::invalid_argument("sa_sample: sweeps must be at least 1");
    if (!(params.beta_min > 0) || !(params.beta_min < params.beta_max))
        throw std::invalid_argument("sa_sample: beta range must satisfy 0 < beta_min < beta_max");

    const Couplings couplings(problem);
    std::vector<std::vector<Spin>> configs(static_cast<std::size_t>(params.num_reads));

    auto run_range = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t read = begin; read < end; ++read) {
            configs[static_cast<std::size_t>(read)] =
                    run_one_anneal(couplings, mix_seed(params.seed, static_cast<std::uint64_t>(read)),
                                   params.sweeps, params.beta_min, params.beta_max);
        }
    };

    const int threads = std::max(1, params.threads);
    if (threads == 1 || params.num_reads == 1) {
        run_range(0, params.num_reads);
    } else {
        std::vector<std::thread> workers;
        const std::int64_t chunk = (params.num_reads + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const std::int64_t begin = w * chunk;
            const std::int64_t end = std::min<std::int64_t>(begin + chunk, params.num_reads);
            if (begin >= end) break;
            workers.emplace_back(run_range, begin, end);
        }
        for (auto& worker : workers) worker.join();
    }

    // Aggregate identical configurations; per-read seeding makes this
    // independent of execution order.
    std::sort(configs.begin(), configs.end());
    SampleSet samples;
    samples.sampler_info = {"sa", params.num_reads, params.sweeps, schedule_descriptor(params), params.seed};
    samples.problem_ref = problem.label();
    for (std::size_t i = 0; i < configs.size();) {
        std::size_t j = i;
        while (j < configs.size() && configs[j] == configs[i]) ++j;
        Read read;
        read.config = Configuration{configs[i]};
        read.energy = energy(problem, read.config);
        read.occurrences = static_cast<std::int64_t>(j - i);
        samples.reads.push_back(std::move(read));
        i = j;
    }
    std::stable_sort(samples.reads.begin(), samples.reads.end(),
                     [](const Read& a, const Read& b) { return a.energy < b.energy; });
    return samples;
}

}  // namespace chaintune
