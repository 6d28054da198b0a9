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

// The experiment harness: chain-strength studies over the two benchmark
// families, emitting plot-ready CSVs. Every output carries the config hash
// and the sampler kind, so no file can pass for hardware data.

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "chaintune/chains.hpp"
#include "chaintune/embedded_problem.hpp"
#include "chaintune/hashing.hpp"
#include "chaintune/samplers.hpp"
#include "chaintune/serialization.hpp"
#include "chaintune/spectrum.hpp"
#include "chaintune/tuner.hpp"
#include "cli_support.hpp"

namespace chaintune::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kGroundTol = 1e-9;

std::string format_ratio(double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", ratio);
    return buf;
}

struct SamplerSettings {
    std::int64_t search_reads = 100;
    std::int64_t measure_reads = 5000;
    std::int64_t sweeps = 1000;
    double beta_min = 0.1;
    double beta_max = 10.0;
    int step_cap = 50;
    double factor = 1.2;
    double required_unbroken_fraction = 1.0;
    UnembedPolicy policy = UnembedPolicy::majority_vote;
    bool include_zero_couplers = true;
};

SamplerSettings sampler_settings_from(const json& config) {
    SamplerSettings s;
    s.search_reads = config.value("search_reads", s.search_reads);
    s.measure_reads = config.value("measure_reads", s.measure_reads);
    s.sweeps = config.value("sweeps", s.sweeps);
    if (config.contains("beta")) {
        s.beta_min = config.at("beta").at(0).get<double>();
        s.beta_max = config.at("beta").at(1).get<double>();
    }
    s.step_cap = config.value("step_cap", s.step_cap);
    s.factor = config.value("factor", s.factor);
    s.required_unbroken_fraction = config.value("required_unbroken_fraction", s.required_unbroken_fraction);
    const std::string policy = config.value("unembed_policy", std::string("majority_vote"));
    if (policy == "discard_broken") s.policy = UnembedPolicy::discard_broken;
    else if (policy != "majority_vote") throw std::runtime_error("unknown unembed_policy \"" + policy + "\"");
    s.include_zero_couplers = config.value("include_zero_couplers", s.include_zero_couplers);
    return s;
}

std::string sampler_descriptor(const SamplerSettings& s) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "sa(sweeps=%lld,beta=[%g,%g],search_reads=%lld,measure_reads=%lld)",
                  static_cast<long long>(s.sweeps), s.beta_min, s.beta_max,
                  static_cast<long long>(s.search_reads), static_cast<long long>(s.measure_reads));
    return buf;
}

struct MeasuredPoint {
    double jc = 0.0;
    SampleSet logical;
    double broken_fraction = 0.0;
};

MeasuredPoint measure_at(const IsingProblem& problem, const Embedding& embedding, const HardwareGraph& graph,
                         double jc, const SamplerSettings& settings, std::uint64_t seed, std::uint64_t tie_seed,
                         int threads) {
    const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, jc);
    SaParams params;
    params.num_reads = settings.measure_reads;
    params.sweeps = settings.sweeps;
    params.beta_min = settings.beta_min;
    params.beta_max = settings.beta_max;
    params.seed = seed;
    params.threads = threads;
    const SampleSet physical = sa_sample(embedded.physical, params);
    const ChainReport report = detect_breaks(physical, embedded.chains_compact);
    MeasuredPoint point;
    point.jc = jc;
    point.logical = unembed(physical, embedded.chains_compact, problem, tie_seed, settings.policy);
    point.broken_fraction = report.aggregate_broken_fraction;
    return point;
}

// Gap estimate in the style of shot-based studies: the interval between the
// lowest and the second-lowest distinct energies seen in the reads.
double estimate_delta_from_reads(const SampleSet& samples) {
    if (samples.reads.empty()) return std::numeric_limits<double>::quiet_NaN();
    const double best = samples.best_energy();
    double second = std::numeric_limits<double>::infinity();
    for (const Read& read : samples.reads) {
        if (read.energy > best + kGroundTol) second = std::min(second, read.energy);
    }
    if (!std::isfinite(second)) return std::numeric_limits<double>::quiet_NaN();
    return second - best;
}

SampleSet merged_sets(const SampleSet& a, const SampleSet& b) {
    SampleSet merged = a;
    merged.reads.insert(merged.reads.end(), b.reads.begin(), b.reads.end());
    merged.sampler_info.num_reads = a.sampler_info.num_reads + b.sampler_info.num_reads;
    return merged;
}

int run_fig2(const Context& context) {
    const json& config = context.config;
    const double j1 = config.value("J1", 1.0);
    const int lattice = config.value("L", 4);
    const std::vector<double> ratios = config.value("ratios", std::vector<double>{0.42, 0.46, 0.48});
    const HardwareGraph graph = resolve_graph(config.at("graph"));

    std::vector<double> jc_values;
    {
        const json grid = config.contains("jc_grid")
                                  ? config.at("jc_grid")
                                  : json{{"start", 0.5 * j1}, {"stop", 4.0 * j1}, {"step", 0.05 * j1}};
        const double start = grid.at("start").get<double>();
        const double stop = grid.at("stop").get<double>();
        const double step = grid.at("step").get<double>();
        const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9));
        for (std::int64_t k = 0; k <= count; ++k)
            jc_values.push_back(std::round((start + static_cast<double>(k) * step) * 1e9) / 1e9);
    }

    std::vector<std::vector<std::string>> summary;
    for (const double ratio : ratios) {
        const IsingProblem problem = gen_j1j2(lattice, j1, ratio * j1);
        const Embedding embedding = resolve_embedding(config.at("embedding"), problem, graph, context);
        GapScanOptions options;
        options.threads = context.threads;
        const GapScan scan = gap_scan(problem, embedding, graph, jc_values, options);

        write_gap_scan_csv(scan,
                           {{"config_hash", context.config_hash},
                            {"sampler", "exact"},
                            {"problem", problem.label()},
                            {"embedding_hash", content_hash_hex(embedding_to_json(embedding))},
                            {"j2_over_j1", format_ratio(ratio)}},
                           context.out_dir / ("fig2_ratio_" + format_ratio(ratio) + ".csv"));
        summary.push_back({format_ratio(ratio),
                           scan.jc_star ? format_double(*scan.jc_star) : "none",
                           scan.jc_kink ? format_double(*scan.jc_kink) : "none",
                           format_double(scan.logical_delta)});
    }
    write_csv(context.out_dir / "fig2_summary.csv",
              {{"config_hash", context.config_hash}, {"sampler", "exact"}},
              {"j2_over_j1", "jc_star", "jc_kink", "logical_delta"}, summary);
    return 0;
}

int run_fig3_4(const Context& context) {
    const json& config = context.config;
    const double j1 = config.value("J1", 1.0);
    const int lattice = config.value("L", 8);
    const std::vector<double> ratios =
            config.value("ratios", std::vector<double>{0.40, 0.42, 0.44, 0.46, 0.48});
    const HardwareGraph graph = resolve_graph(config.at("graph"));
    const SamplerSettings settings = sampler_settings_from(config);
    const std::uint64_t master = context.seed(1);

    // The logical adjacency is the same for every ratio, so one embedding
    // serves the whole sweep.
    const IsingProblem shape_problem = gen_j1j2(lattice, j1, 0.5 * j1);
    const Embedding embedding = resolve_embedding(config.at("embedding"), shape_problem, graph, context);

    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < ratios.size(); ++r) {
        const double ratio = ratios[r];
        const IsingProblem problem = gen_j1j2(lattice, j1, ratio * j1);

        TuneParams tune_params;
        tune_params.search_reads = settings.search_reads;
        tune_params.step_cap = settings.step_cap;
        tune_params.optimal_factor = settings.factor;
        tune_params.required_unbroken_fraction = settings.required_unbroken_fraction;
        tune_params.sweeps = settings.sweeps;
        tune_params.beta_min = settings.beta_min;
        tune_params.beta_max = settings.beta_max;
        tune_params.seed = mix_seed(master, 1000 + r);
        tune_params.threads = context.threads;
        tune_params.include_zero_couplers = settings.include_zero_couplers;
        const TuneResult tuned = tune(problem, embedding, graph, tune_params);
        if (tuned.status != TuneStatus::found)
            throw std::runtime_error("tuner did not converge for J2/J1=" + format_ratio(ratio) + " (status " +
                                     tune_status_name(tuned.status) + ")");

        const std::uint64_t tie_seed = mix_seed(master, 4000 + r);
        const MeasuredPoint at_default = measure_at(problem, embedding, graph, tuned.jc_default, settings,
                                                    mix_seed(master, 2000 + r), tie_seed, context.threads);
        const MeasuredPoint at_optimal = measure_at(problem, embedding, graph, *tuned.jc_optimal, settings,
                                                    mix_seed(master, 3000 + r), tie_seed, context.threads);

        double delta_exact = std::numeric_limits<double>::quiet_NaN();
        double reference;
        if (problem.num_vars() <= kMaxExactVars) {
            const SpectrumSummary spectrum = exact_spectrum(problem);
            delta_exact = spectrum.gap();
            reference = spectrum.ground_energy;
        } else {
            reference = std::min(at_default.logical.best_energy(), at_optimal.logical.best_energy());
        }
        const SampleSet merged = merged_sets(at_default.logical, at_optimal.logical);
        const double delta_estimate = estimate_delta_from_reads(merged);

        rows.push_back({format_ratio(ratio), format_double(delta_exact), format_double(delta_estimate),
                        format_double(tuned.jc_default), format_double(*tuned.jc_star),
                        format_double(*tuned.jc_optimal),
                        format_double(success_probability(at_default.logical, reference, kGroundTol)),
                        format_double(success_probability(at_optimal.logical, reference, kGroundTol)),
                        format_double(reference), std::to_string(embedding.total_qubits()),
                        format_double(at_default.broken_fraction), format_double(at_optimal.broken_fraction)});
    }
    write_csv(context.out_dir / "fig3_4.csv",
              {{"config_hash", context.config_hash},
               {"sampler", sampler_descriptor(settings)},
               {"lattice", std::to_string(lattice)},
               {"seed", std::to_string(master)}},
              {"j2_over_j1", "delta_exact", "delta_estimate", "jc_default", "jc_star", "jc_optimal", "p_default",
               "p_optimal", "reference_energy", "embedded_qubits", "broken_frac_default", "broken_frac_optimal"},
              rows);
    return 0;
}

int run_fig5_6(const Context& context) {
    const json& config = context.config;
    const std::vector<int> sizes = config.value("sizes", std::vector<int>{8, 12, 16, 20});
    const HardwareGraph graph = resolve_graph(config.at("graph"));
    const SamplerSettings settings = sampler_settings_from(config);
    const std::uint64_t master = context.seed(1);
    const std::uint64_t instance_seed = config.value("instance_seed", std::uint64_t{1});

    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < sizes.size(); ++r) {
        const int n = sizes[r];
        const IsingProblem problem = gen_fully_connected(n, mix_seed(instance_seed, static_cast<std::uint64_t>(n)));
        json embed_spec = config.contains("embedding") ? config.at("embedding") : json{{"mode", "heuristic"}};
        if (embed_spec.is_object() && !embed_spec.contains("seed"))
            embed_spec["seed"] = mix_seed(master, 5000 + r);
        const Embedding embedding = resolve_embedding(embed_spec, problem, graph, context);

        TuneParams tune_params;
        tune_params.search_reads = settings.search_reads;
        tune_params.step_cap = settings.step_cap;
        tune_params.optimal_factor = settings.factor;
        tune_params.required_unbroken_fraction = settings.required_unbroken_fraction;
        tune_params.sweeps = settings.sweeps;
        tune_params.beta_min = settings.beta_min;
        tune_params.beta_max = settings.beta_max;
        tune_params.seed = mix_seed(master, 1000 + r);
        tune_params.threads = context.threads;
        tune_params.include_zero_couplers = settings.include_zero_couplers;
        const TuneResult tuned = tune(problem, embedding, graph, tune_params);
        if (tuned.status != TuneStatus::found)
            throw std::runtime_error("tuner did not converge for N=" + std::to_string(n) + " (status " +
                                     tune_status_name(tuned.status) + ")");

        const std::uint64_t tie_seed = mix_seed(master, 4000 + r);
        const MeasuredPoint at_default = measure_at(problem, embedding, graph, tuned.jc_default, settings,
                                                    mix_seed(master, 2000 + r), tie_seed, context.threads);
        const MeasuredPoint at_optimal = measure_at(problem, embedding, graph, *tuned.jc_optimal, settings,
                                                    mix_seed(master, 3000 + r), tie_seed, context.threads);

        double delta_exact = std::numeric_limits<double>::quiet_NaN();
        double reference;
        if (problem.num_vars() <= kMaxExactVars) {
            const SpectrumSummary spectrum = exact_spectrum(problem);
            delta_exact = spectrum.gap();
            reference = spectrum.ground_energy;
        } else {
            reference = std::min(at_default.logical.best_energy(), at_optimal.logical.best_energy());
        }

        rows.push_back({std::to_string(n), std::to_string(embedding.total_qubits()),
                        format_double(delta_exact), format_double(tuned.jc_default),
                        format_double(*tuned.jc_star), format_double(*tuned.jc_optimal),
                        format_double(success_probability(at_default.logical, reference, kGroundTol)),
                        format_double(success_probability(at_optimal.logical, reference, kGroundTol)),
                        format_double(reference)});
    }
    write_csv(context.out_dir / "fig5_6.csv",
              {{"config_hash", context.config_hash},
               {"sampler", sampler_descriptor(settings)},
               {"seed", std::to_string(master)}},
              {"n", "embedded_qubits", "delta_exact", "jc_default", "jc_star", "jc_optimal", "p_default",
               "p_optimal", "reference_energy"},
              rows);
    return 0;
}

}  // namespace

int cmd_experiment(const Context& context) {
    const std::string name = context.config.at("name").get<std::string>();
    if (name == "fig2") return run_fig2(context);
    if (name == "fig3_4") return run_fig3_4(context);
    if (name == "fig5_6") return run_fig5_6(context);
    throw std::runtime_error("unknown experiment \"" + name + "\" (expected fig2, fig3_4, or fig5_6)");
}

}  // namespace chaintune::cli
