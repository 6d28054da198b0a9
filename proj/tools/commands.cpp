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

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "chaintune/chains.hpp"
#include "chaintune/detail/io.hpp"
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

std::uint64_t Context::seed(std::uint64_t fallback) const {
    if (seed_override) return *seed_override;
    if (config.contains("seed")) return config.at("seed").get<std::uint64_t>();
    return fallback;
}

Context make_context(const fs::path& config_path, const std::string& out_dir,
                     std::optional<std::uint64_t> seed_override, int threads) {
    Context context;
    const std::string raw = detail::read_file(config_path);
    try {
        context.config = json::parse(raw);
    } catch (const json::parse_error& exc) {
        throw std::runtime_error(config_path.string() + ": " + exc.what());
    }
    context.config_hash = content_hash_hex(raw);
    context.out_dir = out_dir;
    context.seed_override = seed_override;
    context.threads = threads;
    fs::create_directories(context.out_dir);
    return context;
}

HardwareGraph resolve_graph(const json& spec) {
    if (spec.contains("file")) return load_graph(spec.at("file").get<std::string>());
    const std::string kind = spec.at("kind").get<std::string>();
    const int m = spec.at("m").get<int>();
    if (kind == "chimera") return gen_chimera(m);
    if (kind == "pegasus") return gen_pegasus(m);
    throw std::runtime_error("unknown graph kind \"" + kind + "\" (expected chimera, pegasus, or {\"file\": ...})");
}

Embedding resolve_embedding(const json& spec, const IsingProblem& problem, const HardwareGraph& graph,
                            const Context& context) {
    if (spec.is_string()) return load_embedding(spec.get<std::string>(), graph);
    const std::string mode = spec.value("mode", std::string("heuristic"));
    if (mode != "heuristic")
        throw std::runtime_error("unknown embedding mode \"" + mode + "\" (expected a path or heuristic spec)");
    const auto seed = spec.contains("seed") ? spec.at("seed").get<std::uint64_t>() : context.seed();
    const int max_tries = spec.value("max_tries", 32);
    EmbedResult result = find_embedding(problem, graph, seed, max_tries);
    if (!result.found) throw std::runtime_error("embedding failed: " + result.message);
    return std::move(result.embedding);
}

namespace {

IsingProblem problem_from_config(const json& config, const Context& context) {
    const std::string family = config.at("family").get<std::string>();
    IsingProblem problem;
    if (family == "j1j2") {
        problem = gen_j1j2(config.at("L").get<int>(), config.value("J1", 1.0), config.at("J2").get<double>());
    } else if (family == "fully_connected") {
        problem = gen_fully_connected(config.at("N").get<int>(), context.seed());
    } else {
        throw std::runtime_error("unknown problem family \"" + family + "\" (expected j1j2 or fully_connected)");
    }
    if (config.contains("label")) problem.set_label(config.at("label").get<std::string>());
    return problem;
}

std::vector<double> jc_values_from_config(const json& config) {
    if (config.contains("jc_values")) return config.at("jc_values").get<std::vector<double>>();
    const auto& grid = config.at("jc_grid");
    const double start = grid.at("start").get<double>();
    const double stop = grid.at("stop").get<double>();
    const double step = grid.at("step").get<double>();
    if (!(step > 0) || !(stop >= start)) throw std::runtime_error("jc_grid requires step > 0 and stop >= start");
    std::vector<double> values;
    const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9));
    values.reserve(static_cast<std::size_t>(count) + 1);
    for (std::int64_t k = 0; k <= count; ++k) {
        // Snap to 1e-9 so decimal grids print as decimals.
        values.push_back(std::round((start + static_cast<double>(k) * step) * 1e9) / 1e9);
    }
    return values;
}

UnembedPolicy unembed_policy_from(const json& config) {
    const std::string name = config.value("unembed_policy", std::string("majority_vote"));
    if (name == "majority_vote") return UnembedPolicy::majority_vote;
    if (name == "discard_broken") return UnembedPolicy::discard_broken;
    throw std::runtime_error("unknown unembed_policy \"" + name + "\"");
}

json chain_report_to_json(const ChainReport& report) {
    json doc;
    doc["aggregate_broken_fraction"] = report.aggregate_broken_fraction;
    doc["unbroken_read_fraction"] = report.unbroken_read_fraction;
    auto& rows = doc["per_read"] = json::array();
    for (const ChainBreaks& breaks : report.per_read) {
        rows.push_back({{"broken_chain_ids", breaks.broken_chain_ids},
                        {"broken_fraction", breaks.broken_fraction}});
    }
    return doc;
}

}  // namespace

int cmd_problem(const Context& context) {
    const IsingProblem problem = problem_from_config(context.config, context);
    save_problem(problem, context.out_dir / "problem.json");
    return 0;
}

int cmd_embed(const Context& context) {
    const IsingProblem problem = load_problem(context.config.at("problem").get<std::string>());
    const HardwareGraph graph = resolve_graph(context.config.at("graph"));
    const auto seed = context.seed();
    const int max_tries = context.config.value("max_tries", 32);
    EmbedResult result = find_embedding(problem, graph, seed, max_tries);
    if (!result.found) throw std::runtime_error("embedding failed: " + result.message);
    save_embedding(result.embedding, context.out_dir / "embedding.json");
    if (context.config.value("save_graph", false)) save_graph(graph, context.out_dir / "graph.json");
    return 0;
}

int cmd_sample(const Context& context) {
    const json& config = context.config;
    const IsingProblem problem = load_problem(config.at("problem").get<std::string>());

    SaParams params;
    params.num_reads = config.value("num_reads", std::int64_t{100});
    params.sweeps = config.value("sweeps", std::int64_t{1000});
    if (config.contains("beta")) {
        params.beta_min = config.at("beta").at(0).get<double>();
        params.beta_max = config.at("beta").at(1).get<double>();
    }
    params.seed = context.seed();
    params.threads = context.threads;

    if (!config.contains("embedding")) {
        const SampleSet samples = sa_sample(problem, params);
        save_sampleset(samples, context.out_dir / "samples.json");
        return 0;
    }

    const HardwareGraph graph = resolve_graph(config.at("graph"));
    const Embedding embedding = resolve_embedding(config.at("embedding"), problem, graph, context);
    double chain_strength;
    if (!config.contains("chain_strength") || config.at("chain_strength") == "default") {
        chain_strength = default_chain_strength(problem, config.value("include_zero_couplers", true));
    } else {
        chain_strength = config.at("chain_strength").get<double>();
    }
    const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, chain_strength);

    const SampleSet physical = sa_sample(embedded.physical, params);
    const ChainReport report = detect_breaks(physical, embedded.chains_compact);
    const std::uint64_t tie_seed = config.contains("tie_seed") ? config.at("tie_seed").get<std::uint64_t>()
                                                               : mix_seed(params.seed, 0x7135);
    const SampleSet logical =
            unembed(physical, embedded.chains_compact, problem, tie_seed, unembed_policy_from(config));

    save_embedded(embedded, context.out_dir / "embedded.json");
    save_sampleset(physical, context.out_dir / "samples_physical.json");
    save_sampleset(logical, context.out_dir / "samples_logical.json");
    detail::atomic_write_file(context.out_dir / "chain_report.json", chain_report_to_json(report).dump());
    return 0;
}

int cmd_tune(const Context& context) {
    const json& config = context.config;
    const IsingProblem problem = load_problem(config.at("problem").get<std::string>());
    const HardwareGraph graph = resolve_graph(config.at("graph"));
    const Embedding embedding = resolve_embedding(config.at("embedding"), problem, graph, context);

    TuneParams params;
    params.search_reads = config.value("search_reads", std::int64_t{100});
    params.step_cap = config.value("step_cap", 50);
    params.optimal_factor = config.value("factor", 1.2);
    params.required_unbroken_fraction = config.value("required_unbroken_fraction", 1.0);
    params.sweeps = config.value("sweeps", std::int64_t{1000});
    if (config.contains("beta")) {
        params.beta_min = config.at("beta").at(0).get<double>();
        params.beta_max = config.at("beta").at(1).get<double>();
    }
    params.seed = context.seed();
    params.threads = context.threads;
    params.include_zero_couplers = config.value("include_zero_couplers", true);

    const TuneResult result = tune(problem, embedding, graph, params);
    detail::atomic_write_file(context.out_dir / "tune.json", tune_result_to_json(result));
    write_tune_trace_csv(result,
                         {{"config_hash", context.config_hash},
                          {"sampler", "sa"},
                          {"problem", problem.label()},
                          {"seed", std::to_string(params.seed)}},
                         context.out_dir / "tune_trace.csv");
    return 0;
}

int cmd_gapscan(const Context& context) {
    const json& config = context.config;
    const IsingProblem problem = load_problem(config.at("problem").get<std::string>());
    const HardwareGraph graph = resolve_graph(config.at("graph"));
    const Embedding embedding = resolve_embedding(config.at("embedding"), problem, graph, context);
    const std::vector<double> jc_values = jc_values_from_config(config);

    GapScanOptions options;
    options.threads = context.threads;
    const GapScan scan = gap_scan(problem, embedding, graph, jc_values, options);

    write_gap_scan_csv(scan,
                       {{"config_hash", context.config_hash},
                        {"sampler", "exact"},
                        {"problem", problem.label()},
                        {"embedding_hash", content_hash_hex(embedding_to_json(embedding))}},
                       context.out_dir / "gapscan.csv");
    return 0;
}

}  // namespace chaintune::cli
