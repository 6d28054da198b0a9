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
#include <filesystem>
#include <optional>
#include <string>

#include "chaintune/embedding.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/topology.hpp"
#include "nlohmann/json.hpp"

namespace chaintune::cli {

/// Everything a command needs besides its config document.
struct Context {
    nlohmann::json config;
    std::string config_hash;  // hash of the raw config file bytes
    std::filesystem::path out_dir;
    std::optional<std::uint64_t> seed_override;
    int threads = 1;

    /// Effective master seed: --seed wins over the config's "seed" field.
    std::uint64_t seed(std::uint64_t fallback = 0) const;
};

Context make_context(const std::filesystem::path& config_path, const std::string& out_dir,
                     std::optional<std::uint64_t> seed_override, int threads);

/// Graph spec: {"kind": "chimera"|"pegasus", "m": int} or {"file": path}.
HardwareGraph resolve_graph(const nlohmann::json& spec);

/// Embedding spec: a path string, or {"mode": "heuristic", "seed": int,
/// "max_tries": int}. The heuristic mode needs the problem; failure to embed
/// throws (the CLI reports it as a machine-readable error).
Embedding resolve_embedding(const nlohmann::json& spec, const IsingProblem& problem, const HardwareGraph& graph,
                            const Context& context);

int cmd_problem(const Context& context);
int cmd_embed(const Context& context);
int cmd_sample(const Context& context);
int cmd_tune(const Context& context);
int cmd_gapscan(const Context& context);
int cmd_experiment(const Context& context);

}  // namespace chaintune::cli
