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

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "nlohmann/json.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    int threads = 1;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file")->required();
    cmd->add_option("--out", args.out_dir, "Output directory (created if missing)");
    cmd->add_option("--seed", args.seed, "Override the config's seed");
    cmd->add_option("--threads", args.threads, "Worker threads; outputs do not depend on this")
            ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaintune: chain-strength analysis for minor-embedded Ising problems"};
    app.require_subcommand(1);

    struct Entry {
        const char* name;
        const char* help;
        std::function<int(const chaintune::cli::Context&)> run;
        CommonArgs args;
    };
    Entry entries[] = {
            {"problem", "Generate a benchmark problem and write problem.json", chaintune::cli::cmd_problem, {}},
            {"embed", "Find an embedding and write embedding.json", chaintune::cli::cmd_embed, {}},
            {"sample", "Run the annealing sampler, optionally through an embedding", chaintune::cli::cmd_sample, {}},
            {"tune", "Sweep the chain strength for the critical and operating points", chaintune::cli::cmd_tune, {}},
            {"gapscan", "Exact embedded-gap scan over chain strengths", chaintune::cli::cmd_gapscan, {}},
            {"experiment", "Run a named experiment preset (fig2, fig3_4, fig5_6)", chaintune::cli::cmd_experiment,
             {}},
    };
    for (Entry& entry : entries) {
        CLI::App* cmd = app.add_subcommand(entry.name, entry.help);
        add_common_options(cmd, entry.args);
        cmd->callback([&entry]() {
            const auto context = chaintune::cli::make_context(entry.args.config_path, entry.args.out_dir,
                                                              entry.args.seed, entry.args.threads);
            const int code = entry.run(context);
            if (code != 0) throw CLI::RuntimeError(code);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& exc) {
        return app.exit(exc);
    } catch (const std::exception& exc) {
        nlohmann::json error;
        error["error"] = exc.what();
        std::cerr << error.dump() << std::endl;
        return 1;
    }
    return 0;
}
