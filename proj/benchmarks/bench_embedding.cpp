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

#include <benchmark/benchmark.h>

#include "chaintune/embedding.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/topology.hpp"

namespace {

void GenPegasus(benchmark::State& state) {
    for (auto _ : state) {
        auto graph = chaintune::gen_pegasus(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(graph.num_edges());
    }
}
BENCHMARK(GenPegasus)->Arg(4)->Arg(6)->Arg(16);

void FindEmbedding(benchmark::State& state) {
    const auto problem = chaintune::gen_j1j2(static_cast<int>(state.range(0)), 1.0, 0.42);
    const auto graph = chaintune::gen_pegasus(6);
    for (auto _ : state) {
        auto result = chaintune::find_embedding(problem, graph, 20, 16);
        benchmark::DoNotOptimize(result.found);
    }
}
BENCHMARK(FindEmbedding)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
