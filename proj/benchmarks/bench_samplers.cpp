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

#include "chaintune/ising.hpp"
#include "chaintune/samplers.hpp"

namespace {

void ExactSpectrum(benchmark::State& state) {
    const auto problem = chaintune::gen_fully_connected(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        auto summary = chaintune::exact_spectrum(problem);
        benchmark::DoNotOptimize(summary.ground_energy);
    }
    state.SetItemsProcessed(state.iterations() * (1ll << state.range(0)));
}
BENCHMARK(ExactSpectrum)->Arg(16)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond);

void SaSweeps(benchmark::State& state) {
    const auto problem = chaintune::gen_j1j2(static_cast<int>(state.range(0)), 1.0, 0.42);
    chaintune::SaParams params;
    params.num_reads = 10;
    params.sweeps = 200;
    params.seed = 3;
    for (auto _ : state) {
        auto samples = chaintune::sa_sample(problem, params);
        benchmark::DoNotOptimize(samples.reads.size());
    }
    state.SetItemsProcessed(state.iterations() * params.num_reads * params.sweeps * problem.num_vars());
}
BENCHMARK(SaSweeps)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
