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

#include "chaintune/spectrum.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "chaintune/embedded_problem.hpp"
#include "chaintune/samplers.hpp"

namespace chaintune {

namespace {

constexpr double kPlateauTol = 1e-9;

bool any_chain_broken(const Configuration& config, const Embedding& chains_compact) {
    for (const auto& [var, chain] : chains_compact.chains) {
        (void)var;
        const Spin first = config.spins[static_cast<std::size_t>(chain.front())];
        for (std::size_t i = 1; i < chain.size(); ++i) {
            if (config.spins[static_cast<std::size_t>(chain[i])] != first) return true;
        }
    }
    return false;
}

}  // namespace

GapScan gap_scan(const IsingProblem& problem, const Embedding& embedding, const HardwareGraph& graph,
                 const std::vector<double>& jc_values, const GapScanOptions& options) {
    if (jc_values.empty()) throw std::invalid_argument("gap_scan: no chain strengths given");
    for (std::size_t i = 0; i < jc_values.size(); ++i) {
        if (!(jc_values[i] > 0)) throw std::invalid_argument("gap_scan: chain strengths must be positive");
        if (i > 0 && jc_values[i] <= jc_values[i - 1])
            throw std::invalid_argument("gap_scan: chain strengths must be strictly ascending");
    }
    const ValidationReport report = validate(embedding, problem, graph);
    if (!report.ok()) throw std::invalid_argument("gap_scan: invalid embedding: " + report.to_string());
    const int total_qubits = embedding.total_qubits();
    if (total_qubits > kMaxExactVars)
        throw std::invalid_argument("gap_scan: embedding uses " + std::to_string(total_qubits) +
                                    " qubits, above the exact-enumeration cap of " + std::to_string(kMaxExactVars));

    GapScan scan;
    scan.logical_delta = exact_spectrum(problem).gap();

    scan.points.resize(jc_values.size());
    auto compute_point = [&](std::size_t index) {
        const double jc = jc_values[index];
        const EmbeddedProblem embedded = embed_problem(problem, embedding, graph, jc);
        const SpectrumSummary spectrum = exact_spectrum(embedded.physical);
        bool broken = false;
        for (const Configuration& ground : spectrum.ground_states) {
            if (any_chain_broken(ground, embedded.chains_compact)) {
                broken = true;
                break;
            }
        }
        scan.points[index] = {jc, broken ? 0.0 : spectrum.gap(), broken};
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < jc_values.size(); ++i) compute_point(i);
    } else {
        // Points are independent; results land in their slots, so the scan is
        // identical for any worker count.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const int num_workers = std::min<std::size_t>(threads, jc_values.size());
        workers.reserve(static_cast<std::size_t>(num_workers));
        for (int w = 0; w < num_workers; ++w) {
            workers.emplace_back([&]() {
                for (;;) {
                    const std::size_t index = next.fetch_add(1);
                    if (index >= jc_values.size()) return;
                    compute_point(index);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }

    for (const GapPoint& point : scan.points) {
        if (!scan.jc_star && point.delta_c > 0.0) scan.jc_star = point.jc;
        if (!scan.jc_kink && point.delta_c >= scan.logical_delta - kPlateauTol) scan.jc_kink = point.jc;
    }
    return scan;
}

}  // namespace chaintune
