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

#include <optional>
#include <vector>

#include "chaintune/embedding.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/topology.hpp"

namespace chaintune {

struct GapPoint {
    double jc = 0.0;
    double delta_c = 0.0;
    bool ground_has_break = false;
};

/// Embedded-spectrum gap as a function of chain strength.
struct GapScan {
    std::vector<GapPoint> points;  // ascending in jc
    double logical_delta = 0.0;    // exact gap of the unembedded problem
    std::optional<double> jc_star;  // smallest scanned jc with delta_c > 0
    std::optional<double> jc_kink;  // plateau onset: delta_c reaches logical_delta
};

struct GapScanOptions {
    int threads = 1;
};

/// For each chain strength, build the embedded problem and enumerate its
/// exact spectrum. delta_c is the embedded gap when every degenerate ground
/// state has all chains intact, and 0 as soon as any ground state carries a
/// break. Preconditions: jc values positive ascending; both the logical
/// problem and the embedding's qubit count within the exact-enumeration cap.
GapScan gap_scan(const IsingProblem& problem, const Embedding& embedding, const HardwareGraph& graph,
                 const std::vector<double>& jc_values, const GapScanOptions& options = {});

}  // namespace chaintune
