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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chaintune/embedded_problem.hpp"
#include "chaintune/ising.hpp"
#include "chaintune/samplers.hpp"
#include "chaintune/spectrum.hpp"
#include "chaintune/tuner.hpp"

namespace chaintune {

// Problem JSON:
//   { "convention": "sum J s s + sum h s", "num_vars": N,
//     "linear": [[i, h_i], ...], "quadratic": [[i, j, J_ij], ...],
//     "label": string }
// Zero-valued couplers are stored explicitly; zero fields are omitted.
std::string problem_to_json(const IsingProblem& problem);
IsingProblem problem_from_json(const std::string& text);
void save_problem(const IsingProblem& problem, const std::filesystem::path& path);
IsingProblem load_problem(const std::filesystem::path& path);

// Sample set JSON:
//   { "sampler": {...}, "problem_ref": string,
//     "reads": [[[s0, s1, ...], energy, occurrences], ...] }
std::string sampleset_to_json(const SampleSet& samples);
SampleSet sampleset_from_json(const std::string& text);
void save_sampleset(const SampleSet& samples, const std::filesystem::path& path);
SampleSet load_sampleset(const std::filesystem::path& path);

// Embedded problem: the physical problem JSON plus a sidecar block
//   "embedded": { "chain_strength": real, "chains": [[var, [q...]], ...],
//                 "qubit_ids": [...], "source_label": string }
// where chains and terms are in the compact physical index space and
// qubit_ids maps compact indices back to hardware qubits.
std::string embedded_to_json(const EmbeddedProblem& embedded);
void save_embedded(const EmbeddedProblem& embedded, const std::filesystem::path& path);

std::string tune_result_to_json(const TuneResult& result);

/// 64-bit FNV-1a of a serialized object, as fixed-width hex; used to stamp
/// outputs with the exact inputs that produced them.
std::string content_hash_hex(const std::string& serialized);

/// Full-precision decimal for doubles ("%.17g"); round-trips exactly.
std::string format_double(double value);

/// CSV with "# key=value" metadata lines, then a header row, then data rows.
/// Keys are emitted in map order so files are byte-stable.
void write_csv(const std::filesystem::path& path, const std::map<std::string, std::string>& metadata,
               const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows);

/// Gap scan CSV: columns jc, delta_c, ground_has_break.
void write_gap_scan_csv(const GapScan& scan, const std::map<std::string, std::string>& metadata,
                        const std::filesystem::path& path);

/// Tuner trace CSV: columns step, jc, broken_fraction.
void write_tune_trace_csv(const TuneResult& result, const std::map<std::string, std::string>& metadata,
                          const std::filesystem::path& path);

}  // namespace chaintune
