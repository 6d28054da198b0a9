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

#include "chaintune/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "chaintune/hashing.hpp"
#include "json_io.hpp"

namespace chaintune {

namespace {

constexpr const char* kConvention = "sum J s s + sum h s";

}  // namespace

std::string problem_to_json(const IsingProblem& problem) {
    nlohmann::ordered_json doc;
    doc["convention"] = kConvention;
    doc["num_vars"] = problem.num_vars();
    auto& linear = doc["linear"] = nlohmann::ordered_json::array();
    const auto& h = problem.linear_terms();
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] != 0.0) linear.push_back({static_cast<int>(i), h[i]});
    }
    auto& quadratic = doc["quadratic"] = nlohmann::ordered_json::array();
    for (const auto& [pair, value] : problem.quadratic()) {
        quadratic.push_back({pair.first, pair.second, value});
    }
    doc["label"] = problem.label();
    return doc.dump();
}

IsingProblem problem_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    if (doc.contains("convention") && doc.at("convention").get<std::string>() != kConvention)
        throw std::runtime_error("unsupported convention \"" + doc.at("convention").get<std::string>() + "\"");
    IsingProblem problem(doc.at("num_vars").get<int>(), doc.value("label", std::string{}));
    for (const auto& entry : doc.value("linear", nlohmann::json::array())) {
        if (!entry.is_array() || entry.size() != 2) throw std::runtime_error("linear entry is not [i, h]");
        problem.set_linear(entry[0].get<int>(), entry[1].get<double>());
    }
    for (const auto& entry : doc.value("quadratic", nlohmann::json::array())) {
        if (!entry.is_array() || entry.size() != 3) throw std::runtime_error("quadratic entry is not [i, j, J]");
        const int i = entry[0].get<int>();
        const int j = entry[1].get<int>();
        if (i >= j) throw std::runtime_error("quadratic entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                             ") violates i < j");
        if (problem.quadratic().count({i, j}))
            throw std::runtime_error("duplicate coupler (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        problem.set_quadratic(i, j, entry[2].get<double>());
    }
    return problem;
}

void save_problem(const IsingProblem& problem, const std::filesystem::path& path) {
    detail::atomic_write_file(path, problem_to_json(problem));
}

IsingProblem load_problem(const std::filesystem::path& path) {
    try {
        return problem_from_json(detail::read_file(path));
    } catch (const std::exception& exc) {
        throw std::runtime_error(path.string() + ": " + exc.what());
    }
}

namespace {

nlohmann::ordered_json sampler_info_to_json(const SamplerInfo& info) {
    nlohmann::ordered_json doc;
    doc["kind"] = info.kind;
    doc["num_reads"] = info.num_reads;
    doc["sweeps"] = info.sweeps;
    doc["schedule"] = info.schedule;
    doc["seed"] = info.seed;
    return doc;
}

}  // namespace

std::string sampleset_to_json(const SampleSet& samples) {
    nlohmann::ordered_json doc;
    doc["sampler"] = sampler_info_to_json(samples.sampler_info);
    doc["problem_ref"] = samples.problem_ref;
    auto& reads = doc["reads"] = nlohmann::ordered_json::array();
    for (const Read& read : samples.reads) {
        nlohmann::ordered_json spins = nlohmann::ordered_json::array();
        for (Spin s : read.config.spins) spins.push_back(static_cast<int>(s));
        reads.push_back({std::move(spins), read.energy, read.occurrences});
    }
    return doc.dump();
}

SampleSet sampleset_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    SampleSet samples;
    const auto& sampler = doc.at("sampler");
    samples.sampler_info.kind = sampler.at("kind").get<std::string>();
    samples.sampler_info.num_reads = sampler.at("num_reads").get<std::int64_t>();
    samples.sampler_info.sweeps = sampler.value("sweeps", std::int64_t{0});
    samples.sampler_info.schedule = sampler.value("schedule", std::string{});
    samples.sampler_info.seed = sampler.value("seed", std::uint64_t{0});
    samples.problem_ref = doc.value("problem_ref", std::string{});
    for (const auto& entry : doc.at("reads")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::runtime_error("read entry is not [[spins], energy, occurrences]");
        Read read;
        for (const auto& s : entry[0]) {
            const int spin = s.get<int>();
            if (spin != 1 && spin != -1) throw std::runtime_error("spin value must be +1 or -1");
            read.config.spins.push_back(static_cast<Spin>(spin));
        }
        read.energy = entry[1].get<double>();
        read.occurrences = entry[2].get<std::int64_t>();
        if (read.occurrences < 1) throw std::runtime_error("occurrences must be positive");
        samples.reads.push_back(std::move(read));
    }
    return samples;
}

void save_sampleset(const SampleSet& samples, const std::filesystem::path& path) {
    detail::atomic_write_file(path, sampleset_to_json(samples));
}

SampleSet load_sampleset(const std::filesystem::path& path) {
    try {
        return sampleset_from_json(detail::read_file(path));
    } catch (const std::exception& exc) {
        throw std::runtime_error(path.string() + ": " + exc.what());
    }
}

std::string embedded_to_json(const EmbeddedProblem& embedded) {
    auto doc = nlohmann::ordered_json::parse(problem_to_json(embedded.physical));
    nlohmann::ordered_json sidecar;
    sidecar["chain_strength"] = embedded.chain_strength;
    auto& chains = sidecar["chains"] = nlohmann::ordered_json::array();
    for (const auto& [var, chain] : embedded.chains_compact.chains) chains.push_back({var, chain});
    sidecar["qubit_ids"] = embedded.qubit_ids;
    sidecar["source_label"] = embedded.source_label;
    doc["embedded"] = std::move(sidecar);
    return doc.dump();
}

void save_embedded(const EmbeddedProblem& embedded, const std::filesystem::path& path) {
    detail::atomic_write_file(path, embedded_to_json(embedded));
}

std::string tune_result_to_json(const TuneResult& result) {
    nlohmann::ordered_json doc;
    doc["status"] = tune_status_name(result.status);
    doc["jc_default"] = result.jc_default;
    doc["jc_star"] = result.jc_star ? nlohmann::ordered_json(*result.jc_star) : nlohmann::ordered_json(nullptr);
    doc["jc_optimal"] =
            result.jc_optimal ? nlohmann::ordered_json(*result.jc_optimal) : nlohmann::ordered_json(nullptr);
    auto& trace = doc["trace"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        const TuneStep& step = result.trace[i];
        nlohmann::ordered_json entry;
        entry["step"] = i + 1;
        entry["jc"] = step.jc;
        entry["broken_fraction"] = step.broken_fraction;
        entry["reads"] = step.reads_used;
        trace.push_back(std::move(entry));
    }
    return doc.dump();
}

std::string content_hash_hex(const std::string& serialized) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(serialized)));
    return buf;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(const std::filesystem::path& path, const std::map<std::string, std::string>& metadata,
               const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (const auto& [key, value] : metadata) out << "# " << key << "=" << value << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != columns.size()) throw std::invalid_argument("write_csv: row width mismatch");
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
    detail::atomic_write_file(path, out.str());
}

void write_gap_scan_csv(const GapScan& scan, const std::map<std::string, std::string>& metadata,
                        const std::filesystem::path& path) {
    auto meta = metadata;
    meta["logical_delta"] = format_double(scan.logical_delta);
    meta["jc_star"] = scan.jc_star ? format_double(*scan.jc_star) : "none";
    meta["jc_kink"] = scan.jc_kink ? format_double(*scan.jc_kink) : "none";
    std::vector<std::vector<std::string>> rows;
    rows.reserve(scan.points.size());
    for (const GapPoint& point : scan.points) {
        rows.push_back({format_double(point.jc), format_double(point.delta_c),
                        point.ground_has_break ? "1" : "0"});
    }
    write_csv(path, meta, {"jc", "delta_c", "ground_has_break"}, rows);
}

void write_tune_trace_csv(const TuneResult& result, const std::map<std::string, std::string>& metadata,
                          const std::filesystem::path& path) {
    auto meta = metadata;
    meta["status"] = tune_status_name(result.status);
    meta["jc_default"] = format_double(result.jc_default);
    if (result.jc_star) meta["jc_star"] = format_double(*result.jc_star);
    if (result.jc_optimal) meta["jc_optimal"] = format_double(*result.jc_optimal);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(result.trace.size());
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        const TuneStep& step = result.trace[i];
        rows.push_back({std::to_string(i + 1), format_double(step.jc), format_double(step.broken_fraction)});
    }
    write_csv(path, meta, {"step", "jc", "broken_fraction"}, rows);
}

}  // namespace chaintune
