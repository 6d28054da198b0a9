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

#include "chaintune/ising.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace chaintune {

bool Configuration::valid() const {
    for (Spin s : spins) {
        if (s != 1 && s != -1) return false;
    }
    return true;
}

Configuration Configuration::from_mask(std::uint32_t mask, int num_vars) {
    if (num_vars < 0 || num_vars > 32) throw std::invalid_argument("from_mask: num_vars must be in [0, 32]");
    Configuration c;
    c.spins.resize(static_cast<std::size_t>(num_vars));
    for (int i = 0; i < num_vars; ++i) {
        c.spins[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? Spin{-1} : Spin{1};
    }
    return c;
}

std::uint32_t Configuration::to_mask() const {
    if (spins.size() > 32) throw std::invalid_argument("to_mask: more than 32 spins");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (spins[i] < 0) mask |= (1u << i);
    }
    return mask;
}

IsingProblem::IsingProblem(int num_vars, std::string label)
        : num_vars_(num_vars), linear_(static_cast<std::size_t>(num_vars), 0.0), label_(std::move(label)) {
    if (num_vars < 0) throw std::invalid_argument("IsingProblem: negative num_vars");
}

double IsingProblem::linear(int i) const {
    if (i < 0 || i >= num_vars_) throw std::invalid_argument("linear: variable out of range");
    return linear_[static_cast<std::size_t>(i)];
}

void IsingProblem::set_linear(int i, double h) {
    if (i < 0 || i >= num_vars_) throw std::invalid_argument("set_linear: variable out of range");
    if (!std::isfinite(h)) throw std::invalid_argument("set_linear: field must be finite");
    linear_[static_cast<std::size_t>(i)] = h;
}

bool IsingProblem::has_linear() const {
    for (double h : linear_) {
        if (h != 0.0) return true;
    }
    return false;
}

void IsingProblem::set_quadratic(int i, int j, double value) {
    if (i == j) throw std::invalid_argument("set_quadratic: self-coupler");
    if (i < 0 || j < 0 || i >= num_vars_ || j >= num_vars_)
        throw std::invalid_argument("set_quadratic: variable out of range");
    if (!std::isfinite(value)) throw std::invalid_argument("set_quadratic: coupler must be finite");
    if (i > j) std::swap(i, j);
    quadratic_[{i, j}] = value;
}

std::vector<int> IsingProblem::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(num_vars_), 0);
    for (const auto& [pair, value] : quadratic_) {
        (void)value;
        ++deg[static_cast<std::size_t>(pair.first)];
        ++deg[static_cast<std::size_t>(pair.second)];
    }
    return deg;
}

double energy(const IsingProblem& problem, const Configuration& config) {
    if (config.size() != static_cast<std::size_t>(problem.num_vars()))
        throw std::invalid_argument("energy: configuration length does not match num_vars");
    double e = 0.0;
    for (const auto& [pair, value] : problem.quadratic()) {
        e += value * config.spins[static_cast<std::size_t>(pair.first)] *
             config.spins[static_cast<std::size_t>(pair.second)];
    }
    const auto& h = problem.linear_terms();
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] != 0.0) e += h[i] * config.spins[i];
    }
    return e;
}

namespace {

std::string format_value(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

IsingProblem gen_j1j2(int L, double J1, double J2) {
    if (L < 2) throw std::invalid_argument("gen_j1j2: L must be at least 2");
    if (!(J1 > 0)) throw std::invalid_argument("gen_j1j2: J1 must be positive");
    IsingProblem problem(L * L, "j1j2 L=" + std::to_string(L) + " J1=" + format_value(J1) +
                                        " J2=" + format_value(J2));
    auto var = [L](int r, int c) { return r * L + c; };
    for (int r = 0; r < L; ++r) {
        for (int c = 0; c < L; ++c) {
            if (c + 1 < L) problem.set_quadratic(var(r, c), var(r, c + 1), -J1);
            if (r + 1 < L) problem.set_quadratic(var(r, c), var(r + 1, c), -J1);
            if (r + 1 < L && c + 1 < L) {
                problem.set_quadratic(var(r, c), var(r + 1, c + 1), J2);
                problem.set_quadratic(var(r, c + 1), var(r + 1, c), J2);
            }
        }
    }
    return problem;
}

IsingProblem gen_fully_connected(int N, std::uint64_t seed) {
    if (N < 2) throw std::invalid_argument("gen_fully_connected: N must be at least 2");
    IsingProblem problem(N, "fully_connected N=" + std::to_string(N) + " seed=" + std::to_string(seed));
    std::mt19937_64 rng(seed);
    // rng() % 3 instead of uniform_int_distribution: the mt19937_64 output
    // sequence is pinned by the standard, the distribution mapping is not.
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            const int drawn = static_cast<int>(rng() % 3) - 1;
            problem.set_quadratic(i, j, static_cast<double>(-drawn));
        }
    }
    return problem;
}

}  // namespace chaintune
