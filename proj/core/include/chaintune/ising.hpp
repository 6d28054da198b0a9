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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chaintune {

/// One spin value, +1 or -1.
using Spin = std::int8_t;

/// A classical spin configuration, logical or physical.
struct Configuration {
    std::vector<Spin> spins;

    Configuration() = default;
    explicit Configuration(std::vector<Spin> s) : spins(std::move(s)) {}

    std::size_t size() const { return spins.size(); }

    /// True iff every entry is +1 or -1.
    bool valid() const;

    /// Pack/unpack for problems with at most 32 variables.
    /// Bit i set <=> spins[i] == -1, so the all-up state is mask 0.
    static Configuration from_mask(std::uint32_t mask, int num_vars);
    std::uint32_t to_mask() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// An Ising problem in the minimization convention
///
///     E(s) = sum_{i<j} J_ij s_i s_j + sum_i h_i s_i,   s_i in {-1,+1}.
///
/// Generators translate published model conventions into this form.
/// Couplers set to an explicit 0 are kept: they count toward connectivity
/// statistics and must round-trip through serialization.
class IsingProblem {
  public:
    IsingProblem() = default;
    explicit IsingProblem(int num_vars, std::string label = {});

    int num_vars() const { return num_vars_; }

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    double linear(int i) const;
    void set_linear(int i, double h);
    const std::vector<double>& linear_terms() const { return linear_; }
    bool has_linear() const;

    /// Couplers are stored with i < j; setting the same pair twice overwrites.
    void set_quadratic(int i, int j, double value);
    const std::map<std::pair<int, int>, double>& quadratic() const { return quadratic_; }
    std::size_t num_couplers() const { return quadratic_.size(); }

    /// Number of stored couplers touching each variable (explicit zeros count).
    std::vector<int> degrees() const;

    friend bool operator==(const IsingProblem&, const IsingProblem&) = default;

  private:
    int num_vars_ = 0;
    std::vector<double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;
    std::string label_;
};

/// Total energy of `config` under `problem`. Terms are summed in a fixed
/// order (couplers ascending by (i,j), then fields ascending by i) so repeated
/// evaluations of equal states give bit-identical doubles.
double energy(const IsingProblem& problem, const Configuration& config);

/// L x L square lattice with open boundaries: every nearest-neighbor bond
/// gets internal coupler -J1, both diagonals of every unit plaquette get +J2,
/// and all fields are zero.
IsingProblem gen_j1j2(int L, double J1, double J2);

/// Fully connected instance on N variables: every pair is assigned a coupler
/// drawn uniformly from {-1, 0, +1} by a seeded deterministic generator
/// (zeros are stored explicitly), translated into the internal convention.
IsingProblem gen_fully_connected(int N, std::uint64_t seed);

}  // namespace chaintune
