// Copyright 2026 The nhising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NHISING_HAMILTONIAN_H
#define NHISING_HAMILTONIAN_H

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace nhising {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

// Bit convention (used by every module): site s (1-based) of the chain is
// qubit s-1, and qubit q is bit q of a basis-state index. Bit value 0 is the
// +1 eigenstate of Z.

/// Which sites carry the imaginary longitudinal field.
enum class SitePattern {
    AllSites,        ///< i*theta on every site.
    AlternateSites,  ///< i*theta on sites 2, 4, ..., 2*floor(N/2) (1-based).
};

std::string_view pattern_name(SitePattern pattern);
/// Accepts "all" / "alternate" (and the enum spellings). Throws std::invalid_argument.
SitePattern parse_pattern(std::string_view text);

/// Parameters of the open-chain Hamiltonian
///   H = -lambda sum_i Z_i Z_{i+1} - h_x sum_i X_i + i theta sum_{i in pattern} Z_i.
struct HamiltonianSpec {
    double lambda = 1.0;
    double h_x = 0.0;
    double theta = 0.0;
    int n_sites = 1;
    SitePattern pattern = SitePattern::AllSites;

    /// Throws std::invalid_argument for n_sites < 1, theta < 0 or non-finite values.
    void validate() const;
    HamiltonianSpec with_theta(double new_theta) const;
    HamiltonianSpec with_h_x(double new_h_x) const;
};

/// Zero-based qubit indices of the sites carrying the i*theta term.
std::vector<int> dissipative_sites(int n_sites, SitePattern pattern);

DenseOperator build_hamiltonian(const HamiltonianSpec &spec);

/// (1/N) sum_i Z_i as a dense diagonal operator.
DenseOperator build_observable(int n_sites);

/// Eigenvalue of (1/N) sum_i Z_i on the computational basis state `basis_index`.
double observable_value(uint64_t basis_index, int n_sites);

}  // namespace nhising

#endif
