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

#ifndef NHISING_MITIGATION_H
#define NHISING_MITIGATION_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nhising/noise.h"

namespace nhising {

/// Uncorrelated readout model: one column-stochastic 2x2 matrix per qubit,
/// entry (observed, true).
struct ConfusionSpec {
    std::vector<Eigen::Matrix2d> qubits;

    static ConfusionSpec identity(int n_qubits);
    static ConfusionSpec from_readout(std::span<const ReadoutError> errors);
    /// Same error on every qubit.
    static ConfusionSpec uniform(int n_qubits, const ReadoutError &error);

    /// Throws std::invalid_argument unless every column sums to 1 and entries lie in [0, 1].
    void validate() const;
    int n_qubits() const { return static_cast<int>(qubits.size()); }
    /// P(observed | true) for two bitstrings of this width.
    double assignment_probability(const std::string &observed, const std::string &truth) const;
};

using QuasiDistribution = std::map<std::string, double>;

int hamming_distance(const std::string &a, const std::string &b);

/// A(i, j) = P(observed_i | true_j) when Hamming(i, j) <= cutoff, else 0.
/// Dimension is |observed|, never 2^N.
Eigen::MatrixXd restricted_confusion(const std::vector<std::string> &observed, const ConfusionSpec &spec,
                                     int hamming_cutoff);

struct MitigationResult {
    QuasiDistribution quasi;  ///< unit sum, entries may be negative
    /// |A_full x - p| before renormalization, where A_full is the confusion
    /// matrix over the observed set without a Hamming cutoff.
    double residual = 0;
    double rcond = 0;         ///< reciprocal condition estimate of A
};

/// Solves A x = p over the observed bitstrings by LU factorization and
/// renormalizes x to unit sum. Throws std::invalid_argument for empty counts
/// and NumericalError when the restricted matrix is singular.
MitigationResult mitigate_detailed(const std::map<std::string, uint64_t> &counts, const ConfusionSpec &spec,
                                   int hamming_cutoff = 3);
QuasiDistribution mitigate(const std::map<std::string, uint64_t> &counts, const ConfusionSpec &spec,
                           int hamming_cutoff = 3);

/// sum_x q(x) O(x) with O = (1/N) sum Z_i. Negative weights are kept.
double quasi_expectation(const QuasiDistribution &quasi, int n_qubits);

}  // namespace nhising

#endif
