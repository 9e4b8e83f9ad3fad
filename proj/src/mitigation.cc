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

#include "nhising/mitigation.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nhising/errors.h"
#include "nhising/hamiltonian.h"
#include "nhising/simulator.h"

namespace nhising {

ConfusionSpec ConfusionSpec::identity(int n_qubits) {
    return ConfusionSpec{std::vector<Eigen::Matrix2d>(static_cast<size_t>(n_qubits), Eigen::Matrix2d::Identity())};
}

ConfusionSpec ConfusionSpec::from_readout(std::span<const ReadoutError> errors) {
    ConfusionSpec spec;
    for (const ReadoutError &e : errors) {
        Eigen::Matrix2d m;
        m << 1 - e.p01, e.p10, e.p01, 1 - e.p10;
        spec.qubits.push_back(m);
    }
    return spec;
}

ConfusionSpec ConfusionSpec::uniform(int n_qubits, const ReadoutError &error) {
    const std::vector<ReadoutError> errors(static_cast<size_t>(n_qubits), error);
    return from_readout(errors);
}

void ConfusionSpec::validate() const {
    for (const Eigen::Matrix2d &m : qubits) {
        if ((m.array() < 0).any() || (m.array() > 1).any()) {
            throw std::invalid_argument("confusion entries must lie in [0, 1]");
        }
        if (std::abs(m.col(0).sum() - 1) > 1e-12 || std::abs(m.col(1).sum() - 1) > 1e-12) {
            throw std::invalid_argument("confusion columns must sum to 1");
        }
    }
}

double ConfusionSpec::assignment_probability(const std::string &observed, const std::string &truth) const {
    if (observed.size() != qubits.size() || truth.size() != qubits.size()) {
        throw std::invalid_argument("bitstring width does not match the confusion spec");
    }
    double p = 1;
    for (size_t q = 0; q < qubits.size(); q++) {
        p *= qubits[q](observed[q] == '1', truth[q] == '1');
    }
    return p;
}

int hamming_distance(const std::string &a, const std::string &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming_distance needs equal-length strings");
    }
    int d = 0;
    for (size_t i = 0; i < a.size(); i++) {
        d += a[i] != b[i];
    }
    return d;
}

Eigen::MatrixXd restricted_confusion(const std::vector<std::string> &observed, const ConfusionSpec &spec,
                                     int hamming_cutoff) {
    if (hamming_cutoff < 0) {
        throw std::invalid_argument("Hamming cutoff must be >= 0");
    }
    if (observed.empty()) {
        throw std::invalid_argument("restricted_confusion needs at least one observed bitstring");
    }
    const auto n = static_cast<Eigen::Index>(observed.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            if (hamming_distance(observed[i], observed[j]) <= hamming_cutoff) {
                a(i, j) = spec.assignment_probability(observed[i], observed[j]);
            }
        }
    }
    return a;
}

MitigationResult mitigate_detailed(const std::map<std::string, uint64_t> &counts, const ConfusionSpec &spec,
                                   int hamming_cutoff) {
    spec.validate();
    std::vector<std::string> observed;
    uint64_t total = 0;
    for (const auto &[bits, count] : counts) {
        if (count > 0) {
            observed.push_back(bits);
            total += count;
        }
    }
    if (total == 0) {
        throw std::invalid_argument("mitigate needs nonzero total counts");
    }
    Eigen::VectorXd p(static_cast<Eigen::Index>(observed.size()));
    for (size_t i = 0; i < observed.size(); i++) {
        p[static_cast<Eigen::Index>(i)] = static_cast<double>(counts.at(observed[i])) / static_cast<double>(total);
    }
    const Eigen::MatrixXd a = restricted_confusion(observed, spec, hamming_cutoff);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    MitigationResult result;
    result.rcond = lu.rcond();
    if (!(result.rcond > 1e-13)) {
        std::ostringstream msg;
        msg << "restricted confusion matrix is singular (rcond=" << result.rcond << ", dimension " << a.rows()
            << ")";
        throw NumericalError(msg.str());
    }
    const Eigen::VectorXd x = lu.solve(p);
    const Eigen::MatrixXd full = restricted_confusion(observed, spec, spec.n_qubits());
    result.residual = (full * x - p).norm();
    const double sum = x.sum();
    for (size_t i = 0; i < observed.size(); i++) {
        result.quasi[observed[i]] = x[static_cast<Eigen::Index>(i)] / sum;
    }
    return result;
}

QuasiDistribution mitigate(const std::map<std::string, uint64_t> &counts, const ConfusionSpec &spec,
                           int hamming_cutoff) {
    return mitigate_detailed(counts, spec, hamming_cutoff).quasi;
}

double quasi_expectation(const QuasiDistribution &quasi, int n_qubits) {
    double e = 0;
    for (const auto &[bits, weight] : quasi) {
        e += weight * observable_value(bits_to_index(bits), n_qubits);
    }
    return e;
}

}  // namespace nhising
