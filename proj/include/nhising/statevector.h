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

#ifndef NHISING_STATEVECTOR_H
#define NHISING_STATEVECTOR_H

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nhising/circuit.h"
#include "nhising/hamiltonian.h"

namespace nhising {

/// 2x2 matrix of a single-qubit gate kind (X, SqrtX, RZ, RY, RX).
Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle);

/// Dense amplitude vector over n qubits, qubit q = bit q of the index.
class StateVector {
   public:
    explicit StateVector(int n_qubits, uint64_t basis_index = 0);
    explicit StateVector(Eigen::VectorXcd amplitudes);

    int n_qubits() const { return n_qubits_; }
    uint64_t dim() const { return static_cast<uint64_t>(amps_.size()); }
    const Eigen::VectorXcd &amplitudes() const { return amps_; }
    Complex operator[](uint64_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

    void apply_1q(int q, const Eigen::Matrix2cd &m);
    /// Applies m to `target` on the control=1 subspace.
    void apply_controlled_1q(int control, int target, const Eigen::Matrix2cd &m);
    void apply_cnot(int control, int target);
    void apply_x(int q);
    void apply_y(int q);
    void apply_z(int q);
    /// Applies a unitary gate. Throws std::invalid_argument for measurement kinds.
    void apply(const Gate &gate);

    double probability_one(int q) const;
    /// Projects qubit q onto `outcome` and renormalizes. `probability` is the
    /// Born probability of that outcome (must be > 0).
    void collapse(int q, int outcome, double probability);

    double norm() const;
    /// Distribution over basis indices, |amplitude|^2.
    std::vector<double> probabilities() const;

   private:
    int n_qubits_;
    Eigen::VectorXcd amps_;
};

/// Unitary of the circuit with every measurement and reset deferred
/// (treated as identity). Dimension 2^n_qubits.
DenseOperator circuit_unitary(const Circuit &circuit);

/// True if a = c b for some unit complex c, entrywise to `tolerance`.
bool equal_up_to_global_phase(const DenseOperator &a, const DenseOperator &b, double tolerance);

}  // namespace nhising

#endif
