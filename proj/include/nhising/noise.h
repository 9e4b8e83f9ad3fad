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

#ifndef NHISING_NOISE_H
#define NHISING_NOISE_H

#include <span>
#include <vector>

#include "nhising/random.h"
#include "nhising/statevector.h"

namespace nhising {

/// Asymmetric assignment error of one qubit.
struct ReadoutError {
    double p01 = 0;  ///< P(read 1 | state 0)
    double p10 = 0;  ///< P(read 0 | state 1)
    bool operator==(const ReadoutError &) const = default;
};

/// Stochastic stand-in for hardware noise, realized as Pauli trajectories.
struct NoiseModel {
    double p1 = 0;  ///< depolarizing probability after every single-qubit gate
    double p2 = 0;  ///< two-qubit depolarizing probability after every CNOT/CRY
    /// Empty: perfect readout. One entry: applies to every qubit. Otherwise
    /// one entry per register qubit.
    std::vector<ReadoutError> readout;

    /// Illustrative NISQ-scale rates (not calibration data):
    /// p2 = 0.01, p1 = 0.001, p01 = p10 = 0.02.
    static NoiseModel demo_defaults();

    /// Throws std::invalid_argument if any probability is outside [0, 1].
    void validate() const;
    bool is_noiseless() const;
    ReadoutError readout_for(int qubit) const;
};

/// With probability p applies a uniformly random non-identity Pauli string on
/// `qubits` (3 choices for one qubit, 15 for two). Consumes no randomness when
/// p == 0.
void apply_depolarizing(StateVector &state, std::span<const int> qubits, double p, Rng &rng);

/// Flips one recorded bit with the asymmetric readout probabilities.
int corrupt_bit(int bit, const ReadoutError &error, Rng &rng);

/// Independent per-qubit flips; `bits[i]` uses `errors[i]` (or errors[0] when
/// a single entry is given, or nothing when empty).
std::vector<int> corrupt_readout(std::span<const int> bits, std::span<const ReadoutError> errors, Rng &rng);

}  // namespace nhising

#endif
