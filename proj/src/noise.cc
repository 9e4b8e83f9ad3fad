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

#include "nhising/noise.h"

#include <stdexcept>
#include <string>

namespace nhising {

namespace {

void check_probability(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

void apply_pauli(StateVector &state, int q, int pauli) {
    switch (pauli) {
        case 1:
            state.apply_x(q);
            break;
        case 2:
            state.apply_y(q);
            break;
        case 3:
            state.apply_z(q);
            break;
        default:
            break;
    }
}

}  // namespace

NoiseModel NoiseModel::demo_defaults() {
    NoiseModel m;
    m.p1 = 0.001;
    m.p2 = 0.01;
    m.readout = {ReadoutError{0.02, 0.02}};
    return m;
}

void NoiseModel::validate() const {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    for (const ReadoutError &r : readout) {
        check_probability(r.p01, "p01");
        check_probability(r.p10, "p10");
    }
}

bool NoiseModel::is_noiseless() const {
    if (p1 != 0 || p2 != 0) {
        return false;
    }
    for (const ReadoutError &r : readout) {
        if (r.p01 != 0 || r.p10 != 0) {
            return false;
        }
    }
    return true;
}

ReadoutError NoiseModel::readout_for(int qubit) const {
    if (readout.empty()) {
        return {};
    }
    if (readout.size() == 1) {
        return readout.front();
    }
    if (qubit < 0 || static_cast<size_t>(qubit) >= readout.size()) {
        throw std::out_of_range("no readout error configured for qubit " + std::to_string(qubit));
    }
    return readout[static_cast<size_t>(qubit)];
}

void apply_depolarizing(StateVector &state, std::span<const int> qubits, double p, Rng &rng) {
    if (p <= 0 || qubits.empty()) {
        return;
    }
    if (uniform01(rng) >= p) {
        return;
    }
    // Pauli strings are indexed 1..4^k - 1 in base 4, one digit per qubit.
    int choices = 1;
    for (size_t k = 0; k < qubits.size(); k++) {
        choices *= 4;
    }
    int code = 1 + static_cast<int>(uniform01(rng) * (choices - 1));
    if (code >= choices) {
        code = choices - 1;
    }
    for (int q : qubits) {
        apply_pauli(state, q, code % 4);
        code /= 4;
    }
}

int corrupt_bit(int bit, const ReadoutError &error, Rng &rng) {
    const double flip = bit ? error.p10 : error.p01;
    if (flip <= 0) {
        return bit;
    }
    return uniform01(rng) < flip ? 1 - bit : bit;
}

std::vector<int> corrupt_readout(std::span<const int> bits, std::span<const ReadoutError> errors, Rng &rng) {
    std::vector<int> out(bits.begin(), bits.end());
    if (errors.empty()) {
        return out;
    }
    if (errors.size() != 1 && errors.size() < bits.size()) {
        throw std::invalid_argument("corrupt_readout: fewer readout errors than bits");
    }
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = corrupt_bit(out[i], errors.size() == 1 ? errors[0] : errors[i], rng);
    }
    return out;
}

}  // namespace nhising
