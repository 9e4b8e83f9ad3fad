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

#include "nhising/statevector.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nhising {

Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle) {
    const Complex i(0, 1);
    Eigen::Matrix2cd m;
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    switch (kind) {
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        case GateKind::SqrtX:
            m << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5);
            return m;
        case GateKind::RZ:
            m << std::exp(-i * (angle / 2)), 0, 0, std::exp(i * (angle / 2));
            return m;
        case GateKind::RY:
            m << c, -s, s, c;
            return m;
        case GateKind::RX:
            m << c, -i * s, -i * s, c;
            return m;
        default:
            throw std::invalid_argument("not a single-qubit unitary: " + std::string(gate_name(kind)));
    }
}

StateVector::StateVector(int n_qubits, uint64_t basis_index) : n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > 30) {
        throw std::invalid_argument("state vector qubit count out of range");
    }
    const uint64_t dim = uint64_t{1} << n_qubits;
    if (basis_index >= dim) {
        throw std::invalid_argument("basis index outside the register");
    }
    amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    amps_[static_cast<Eigen::Index>(basis_index)] = 1;
}

StateVector::StateVector(Eigen::VectorXcd amplitudes) : n_qubits_(0), amps_(std::move(amplitudes)) {
    const auto dim = static_cast<uint64_t>(amps_.size());
    while ((uint64_t{1} << n_qubits_) < dim) {
        n_qubits_++;
    }
    if ((uint64_t{1} << n_qubits_) != dim) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
}

void StateVector::apply_1q(int q, const Eigen::Matrix2cd &m) {
    const uint64_t bit = uint64_t{1} << q;
    const uint64_t n = dim();
    Complex *a = amps_.data();
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    for (uint64_t i = 0; i < n; i++) {
        if (i & bit) {
            continue;
        }
        const Complex lo = a[i];
        const Complex hi = a[i | bit];
        a[i] = m00 * lo + m01 * hi;
        a[i | bit] = m10 * lo + m11 * hi;
    }
}

void StateVector::apply_controlled_1q(int control, int target, const Eigen::Matrix2cd &m) {
    const uint64_t cbit = uint64_t{1} << control;
    const uint64_t tbit = uint64_t{1} << target;
    const uint64_t n = dim();
    Complex *a = amps_.data();
    for (uint64_t i = 0; i < n; i++) {
        if (!(i & cbit) || (i & tbit)) {
            continue;
        }
        const Complex lo = a[i];
        const Complex hi = a[i | tbit];
        a[i] = m(0, 0) * lo + m(0, 1) * hi;
        a[i | tbit] = m(1, 0) * lo + m(1, 1) * hi;
    }
}

void StateVector::apply_cnot(int control, int target) {
    const uint64_t cbit = uint64_t{1} << control;
    const uint64_t tbit = uint64_t{1} << target;
    const uint64_t n = dim();
    Complex *a = amps_.data();
    for (uint64_t i = 0; i < n; i++) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(a[i], a[i | tbit]);
        }
    }
}

void StateVector::apply_x(int q) {
    const uint64_t bit = uint64_t{1} << q;
    Complex *a = amps_.data();
    for (uint64_t i = 0; i < dim(); i++) {
        if (!(i & bit)) {
            std::swap(a[i], a[i | bit]);
        }
    }
}

void StateVector::apply_z(int q) {
    const uint64_t bit = uint64_t{1} << q;
    Complex *a = amps_.data();
    for (uint64_t i = 0; i < dim(); i++) {
        if (i & bit) {
            a[i] = -a[i];
        }
    }
}

void StateVector::apply_y(int q) {
    // Y = i X Z
    const uint64_t bit = uint64_t{1} << q;
    const Complex i_unit(0, 1);
    Complex *a = amps_.data();
    for (uint64_t i = 0; i < dim(); i++) {
        if (!(i & bit)) {
            const Complex lo = a[i];
            const Complex hi = a[i | bit];
            a[i] = -i_unit * hi;
            a[i | bit] = i_unit * lo;
        }
    }
}

void StateVector::apply(const Gate &gate) {
    switch (gate.kind) {
        case GateKind::X:
            apply_x(gate.q0);
            return;
        case GateKind::SqrtX:
        case GateKind::RZ:
        case GateKind::RY:
        case GateKind::RX:
            apply_1q(gate.q0, single_qubit_matrix(gate.kind, gate.angle));
            return;
        case GateKind::CNOT:
            apply_cnot(gate.q0, gate.q1);
            return;
        case GateKind::CRY:
            apply_controlled_1q(gate.q0, gate.q1, single_qubit_matrix(GateKind::RY, gate.angle));
            return;
        default:
            throw std::invalid_argument("StateVector::apply: " + std::string(gate_name(gate.kind)) +
                                        " is not a unitary gate");
    }
}

double StateVector::probability_one(int q) const {
    const uint64_t bit = uint64_t{1} << q;
    double p = 0;
    for (uint64_t i = 0; i < dim(); i++) {
        if (i & bit) {
            p += std::norm(amps_[static_cast<Eigen::Index>(i)]);
        }
    }
    return p;
}

void StateVector::collapse(int q, int outcome, double probability) {
    if (!(probability > 0)) {
        throw std::logic_error("collapse onto a zero-probability outcome");
    }
    const uint64_t bit = uint64_t{1} << q;
    const double scale = 1.0 / std::sqrt(probability);
    Complex *a = amps_.data();
    for (uint64_t i = 0; i < dim(); i++) {
        const bool one = (i & bit) != 0;
        a[i] = (one == (outcome == 1)) ? a[i] * scale : Complex(0, 0);
    }
}

double StateVector::norm() const {
    return amps_.norm();
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(dim());
    for (uint64_t i = 0; i < dim(); i++) {
        p[i] = std::norm(amps_[static_cast<Eigen::Index>(i)]);
    }
    return p;
}

DenseOperator circuit_unitary(const Circuit &circuit) {
    const int n = circuit.n_qubits();
    const uint64_t dim = uint64_t{1} << n;
    DenseOperator u(dim, dim);
    for (uint64_t col = 0; col < dim; col++) {
        StateVector psi(n, col);
        for (const Gate &g : circuit.gates()) {
            if (is_unitary(g.kind)) {
                psi.apply(g);
            }
        }
        u.col(static_cast<Eigen::Index>(col)) = psi.amplitudes();
    }
    return u;
}

bool equal_up_to_global_phase(const DenseOperator &a, const DenseOperator &b, double tolerance) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) < tolerance) {
        return a.cwiseAbs().maxCoeff() <= tolerance;
    }
    const Complex ratio = a(r, c) / b(r, c);
    if (std::abs(std::abs(ratio) - 1) > tolerance) {
        return false;
    }
    const Complex phase = ratio / std::abs(ratio);
    return (a - phase * b).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace nhising
