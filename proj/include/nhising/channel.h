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

#ifndef NHISING_CHANNEL_H
#define NHISING_CHANNEL_H

#include <span>

#include <Eigen/Dense>

#include "nhising/hamiltonian.h"

namespace nhising {

// Damping channel realizing exp(theta * dt * Z) on one qubit, conditioned on
// an ancilla reading 0.
//
//   E0 = diag(1, sqrt(1 - gamma)),  E1 = |1><1| sqrt(gamma),
//   gamma = 1 - exp(-4 theta dt).
//
// E0 equals exp(-theta dt) * exp(theta dt Z), so the post-selected branch is
// the normalized non-unitary step.

struct ChannelParams {
    double theta = 0;
    double dt = 0;
    double gamma = 0;
};

struct KrausPair {
    Eigen::Matrix2cd e0;
    Eigen::Matrix2cd e1;
};

/// Throws std::invalid_argument for theta < 0 or dt <= 0.
ChannelParams channel_params(double theta, double dt);

KrausPair kraus_pair(const ChannelParams &params);

/// Rotation angle of the controlled-RY that implements the dilation:
/// phi = -2 asin(sqrt(gamma)), in [-pi, 0].
double cry_angle(const ChannelParams &params);
double cry_angle_for_gamma(double gamma);

/// Two-qubit dilation unitary on (system, ancilla).
///
/// Local index = system_bit + 2 * ancilla_bit. With the ancilla as the high
/// bit this is exactly the ancilla (x) system ordering of the textbook matrix
///
///   [[1, 0,          0, 0          ],
///    [0, sqrt(1-g),  0, sqrt(g)    ],
///    [0, 0,          1, 0          ],
///    [0, -sqrt(g),   0, sqrt(1-g)  ]],
///
/// which is CRY(phi) with the system qubit as control. Because the global
/// convention puts system qubits below ancilla qubits, no permutation is
/// needed when embedding it.
Eigen::Matrix4cd dilation_unitary(const ChannelParams &params);

/// Probability that the ancilla reads 0: <psi|E0^dag E0|psi> = 1 - gamma * P(1).
/// Throws std::invalid_argument if the state is not normalized to 1e-8.
double success_probability(std::span<const Complex> state, const ChannelParams &params);
/// Same for a single-qubit density matrix.
double success_probability(const Eigen::Matrix2cd &rho, const ChannelParams &params);

/// Bloch-ball coordinates (r, polar angle, azimuth) of a single-qubit state.
struct BlochCoordinates {
    double r = 0;
    double polar = 0;
    double azimuth = 0;
};
BlochCoordinates bloch_coordinates(const Eigen::Matrix2cd &rho);
BlochCoordinates bloch_coordinates(std::span<const Complex> state);

/// 1 - (gamma / 2)(1 - r cos(polar)); identical to success_probability for
/// every single-qubit state.
double success_probability_bloch(const BlochCoordinates &bloch, const ChannelParams &params);

}  // namespace nhising

#endif
