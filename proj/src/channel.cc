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

#include "nhising/channel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nhising {

ChannelParams channel_params(double theta, double dt) {
    if (!(theta >= 0) || !std::isfinite(theta)) {
        throw std::invalid_argument("channel theta must be finite and >= 0");
    }
    if (!(dt > 0) || !std::isfinite(dt)) {
        throw std::invalid_argument("channel dt must be finite and > 0");
    }
    return ChannelParams{theta, dt, -std::expm1(-4.0 * theta * dt)};
}

KrausPair kraus_pair(const ChannelParams &params) {
    KrausPair k;
    k.e0 << 1, 0, 0, std::sqrt(1 - params.gamma);
    k.e1 << 0, 0, 0, std::sqrt(params.gamma);
    return k;
}

double cry_angle_for_gamma(double gamma) {
    return -2.0 * std::asin(std::sqrt(gamma));
}

double cry_angle(const ChannelParams &params) {
    return cry_angle_for_gamma(params.gamma);
}

Eigen::Matrix4cd dilation_unitary(const ChannelParams &params) {
    const double a = std::sqrt(1 - params.gamma);
    const double b = std::sqrt(params.gamma);
    Eigen::Matrix4cd u;
    // clang-format off
    u << 1, 0,  0, 0,
         0, a,  0, b,
         0, 0,  1, 0,
         0, -b, 0, a;
    // clang-format on
    return u;
}

namespace {

Eigen::Matrix2cd density_of(std::span<const Complex> state) {
    if (state.size() != 2) {
        throw std::invalid_argument("expected a single-qubit state (2 amplitudes)");
    }
    const double norm2 = std::norm(state[0]) + std::norm(state[1]);
    if (std::abs(norm2 - 1) > 1e-8) {
        throw std::invalid_argument("single-qubit state is not normalized");
    }
    Eigen::Vector2cd v(state[0], state[1]);
    return v * v.adjoint();
}

}  // namespace

double success_probability(const Eigen::Matrix2cd &rho, const ChannelParams &params) {
    if (std::abs(rho.trace() - Complex(1, 0)) > 1e-8) {
        throw std::invalid_argument("density matrix trace deviates from 1");
    }
    const KrausPair k = kraus_pair(params);
    return (k.e0.adjoint() * k.e0 * rho).trace().real();
}

double success_probability(std::span<const Complex> state, const ChannelParams &params) {
    return success_probability(density_of(state), params);
}

BlochCoordinates bloch_coordinates(const Eigen::Matrix2cd &rho) {
    const double x = 2 * rho(1, 0).real();
    const double y = 2 * rho(1, 0).imag();
    const double z = (rho(0, 0) - rho(1, 1)).real();
    BlochCoordinates b;
    b.r = std::sqrt(x * x + y * y + z * z);
    b.polar = b.r > 0 ? std::acos(std::clamp(z / b.r, -1.0, 1.0)) : 0.0;
    b.azimuth = std::atan2(y, x);
    return b;
}

BlochCoordinates bloch_coordinates(std::span<const Complex> state) {
    return bloch_coordinates(density_of(state));
}

double success_probability_bloch(const BlochCoordinates &bloch, const ChannelParams &params) {
    return 1 - 0.5 * params.gamma * (1 - bloch.r * std::cos(bloch.polar));
}

}  // namespace nhising
