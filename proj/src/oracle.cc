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

#include "nhising/oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace nhising {

namespace {

// Pade coefficients b_0..b_m and the 1-norm bound up to which degree m
// reaches double precision without scaling.
constexpr std::array<double, 4> kPade3{120, 60, 12, 1};
constexpr std::array<double, 6> kPade5{30240, 15120, 3360, 420, 30, 1};
constexpr std::array<double, 8> kPade7{17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
constexpr std::array<double, 10> kPade9{17643225600, 8821612800, 2075673600, 302702400, 30270240,
                                        2162160,     110880,     3960,       90,        1};
constexpr std::array<double, 14> kPade13{64764752532480000, 32382376266240000, 7771770303897600,
                                         1187353796428800,  129060195264000,   10559470521600,
                                         670442572800,      33522128640,       1323241920,
                                         40840800,          960960,            16380,
                                         182,               1};
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const DenseOperator &a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

template <size_t K>
DenseOperator pade_low_degree(const DenseOperator &a, const std::array<double, K> &b) {
    const auto n = a.rows();
    const DenseOperator ident = DenseOperator::Identity(n, n);
    const DenseOperator a2 = a * a;
    DenseOperator power = ident;
    DenseOperator u_inner = DenseOperator::Zero(n, n);
    DenseOperator v = DenseOperator::Zero(n, n);
    for (size_t k = 0; k + 1 < K; k += 2) {
        v += b[k] * power;
        u_inner += b[k + 1] * power;
        power = power * a2;
    }
    const DenseOperator u = a * u_inner;
    return (v - u).partialPivLu().solve(v + u);
}

DenseOperator pade13(const DenseOperator &a) {
    const auto &b = kPade13;
    const auto n = a.rows();
    const DenseOperator ident = DenseOperator::Identity(n, n);
    const DenseOperator a2 = a * a;
    const DenseOperator a4 = a2 * a2;
    const DenseOperator a6 = a4 * a2;
    const DenseOperator u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
    const DenseOperator v =
        a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
    return (v - u).partialPivLu().solve(v + u);
}

DenseOperator zz_sum(int n) {
    const uint64_t dim = uint64_t{1} << n;
    DenseOperator m = DenseOperator::Zero(dim, dim);
    for (uint64_t b = 0; b < dim; b++) {
        double s = 0;
        for (int q = 0; q + 1 < n; q++) {
            s += (((b >> q) ^ (b >> (q + 1))) & 1) ? -1.0 : 1.0;
        }
        m(b, b) = s;
    }
    return m;
}

DenseOperator x_sum(int n) {
    const uint64_t dim = uint64_t{1} << n;
    DenseOperator m = DenseOperator::Zero(dim, dim);
    for (uint64_t b = 0; b < dim; b++) {
        for (int q = 0; q < n; q++) {
            m(b ^ (uint64_t{1} << q), b) += 1.0;
        }
    }
    return m;
}

DenseOperator z_sum(int n, const std::vector<int> &sites) {
    const uint64_t dim = uint64_t{1} << n;
    DenseOperator m = DenseOperator::Zero(dim, dim);
    for (uint64_t b = 0; b < dim; b++) {
        double s = 0;
        for (int q : sites) {
            s += ((b >> q) & 1) ? -1.0 : 1.0;
        }
        m(b, b) = s;
    }
    return m;
}

void check_state(const HamiltonianSpec &spec, const Amplitudes &psi) {
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << spec.n_sites);
    if (psi.size() != dim) {
        throw std::invalid_argument("state has " + std::to_string(psi.size()) + " amplitudes, expected " +
                                    std::to_string(dim));
    }
}

// Real form of a matrix commuting with P K, P = X^{(x) n}, K = complex
// conjugation. Basis: for each index pair (b, ~b) with b < ~b the vectors
// (e_b + e_~b)/sqrt2 and i(e_b - e_~b)/sqrt2, both P K invariant.
Eigen::MatrixXd pt_real_form(const DenseOperator &h, int n) {
    const uint64_t dim = uint64_t{1} << n;
    const uint64_t mask = dim - 1;
    const uint64_t half = dim / 2;
    std::vector<uint64_t> rep;
    rep.reserve(half);
    for (uint64_t b = 0; b < dim; b++) {
        if (b < (b ^ mask)) {
            rep.push_back(b);
        }
    }
    Eigen::MatrixXd r(dim, dim);
    const Complex i_unit(0, 1);
    for (uint64_t l = 0; l < half; l++) {
        const uint64_t c = rep[l];
        const uint64_t cb = c ^ mask;
        for (uint64_t k = 0; k < half; k++) {
            const uint64_t b = rep[k];
            const uint64_t bb = b ^ mask;
            const Complex hbc = h(b, c), hbcb = h(b, cb), hbbc = h(bb, c), hbbcb = h(bb, cb);
            r(2 * k, 2 * l) = (0.5 * (hbc + hbcb + hbbc + hbbcb)).real();
            r(2 * k, 2 * l + 1) = (0.5 * i_unit * (hbc - hbcb + hbbc - hbbcb)).real();
            r(2 * k + 1, 2 * l) = (-0.5 * i_unit * (hbc + hbcb - hbbc - hbbcb)).real();
            r(2 * k + 1, 2 * l + 1) = (0.5 * (hbc - hbcb - hbbc + hbbcb)).real();
        }
    }
    return r;
}

SpectralReport summarize(std::vector<Complex> values, double imag_tolerance) {
    std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    });
    SpectralReport report;
    for (const Complex &v : values) {
        report.max_imag = std::max(report.max_imag, std::abs(v.imag()));
    }
    // Eigenvalues tied with the lowest real part belong to the ground level
    // (exact ties occur for decoupled chains).
    if (!values.empty()) {
        const double floor = values.front().real();
        const double window = 1e-8 * std::max(1.0, std::abs(floor));
        for (const Complex &v : values) {
            if (v.real() - floor > window) {
                break;
            }
            report.ground_imag = std::max(report.ground_imag, std::abs(v.imag()));
        }
    }
    report.any_complex = report.max_imag > imag_tolerance;
    report.is_broken = report.ground_imag > imag_tolerance;
    report.eigenvalues = std::move(values);
    return report;
}

}  // namespace

DenseOperator matrix_exponential(const DenseOperator &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("matrix_exponential requires a square matrix");
    }
    if (a.rows() > 4096) {
        throw std::invalid_argument("matrix_exponential limited to dimension 4096");
    }
    if (a.rows() == 0) {
        return a;
    }
    const double norm = one_norm(a);
    if (!std::isfinite(norm)) {
        throw std::invalid_argument("matrix_exponential input is not finite");
    }
    if (norm <= kTheta3) {
        return pade_low_degree(a, kPade3);
    }
    if (norm <= kTheta5) {
        return pade_low_degree(a, kPade5);
    }
    if (norm <= kTheta7) {
        return pade_low_degree(a, kPade7);
    }
    if (norm <= kTheta9) {
        return pade_low_degree(a, kPade9);
    }
    const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    DenseOperator r = pade13(a / std::ldexp(1.0, squarings));
    for (int s = 0; s < squarings; s++) {
        r = r * r;
    }
    return r;
}

Evolution evolve_exact(const HamiltonianSpec &spec, const Amplitudes &psi0, double t) {
    check_state(spec, psi0);
    const DenseOperator h = build_hamiltonian(spec);
    const Amplitudes out = matrix_exponential(Complex(0, -t) * h) * psi0;
    const double norm = out.norm();
    return Evolution{out / norm, norm};
}

double continuous_survival(const HamiltonianSpec &spec, const Amplitudes &psi0, double t) {
    const double n_damped = static_cast<double>(dissipative_sites(spec.n_sites, spec.pattern).size());
    const Evolution e = evolve_exact(spec, psi0, t);
    return e.norm * e.norm * std::exp(-2.0 * spec.theta * n_damped * t);
}

TrotterFactors trotter_factors(const HamiltonianSpec &spec, double dt) {
    spec.validate();
    const int n = spec.n_sites;
    TrotterFactors f;
    f.unn = matrix_exponential(Complex(0, spec.lambda * dt) * zz_sum(n));
    f.ux = matrix_exponential(Complex(0, spec.h_x * dt) * x_sum(n));
    f.mnu = matrix_exponential(Complex(spec.theta * dt, 0) * z_sum(n, dissipative_sites(n, spec.pattern)));
    return f;
}

Evolution trotter_step_exact(const TrotterFactors &factors, const Amplitudes &psi) {
    if (psi.size() != factors.mnu.rows()) {
        throw std::invalid_argument("state dimension does not match Trotter factors");
    }
    const Amplitudes damped = factors.mnu * psi;
    const double norm = damped.norm();
    const Amplitudes out = factors.unn * (factors.ux * damped);
    return Evolution{out / out.norm(), norm};
}

Evolution trotter_step_exact(const HamiltonianSpec &spec, const Amplitudes &psi, double dt) {
    check_state(spec, psi);
    return trotter_step_exact(trotter_factors(spec, dt), psi);
}

std::vector<Complex> eigenvalues(const DenseOperator &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("eigenvalues requires a square matrix");
    }
    Eigen::ComplexEigenSolver<DenseOperator> solver(a, false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("complex eigensolver failed to converge");
    }
    const auto &w = solver.eigenvalues();
    return std::vector<Complex>(w.data(), w.data() + w.size());
}

SpectralReport spectrum(const HamiltonianSpec &spec, double imag_tolerance) {
    const DenseOperator h = build_hamiltonian(spec);
    if (spec.n_sites == 0) {
        return {};
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(pt_real_form(h, spec.n_sites), false);
    if (solver.info() != Eigen::Success) {
        // Real QR can stall right at a coalescence; complex shifts do not.
        return summarize(eigenvalues(h), imag_tolerance);
    }
    const auto &w = solver.eigenvalues();
    std::vector<Complex> values(w.data(), w.data() + w.size());
    return summarize(std::move(values), imag_tolerance);
}

ExceptionalPoint exceptional_theta(const HamiltonianSpec &base, double h_x, const ExceptionalSearch &search) {
    if (!(h_x > 0)) {
        throw std::invalid_argument("exceptional_theta requires h_x > 0");
    }
    if (!(search.tolerance > 0) || !(search.theta_max > 0)) {
        throw std::invalid_argument("exceptional_theta requires positive tolerance and theta_max");
    }
    const HamiltonianSpec at_field = base.with_h_x(h_x);
    auto broken = [&](double theta) { return spectrum(at_field.with_theta(theta), search.imag_tolerance).is_broken; };

    const double epsilon = 1e-3 * search.tolerance;
    if (broken(epsilon)) {
        throw BracketError("spectrum already broken at theta=" + std::to_string(epsilon) +
                           " (h_x=" + std::to_string(h_x) + ")");
    }
    // The ground pair can lose its place as lowest level deep in the broken
    // phase, so bracket the first crossing with a coarse upward scan.
    const int steps = std::max(1, search.coarse_steps);
    double lo = epsilon;
    double hi = lo;
    bool found = false;
    for (int k = 1; k <= steps; k++) {
        const double theta = search.theta_max * k / steps;
        if (broken(theta)) {
            hi = theta;
            found = true;
            break;
        }
        lo = theta;
    }
    if (!found) {
        throw BracketError("spectrum still unbroken up to theta_max=" + std::to_string(search.theta_max) +
                           " (h_x=" + std::to_string(h_x) + ")");
    }
    while (hi - lo > search.tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (broken(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return ExceptionalPoint{h_x, 0.5 * (lo + hi), hi - lo};
}

AttractorSpace attractor_space(const HamiltonianSpec &spec) {
    const DenseOperator h = build_hamiltonian(spec);
    const Eigen::Index n = h.rows();
    Eigen::ComplexEigenSolver<DenseOperator> solver(h, true);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("complex eigensolver failed to converge");
    }
    const auto &w = solver.eigenvalues();
    const DenseOperator &vr = solver.eigenvectors();
    double top = -std::numeric_limits<double>::infinity();
    for (const Complex &v : w) {
        top = std::max(top, v.imag());
    }
    const double window = 1e-7 * std::max(1.0, std::abs(top));
    std::vector<Eigen::Index> picked;
    AttractorSpace space;
    for (Eigen::Index k = 0; k < n; k++) {
        if (w[k].imag() >= top - window) {
            picked.push_back(k);
            space.eigenvalues.push_back(w[k]);
        }
    }
    DenseOperator vectors(n, static_cast<Eigen::Index>(picked.size()));
    for (size_t j = 0; j < picked.size(); j++) {
        vectors.col(static_cast<Eigen::Index>(j)) = vr.col(picked[j]).normalized();
    }
    Eigen::ColPivHouseholderQR<DenseOperator> qr(vectors);
    qr.setThreshold(1e-10);
    const Eigen::Index rank = qr.rank();
    const DenseOperator q = qr.householderQ();
    space.basis = q.leftCols(rank);
    return space;
}

std::vector<double> attractor_overlap(const HamiltonianSpec &spec, const Amplitudes &psi0, int n_steps, double dt) {
    check_state(spec, psi0);
    if (n_steps < 0 || !(dt > 0)) {
        throw std::invalid_argument("attractor_overlap requires n_steps >= 0 and dt > 0");
    }
    if (!spectrum(spec).is_broken) {
        throw std::invalid_argument("attractor_overlap requires a spectrum in the broken phase");
    }
    const AttractorSpace space = attractor_space(spec);
    const DenseOperator step = matrix_exponential(Complex(0, -dt) * build_hamiltonian(spec));
    Amplitudes psi = psi0.normalized();
    std::vector<double> overlaps;
    overlaps.reserve(n_steps + 1);
    for (int k = 0;; k++) {
        overlaps.push_back((space.basis.adjoint() * psi).squaredNorm());
        if (k == n_steps) {
            break;
        }
        psi = step * psi;
        psi.normalize();
    }
    return overlaps;
}

}  // namespace nhising
