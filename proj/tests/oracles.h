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

// Test-only reference implementations. Nothing here calls into the library
// beyond plain data types, so the tests compare two independent codes.

#ifndef NHISING_TESTS_ORACLES_H
#define NHISING_TESTS_ORACLES_H

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(char which) {
    Mat m(2, 2);
    switch (which) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, C(0, -1), C(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m = Mat::Identity(2, 2);
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Operator `op` on qubit q of n; qubit 0 is the rightmost factor.
inline Mat on_qubit(const Mat &op, int q, int n) {
    Mat out = Mat::Identity(1, 1);
    for (int k = n - 1; k >= 0; k--) {
        out = kron(out, k == q ? op : pauli('I'));
    }
    return out;
}

// H = -lambda sum ZZ - h_x sum X + i theta sum_{damped} Z, open chain.
inline Mat hamiltonian(int n, double lambda, double h_x, double theta, bool alternate) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Mat h = Mat::Zero(dim, dim);
    for (int q = 0; q + 1 < n; q++) {
        h -= lambda * on_qubit(pauli('Z'), q, n) * on_qubit(pauli('Z'), q + 1, n);
    }
    for (int q = 0; q < n; q++) {
        h -= h_x * on_qubit(pauli('X'), q, n);
        // 1-based site q+1; alternate damps the even sites.
        if (!alternate || (q + 1) % 2 == 0) {
            h += C(0, theta) * on_qubit(pauli('Z'), q, n);
        }
    }
    return h;
}

// Taylor series with scaling and squaring.
inline Mat expm(const Mat &a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::ldexp(1.0, squarings) > 0.25) {
        squarings++;
    }
    const Mat x = a / std::ldexp(1.0, squarings);
    Mat term = Mat::Identity(a.rows(), a.cols());
    Mat sum = term;
    for (int k = 1; k < 60; k++) {
        term = term * x / static_cast<double>(k);
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < squarings; s++) {
        sum = sum * sum;
    }
    return sum;
}

// Two-qubit operator given in the local basis |lo> + 2|hi> embedded on n qubits.
inline Mat embed2(const Mat &m4, int lo, int hi, int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Mat out = Mat::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; col++) {
        const int in_local = static_cast<int>(((col >> lo) & 1) | (((col >> hi) & 1) << 1));
        const Eigen::Index rest = col & ~((Eigen::Index{1} << lo) | (Eigen::Index{1} << hi));
        for (int out_local = 0; out_local < 4; out_local++) {
            const Eigen::Index row = rest | (Eigen::Index{out_local & 1} << lo) | (Eigen::Index{out_local >> 1} << hi);
            out(row, col) += m4(out_local, in_local);
        }
    }
    return out;
}

// Dilation in the local basis |system> + 2|ancilla>.
inline Mat dilation(double gamma) {
    const double a = std::sqrt(1 - gamma), b = std::sqrt(gamma);
    Mat u(4, 4);
    u << 1, 0, 0, 0,
         0, a, 0, b,
         0, 0, 1, 0,
         0, -b, 0, a;
    return u;
}

inline std::vector<int> damped(int n, bool alternate) {
    std::vector<int> out;
    for (int q = 0; q < n; q++) {
        if (!alternate || (q + 1) % 2 == 0) {
            out.push_back(q);
        }
    }
    return out;
}

// One Trotter step on system + one ancilla per damped site, measurements deferred:
// U_NN U_X prod_k D_k.
inline Mat step_unitary(int n, double lambda, double h_x, double theta, double dt, bool alternate) {
    const std::vector<int> sites = damped(n, alternate);
    const int total = n + static_cast<int>(sites.size());
    const double gamma = 1 - std::exp(-4 * theta * dt);
    const Eigen::Index dim = Eigen::Index{1} << total;
    Mat zz = Mat::Zero(dim, dim), xs = Mat::Zero(dim, dim);
    for (int q = 0; q + 1 < n; q++) {
        zz += on_qubit(pauli('Z'), q, total) * on_qubit(pauli('Z'), q + 1, total);
    }
    for (int q = 0; q < n; q++) {
        xs += on_qubit(pauli('X'), q, total);
    }
    Mat u = Mat::Identity(dim, dim);
    for (size_t k = 0; k < sites.size(); k++) {
        u = embed2(dilation(gamma), sites[k], n + static_cast<int>(k), total) * u;
    }
    return expm(C(0, lambda * dt) * zz) * expm(C(0, h_x * dt) * xs) * u;
}

struct Branch {
    Vec state;              // normalized
    double survival = 1;    // probability of the all-zero ancilla record
    std::vector<double> p0; // per channel application
};

// Zero-jump branch: E0 on each damped site, then the unitary factors.
inline Branch zero_jump(int n, double lambda, double h_x, double theta, double dt, int steps, bool alternate,
                        Vec psi) {
    const double gamma = 1 - std::exp(-4 * theta * dt);
    Mat e0 = Mat::Zero(2, 2);
    e0(0, 0) = 1;
    e0(1, 1) = std::sqrt(1 - gamma);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Mat zz = Mat::Zero(dim, dim), xs = Mat::Zero(dim, dim);
    for (int q = 0; q + 1 < n; q++) {
        zz += on_qubit(pauli('Z'), q, n) * on_qubit(pauli('Z'), q + 1, n);
    }
    for (int q = 0; q < n; q++) {
        xs += on_qubit(pauli('X'), q, n);
    }
    const Mat u = expm(C(0, lambda * dt) * zz) * expm(C(0, h_x * dt) * xs);
    Branch b;
    for (int s = 0; s < steps; s++) {
        for (int q : damped(n, alternate)) {
            Vec next = on_qubit(e0, q, n) * psi;
            const double p = next.squaredNorm();
            b.p0.push_back(p);
            b.survival *= p;
            psi = next / std::sqrt(p);
        }
        psi = u * psi;
    }
    b.state = psi;
    return b;
}

inline double magnetization(const Vec &psi, int n) {
    double m = 0;
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        int ones = 0;
        for (int q = 0; q < n; q++) {
            ones += static_cast<int>((i >> q) & 1);
        }
        m += std::norm(psi[i]) * (n - 2.0 * ones) / n;
    }
    return m;
}

// Ground pair broken: eigenvalue with the smallest real part has |Im| > tol.
inline bool ground_broken(const Mat &h, double tol = 1e-9) {
    Eigen::ComplexEigenSolver<Mat> es(h, false);
    const auto &ev = es.eigenvalues();
    double lowest = ev[0].real();
    for (Eigen::Index i = 1; i < ev.size(); i++) {
        lowest = std::min(lowest, ev[i].real());
    }
    double imag = 0;
    for (Eigen::Index i = 0; i < ev.size(); i++) {
        if (ev[i].real() - lowest <= 1e-8 * std::max(1.0, std::abs(lowest))) {
            imag = std::max(imag, std::abs(ev[i].imag()));
        }
    }
    return imag > tol;
}

// Fine grid scan for the first broken theta, refined cell by cell down to `resolution`.
inline double scan_theta_star(int n, double lambda, double h_x, bool alternate, double theta_max = 2.0,
                              double resolution = 1e-7) {
    double lo = 0, step = 0.02;
    double hi = theta_max;
    while (step >= resolution) {
        double t = lo;
        bool found = false;
        while (t <= hi + 1e-15) {
            if (ground_broken(hamiltonian(n, lambda, h_x, t, alternate))) {
                hi = t;
                found = true;
                break;
            }
            lo = t;
            t += step;
        }
        if (!found) {
            return std::nan("");
        }
        step /= 10;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle

#endif
