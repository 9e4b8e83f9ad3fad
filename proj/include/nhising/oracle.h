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

#ifndef NHISING_ORACLE_H
#define NHISING_ORACLE_H

#include <vector>

#include <Eigen/Dense>

#include "nhising/errors.h"
#include "nhising/hamiltonian.h"

namespace nhising {

using Amplitudes = Eigen::VectorXcd;

/// exp(a) by scaling and squaring with a diagonal Pade approximant of degree
/// 3, 5, 7, 9 or 13 chosen from the 1-norm. Works on defective matrices.
/// Throws std::invalid_argument for non-square or oversized (> 4096) input.
DenseOperator matrix_exponential(const DenseOperator &a);

struct Evolution {
    Amplitudes state;  ///< normalized
    double norm = 1;   ///< norm before renormalization
};

/// exp(-i H t) psi0, renormalized. `norm` is |exp(-i H t) psi0|.
Evolution evolve_exact(const HamiltonianSpec &spec, const Amplitudes &psi0, double t);

/// Probability of never leaving the physical subspace under continuous-time
/// damping: |exp(-i (H - i theta n_damped) t) psi0|^2. In [0, 1] and
/// non-increasing in t. The time-continuum counterpart of the product of
/// per-step channel success probabilities.
double continuous_survival(const HamiltonianSpec &spec, const Amplitudes &psi0, double t);

/// The three first-order Trotter factors on the system register:
///   unn = exp(i lambda dt sum Z_i Z_{i+1}), ux = exp(i h_x dt sum X_i),
///   mnu = exp(theta dt sum_{pattern} Z_i).
struct TrotterFactors {
    DenseOperator unn;
    DenseOperator ux;
    DenseOperator mnu;
};
TrotterFactors trotter_factors(const HamiltonianSpec &spec, double dt);

/// One step unn * ux * mnu * psi. `norm` is |mnu psi| (the unitary factors
/// preserve it).
Evolution trotter_step_exact(const HamiltonianSpec &spec, const Amplitudes &psi, double dt);
Evolution trotter_step_exact(const TrotterFactors &factors, const Amplitudes &psi);

struct SpectralReport {
    std::vector<Complex> eigenvalues;  ///< sorted by real part, then imaginary part
    double max_imag = 0;               ///< largest |Im| over the whole spectrum
    double ground_imag = 0;            ///< largest |Im| among eigenvalues tied for the smallest real part
    bool any_complex = false;          ///< max_imag > tolerance
    bool is_broken = false;            ///< ground_imag > tolerance (ground pair has coalesced)
};

inline constexpr double kDefaultImagTolerance = 1e-9;

/// Full spectrum of the (PT-symmetric) Hamiltonian. The matrix is first
/// brought to a real form in a basis of PT-invariant vectors, so real
/// eigenvalues come out exactly real and complex ones in exact conjugate
/// pairs. If the real iteration stalls (right at a coalescence) the complex
/// solver on H is used instead.
SpectralReport spectrum(const HamiltonianSpec &spec, double imag_tolerance = kDefaultImagTolerance);

/// Eigenvalues of an arbitrary square complex matrix (unsorted).
std::vector<Complex> eigenvalues(const DenseOperator &a);

struct ExceptionalSearch {
    double tolerance = 1e-6;  ///< final bracket width
    double theta_max = 2.0;
    int coarse_steps = 16;  ///< upward scan used to bracket the first crossing
    double imag_tolerance = kDefaultImagTolerance;
};

struct ExceptionalPoint {
    double h_x = 0;
    double theta_star = 0;     ///< midpoint of the final bracket
    double bracket_width = 0;  ///< hi - lo of the final bracket
};

/// Bisection on `spectrum(...).is_broken` over theta in [0, theta_max], for
/// the chain described by `base` (its theta and h_x are ignored) at field h_x.
/// Throws std::invalid_argument for h_x <= 0 and BracketError when the
/// interval does not bracket the transition.
ExceptionalPoint exceptional_theta(const HamiltonianSpec &base, double h_x,
                                   const ExceptionalSearch &search = {});

/// Orthonormal basis of the attracting eigenspace: the span of right
/// eigenvectors whose eigenvalue imaginary part equals the maximum (within a
/// relative 1e-7). For this model the maximum is generically attained by an
/// E, -conj(E) pair, so the space is usually two-dimensional.
struct AttractorSpace {
    Eigen::MatrixXcd basis;
    std::vector<Complex> eigenvalues;
};
AttractorSpace attractor_space(const HamiltonianSpec &spec);

/// Overlap |P psi(k dt)|^2 of the exactly evolved, renormalized state with
/// the attracting eigenspace, for k = 0..n_steps. Throws std::invalid_argument
/// if the spectrum is unbroken.
std::vector<double> attractor_overlap(const HamiltonianSpec &spec, const Amplitudes &psi0, int n_steps, double dt);

}  // namespace nhising

#endif
