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

#ifndef NHISING_SWEEP_H
#define NHISING_SWEEP_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nhising/hamiltonian.h"
#include "nhising/mitigation.h"
#include "nhising/noise.h"
#include "nhising/oracle.h"
#include "nhising/simulator.h"

namespace nhising {

/// Inclusive, equally spaced axis. count == 1 yields {min}.
struct GridAxis {
    double min = 0;
    double max = 0;
    int count = 1;
    std::vector<double> values() const;
};

struct MitigationConfig {
    bool enabled = false;
    int cutoff = 3;
};

struct SweepConfig {
    int n_sites = 2;
    SitePattern pattern = SitePattern::AlternateSites;
    double lambda = 1.0;
    double dt = 0.3;
    int n_steps = 0;  ///< 0: default_trotter_steps(n_sites)
    GridAxis theta_grid{0.02, 1.0, 10};
    GridAxis hx_grid{0.02, 2.0, 10};
    uint64_t n_shots = 100000;
    uint64_t seed = 1;
    uint64_t initial_state = 0;  ///< system basis state
    std::optional<NoiseModel> noise;
    MitigationConfig mitigation;
    double exceptional_theta_max = 2.0;
    int workers = 0;  ///< 0: default_workers()

    /// Throws std::invalid_argument. The step count is only checked when
    /// needs_steps is set (the spectrum-only commands never build a circuit).
    void validate(bool needs_steps = true) const;
    int resolved_steps() const;
    HamiltonianSpec spec(double theta, double h_x) const;
};

/// Trotter steps used for each size in the hardware runs: 7, 5, 4 for N = 2,
/// 4, 6. Throws std::invalid_argument for other sizes.
int default_trotter_steps(int n_sites);

/// Everything computed for one (theta, h_x) point.
struct PointResult {
    double theta = 0;
    double h_x = 0;
    std::optional<ObservableEstimate> raw;
    std::optional<double> mitigated;
    double exact_expectation = 0;  ///< zero-jump oracle
    double postselect_fraction = 0;
    uint64_t kept_shots = 0;
    double survival_exact = 0;
    std::optional<double> exceptional_theta;
    std::string status = "ok";
    ShotTable shots;
    QuasiDistribution quasi;
};

/// Simulates one point: build the Trotter circuit (lowered when noise is
/// enabled), run shots, post-select, optionally mitigate, and evaluate the
/// exact zero-jump oracle. Exceptional theta is left empty.
PointResult run_point(const SweepConfig &config, double theta, double h_x, uint64_t seed);

/// Row-major grid, theta outer and h_x inner. Point p uses seed
/// substream_seed(config.seed, p). Per-point failures are recorded in the
/// row's status; the sweep continues.
std::vector<PointResult> run_sweep(const SweepConfig &config);

/// Fixed header:
/// theta,h_x,expectation_raw,stderr_raw,expectation_mitigated,expectation_exact,
/// postselect_fraction,kept_shots,survival_exact,exceptional_theta,status
std::string sweep_csv(const std::vector<PointResult> &rows);
/// Raw shot tables and mitigated distributions per point.
std::string sweep_json(const std::vector<PointResult> &rows);

struct ExceptionalLineRow {
    double h_x = 0;
    std::optional<ExceptionalPoint> point;
    std::string status = "ok";
};

struct ExceptionalLine {
    std::vector<ExceptionalLineRow> rows;
    std::vector<std::string> warnings;  ///< shape violations (non-monotone in h_x)
};

ExceptionalLine exceptional_line(const HamiltonianSpec &base, const std::vector<double> &hx_values,
                                 const ExceptionalSearch &search = {}, int workers = 0);
/// Header: h_x,theta_star,bracket_width,status
std::string exceptional_csv(const ExceptionalLine &line);

struct ResourceRow {
    int n_sites = 0;
    int n_steps = 0;
    int64_t cnots = 0;
    int64_t measurements = 0;
    int64_t cnots_unn = 0;  ///< per step
    int64_t cnots_ux = 0;
    int64_t cnots_udc = 0;
};

/// Counts taken from the lowered circuit.
ResourceRow resources(int n_sites, SitePattern pattern, int n_steps);
std::string resources_table(const std::vector<ResourceRow> &rows);
/// Header: n_sites,n_steps,cnots,measurements
std::string resources_csv(const std::vector<ResourceRow> &rows);

/// Ideal distribution -> per-qubit readout corruption -> restricted inversion.
struct MitigationDemoConfig {
    int n_sites = 4;
    uint64_t n_shots = 100000;
    uint64_t seed = 1;
    ReadoutError readout{0.05, 0.05};
    int cutoff = 3;
};

struct MitigationDemoResult {
    std::vector<double> ideal;  ///< probability per basis index
    double ideal_expectation = 0;
    double noisy_expectation = 0;
    double mitigated_expectation = 0;
    std::map<std::string, uint64_t> noisy_counts;
};

/// Deterministic random product-plus-correlated distribution over n bits.
std::vector<double> synthetic_distribution(int n_bits, Rng &rng);

/// Samples n_shots bitstrings from `ideal`, corrupts each bit, mitigates.
MitigationDemoResult run_mitigation_demo(const MitigationDemoConfig &config, const std::vector<double> &ideal);
MitigationDemoResult run_mitigation_demo(const MitigationDemoConfig &config);

}  // namespace nhising

#endif
