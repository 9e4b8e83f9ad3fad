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

#ifndef NHISING_SIMULATOR_H
#define NHISING_SIMULATOR_H

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nhising/circuit.h"
#include "nhising/hamiltonian.h"
#include "nhising/noise.h"
#include "nhising/oracle.h"

namespace nhising {

// Bitstrings are text in qubit order: character i is the outcome of qubit i
// (site i+1). Ancilla records list mid-circuit outcomes by record slot.

std::string index_to_bits(uint64_t index, int n_bits);
/// Throws std::invalid_argument for characters other than '0'/'1'.
uint64_t bits_to_index(std::string_view bits);

struct ShotKey {
    std::string ancilla_record;
    std::string final_bits;
    auto operator<=>(const ShotKey &) const = default;
};

/// Raw simulation output: counts per (ancilla record, final bits).
struct ShotTable {
    std::map<ShotKey, uint64_t> entries;
    uint64_t n_shots = 0;

    void add(const ShotKey &key, uint64_t count = 1);
    /// Associative and commutative.
    void merge(const ShotTable &other);
    bool operator==(const ShotTable &) const = default;
};

/// {"n_shots": N, "entries": [{"ancilla": "01", "final": "10", "count": 7}, ...]}
std::string shot_table_to_json(const ShotTable &table);
ShotTable shot_table_from_json(std::string_view text);

struct RunOptions {
    uint64_t initial_state = 0;  ///< basis state of the system register; ancillas start in |0>
    int workers = 0;             ///< 0: default_workers()
};

/// Samples `n_shots` independent trajectories. Shot k draws only from the
/// substream substream_seed(seed, k), so the table depends on (circuit,
/// n_shots, seed, noise) and not on the worker count.
///
/// MeasureAncilla samples the Born rule, collapses and stores the (possibly
/// readout-corrupted) bit in its record slot. ResetAncilla returns the qubit
/// to |0> from its true post-measurement value. System qubits are measured by
/// Measure gates, and any left unmeasured are read at the end. Throws
/// std::logic_error if a trajectory loses normalization.
ShotTable run_shots(const Circuit &circuit, uint64_t n_shots, uint64_t seed, const NoiseModel *noise = nullptr,
                    const RunOptions &options = {});

struct PostSelection {
    std::map<std::string, uint64_t> counts;  ///< final bits of the kept shots
    uint64_t kept = 0;
    uint64_t total = 0;
    double fraction = 0;  ///< kept / total; 0 for an empty table
};

/// Keeps shots whose ancilla record is all zeros.
PostSelection post_select(const ShotTable &table);

struct ObservableEstimate {
    double value = 0;
    double standard_error = 0;  ///< sqrt(sample variance / shots)
    uint64_t shots = 0;
};

/// Frequency-weighted (1/N) sum Z_i. std::nullopt when there are no counts.
std::optional<double> expectation_observable(const std::map<std::string, uint64_t> &counts, int n_system);
std::optional<ObservableEstimate> estimate_observable(const std::map<std::string, uint64_t> &counts, int n_system);

struct PostSelectedEvolution {
    Amplitudes state;                   ///< normalized zero-jump state on the system register
    double survival = 1;                ///< product of the per-channel success probabilities
    std::vector<double> step_survival;  ///< success probability of each Trotter step
};

/// Deterministic zero-jump branch: per step, apply E0 on every dissipative
/// site (renormalizing and accumulating p0), then U_X, then U_NN, with the
/// same gate kernels as the shot simulator.
PostSelectedEvolution run_postselected_exact(const HamiltonianSpec &spec, double dt, int n_steps,
                                             const Amplitudes &psi0);
PostSelectedEvolution run_postselected_exact(const HamiltonianSpec &spec, double dt, int n_steps,
                                             uint64_t initial_state = 0);

/// <psi| (1/N) sum Z_i |psi> for a system-register state.
double observable_expectation(const Amplitudes &state, int n_system);

}  // namespace nhising

#endif
