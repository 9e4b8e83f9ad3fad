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

#ifndef NHISING_CIRCUIT_H
#define NHISING_CIRCUIT_H

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nhising/hamiltonian.h"

namespace nhising {

enum class GateKind {
    X,
    SqrtX,
    RZ,
    RY,
    RX,
    CNOT,
    CRY,             ///< qubits = {control, target}
    MeasureAncilla,  ///< mid-circuit measurement into ancilla-record slot `slot`
    ResetAncilla,
    Measure,         ///< terminal measurement of a system qubit
};

std::string_view gate_name(GateKind kind);
/// Throws std::invalid_argument for unknown names.
GateKind parse_gate_name(std::string_view name);

bool is_two_qubit(GateKind kind);
bool is_rotation(GateKind kind);
bool is_unitary(GateKind kind);

struct Gate {
    GateKind kind = GateKind::X;
    int q0 = 0;
    int q1 = -1;       ///< second qubit of CNOT/CRY (target), else -1
    double angle = 0;  ///< rotations only
    int slot = -1;     ///< MeasureAncilla only

    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate sx(int q) { return {GateKind::SqrtX, q}; }
    static Gate rz(int q, double a) { return {GateKind::RZ, q, -1, a}; }
    static Gate ry(int q, double a) { return {GateKind::RY, q, -1, a}; }
    static Gate rx(int q, double a) { return {GateKind::RX, q, -1, a}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target}; }
    static Gate cry(int control, int target, double a) { return {GateKind::CRY, control, target, a}; }
    static Gate measure_ancilla(int q, int slot) { return {GateKind::MeasureAncilla, q, -1, 0, slot}; }
    static Gate reset_ancilla(int q) { return {GateKind::ResetAncilla, q}; }
    static Gate measure(int q) { return {GateKind::Measure, q}; }

    bool operator==(const Gate &other) const = default;
};

/// Ordered gate list over n_system system qubits (indices 0..n_system-1)
/// followed by n_ancilla ancillas (indices n_system..n_system+n_ancilla-1).
class Circuit {
   public:
    Circuit() = default;
    /// `ancilla_map[site]` is the ancilla qubit paired with system qubit
    /// `site`, or -1. Empty means no pairing.
    Circuit(int n_system, int n_ancilla, std::vector<int> ancilla_map = {});

    int n_system() const { return n_system_; }
    int n_ancilla() const { return n_ancilla_; }
    int n_qubits() const { return n_system_ + n_ancilla_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::vector<int> &ancilla_map() const { return ancilla_map_; }
    bool empty() const { return gates_.empty(); }

    /// Throws std::invalid_argument for out-of-range or coincident qubits and
    /// non-finite angles.
    void append(const Gate &gate);
    /// Appends every gate of `other`, which must have the same n_system and a
    /// register no larger than this one.
    void append(const Circuit &other);

    /// Highest MeasureAncilla slot + 1 (length of the ancilla record).
    int ancilla_record_length() const;

    /// Checks that each MeasureAncilla is followed by a ResetAncilla on the
    /// same qubit before that qubit is used again. Throws std::logic_error.
    void check_measure_reset() const;

    bool operator==(const Circuit &other) const = default;

   private:
    int n_system_ = 0;
    int n_ancilla_ = 0;
    std::vector<int> ancilla_map_;
    std::vector<Gate> gates_;
};

/// exp(i lambda dt sum Z_i Z_{i+1}) as CNOT, RZ(-2 lambda dt), CNOT per bond.
/// Throws std::invalid_argument for n_system < 2.
Circuit build_unn(int n_system, double lambda, double dt);

/// exp(i h_x dt sum X_i) as RX(-2 h_x dt) on every site.
Circuit build_ux(int n_system, double h_x, double dt);

/// Damping block: for each dissipative site, CRY(phi) from the site to its
/// ancilla, then measure the ancilla (slot first_slot, first_slot+1, ...) and
/// reset it. Throws std::invalid_argument unless 0 <= gamma < 1.
Circuit build_udc(int n_system, SitePattern pattern, double gamma, int first_slot = 0);

/// n_steps repetitions of [damping block, U_X, U_NN], then a terminal
/// Measure on every system qubit.
Circuit build_trotter_circuit(const HamiltonianSpec &spec, double dt, int n_steps);

/// One step without the terminal measurement.
Circuit build_trotter_step(const HamiltonianSpec &spec, double dt, int first_slot = 0);

/// Rewrites to {CNOT, RZ, SqrtX, X, MeasureAncilla, ResetAncilla, Measure}:
///   RX(t) -> RZ(pi/2) SX RZ(t+pi) SX RZ(pi/2)
///   RY(t) -> SX RZ(t+pi) SX RZ(pi)                (time order)
///   CRY(c,t; p) -> RY_t(p/2) CNOT(c,t) RY_t(-p/2) CNOT(c,t)
/// Each rewrite is exact up to global phase.
Circuit lower_to_basis(const Circuit &circuit);

/// CNOT count of the lowered circuit.
int64_t cnot_count(const Circuit &circuit);

/// MeasureAncilla plus terminal Measure gates.
int64_t measurement_count(const Circuit &circuit);

struct Topology {
    std::set<std::pair<int, int>> edges;  ///< stored with first < second

    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    /// True if the edges connect every qubit in `qubits`.
    bool connects(const std::vector<int> &qubits) const;
};

/// Spine over the system qubits plus one tooth from each dissipative site to
/// its ancilla (n_system + k for the k-th dissipative site).
Topology comb_topology(int n_system, SitePattern pattern);
/// Nearest-neighbour chain over n qubits.
Topology line_topology(int n_qubits);

struct TopologyViolation {
    size_t gate_index = 0;
    int q0 = 0;
    int q1 = 0;
    bool operator==(const TopologyViolation &other) const = default;
};

/// Every two-qubit gate whose pair is not an edge.
std::vector<TopologyViolation> validate_topology(const Circuit &circuit, const Topology &topology);

/// Line-oriented text form:
///   circuit <n_system> <n_ancilla>
///   ancillas <q> <q> ...    (ancilla per system qubit, -1 for none; optional)
///   <KIND> <qubit> [<qubit>] [<angle>|<slot>]
/// Angles are written with 17 significant digits so parsing round-trips.
std::string to_text(const Circuit &circuit);
/// Throws std::invalid_argument with a line number on malformed input.
Circuit circuit_from_text(std::string_view text);

}  // namespace nhising

#endif
