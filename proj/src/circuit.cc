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

#include "nhising/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nhising/channel.h"

namespace nhising {

namespace {

constexpr struct {
    GateKind kind;
    std::string_view name;
} kGateNames[] = {
    {GateKind::X, "X"},
    {GateKind::SqrtX, "SX"},
    {GateKind::RZ, "RZ"},
    {GateKind::RY, "RY"},
    {GateKind::RX, "RX"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CRY, "CRY"},
    {GateKind::MeasureAncilla, "MEASURE_ANCILLA"},
    {GateKind::ResetAncilla, "RESET_ANCILLA"},
    {GateKind::Measure, "MEASURE"},
};

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &entry : kGateNames) {
        if (entry.kind == kind) {
            return entry.name;
        }
    }
    return "?";
}

GateKind parse_gate_name(std::string_view name) {
    for (const auto &entry : kGateNames) {
        if (entry.name == name) {
            return entry.kind;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CRY;
}

bool is_rotation(GateKind kind) {
    return kind == GateKind::RZ || kind == GateKind::RY || kind == GateKind::RX || kind == GateKind::CRY;
}

bool is_unitary(GateKind kind) {
    return kind != GateKind::MeasureAncilla && kind != GateKind::ResetAncilla && kind != GateKind::Measure;
}

Circuit::Circuit(int n_system, int n_ancilla, std::vector<int> ancilla_map)
    : n_system_(n_system), n_ancilla_(n_ancilla), ancilla_map_(std::move(ancilla_map)) {
    if (n_system < 0 || n_ancilla < 0) {
        throw std::invalid_argument("qubit counts must be non-negative");
    }
    if (!ancilla_map_.empty() && static_cast<int>(ancilla_map_.size()) != n_system) {
        throw std::invalid_argument("ancilla_map must have one entry per system qubit");
    }
    for (int a : ancilla_map_) {
        if (a != -1 && (a < n_system || a >= n_system + n_ancilla)) {
            throw std::invalid_argument("ancilla_map entry outside the ancilla register");
        }
    }
}

void Circuit::append(const Gate &gate) {
    const int n = n_qubits();
    if (gate.q0 < 0 || gate.q0 >= n) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + ": qubit " + std::to_string(gate.q0) +
                                    " out of range");
    }
    if (is_two_qubit(gate.kind)) {
        if (gate.q1 < 0 || gate.q1 >= n) {
            throw std::invalid_argument(std::string(gate_name(gate.kind)) + ": qubit " + std::to_string(gate.q1) +
                                        " out of range");
        }
        if (gate.q1 == gate.q0) {
            throw std::invalid_argument(std::string(gate_name(gate.kind)) + " needs two distinct qubits");
        }
    } else if (gate.q1 != -1) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + " takes a single qubit");
    }
    if (is_rotation(gate.kind) && !std::isfinite(gate.angle)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    if (gate.kind == GateKind::MeasureAncilla && gate.slot < 0) {
        throw std::invalid_argument("MeasureAncilla needs a record slot");
    }
    gates_.push_back(gate);
}

void Circuit::append(const Circuit &other) {
    if (other.n_system_ != n_system_ || other.n_ancilla_ > n_ancilla_) {
        throw std::invalid_argument("cannot append a circuit over an incompatible register");
    }
    for (const Gate &g : other.gates_) {
        append(g);
    }
}

int Circuit::ancilla_record_length() const {
    int length = 0;
    for (const Gate &g : gates_) {
        if (g.kind == GateKind::MeasureAncilla) {
            length = std::max(length, g.slot + 1);
        }
    }
    return length;
}

void Circuit::check_measure_reset() const {
    std::vector<bool> pending(n_qubits(), false);
    for (size_t i = 0; i < gates_.size(); i++) {
        const Gate &g = gates_[i];
        if (g.kind == GateKind::ResetAncilla) {
            pending[g.q0] = false;
            continue;
        }
        for (int q : {g.q0, g.q1}) {
            if (q >= 0 && pending[q]) {
                throw std::logic_error("gate " + std::to_string(i) + " uses qubit " + std::to_string(q) +
                                       " after a measurement without a reset");
            }
        }
        if (g.kind == GateKind::MeasureAncilla) {
            pending[g.q0] = true;
        }
    }
    for (int q = 0; q < n_qubits(); q++) {
        if (pending[q]) {
            throw std::logic_error("ancilla " + std::to_string(q) + " measured but never reset");
        }
    }
}

Circuit build_unn(int n_system, double lambda, double dt) {
    if (n_system < 2) {
        throw std::invalid_argument("build_unn needs at least 2 system qubits");
    }
    Circuit c(n_system, 0);
    const double angle = -2.0 * lambda * dt;
    for (int q = 0; q + 1 < n_system; q++) {
        c.append(Gate::cnot(q, q + 1));
        c.append(Gate::rz(q + 1, angle));
        c.append(Gate::cnot(q, q + 1));
    }
    return c;
}

Circuit build_ux(int n_system, double h_x, double dt) {
    if (n_system < 1) {
        throw std::invalid_argument("build_ux needs at least 1 system qubit");
    }
    Circuit c(n_system, 0);
    for (int q = 0; q < n_system; q++) {
        c.append(Gate::rx(q, -2.0 * h_x * dt));
    }
    return c;
}

Circuit build_udc(int n_system, SitePattern pattern, double gamma, int first_slot) {
    if (!(gamma >= 0 && gamma < 1)) {
        throw std::invalid_argument("damping gamma must lie in [0, 1)");
    }
    const std::vector<int> sites = dissipative_sites(n_system, pattern);
    const int n_ancilla = static_cast<int>(sites.size());
    std::vector<int> ancilla_map(n_system, -1);
    for (int k = 0; k < n_ancilla; k++) {
        ancilla_map[sites[k]] = n_system + k;
    }
    Circuit c(n_system, n_ancilla, ancilla_map);
    const double phi = cry_angle_for_gamma(gamma);
    int slot = first_slot;
    for (int site : sites) {
        const int ancilla = ancilla_map[site];
        c.append(Gate::cry(site, ancilla, phi));
        c.append(Gate::measure_ancilla(ancilla, slot++));
        c.append(Gate::reset_ancilla(ancilla));
    }
    return c;
}

Circuit build_trotter_step(const HamiltonianSpec &spec, double dt, int first_slot) {
    spec.validate();
    const ChannelParams params = channel_params(spec.theta, dt);
    const int n = spec.n_sites;
    const Circuit udc = build_udc(n, spec.pattern, params.gamma, first_slot);
    Circuit step(n, udc.n_ancilla(), udc.ancilla_map());
    step.append(udc);
    step.append(build_ux(n, spec.h_x, dt));
    if (n >= 2) {
        step.append(build_unn(n, spec.lambda, dt));
    }
    return step;
}

Circuit build_trotter_circuit(const HamiltonianSpec &spec, double dt, int n_steps) {
    if (n_steps < 1) {
        throw std::invalid_argument("n_steps must be >= 1");
    }
    const int per_step = static_cast<int>(dissipative_sites(spec.n_sites, spec.pattern).size());
    Circuit full;
    for (int s = 0; s < n_steps; s++) {
        const Circuit step = build_trotter_step(spec, dt, s * per_step);
        if (s == 0) {
            full = Circuit(step.n_system(), step.n_ancilla(), step.ancilla_map());
        }
        full.append(step);
    }
    for (int q = 0; q < spec.n_sites; q++) {
        full.append(Gate::measure(q));
    }
    return full;
}

Circuit lower_to_basis(const Circuit &circuit) {
    constexpr double pi = std::numbers::pi;
    Circuit out(circuit.n_system(), circuit.n_ancilla(), circuit.ancilla_map());
    auto lower_rx = [&](int q, double t) {
        out.append(Gate::rz(q, pi / 2));
        out.append(Gate::sx(q));
        out.append(Gate::rz(q, t + pi));
        out.append(Gate::sx(q));
        out.append(Gate::rz(q, pi / 2));
    };
    auto lower_ry = [&](int q, double t) {
        out.append(Gate::sx(q));
        out.append(Gate::rz(q, t + pi));
        out.append(Gate::sx(q));
        out.append(Gate::rz(q, pi));
    };
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::RX:
                lower_rx(g.q0, g.angle);
                break;
            case GateKind::RY:
                lower_ry(g.q0, g.angle);
                break;
            case GateKind::CRY:
                lower_ry(g.q1, g.angle / 2);
                out.append(Gate::cnot(g.q0, g.q1));
                lower_ry(g.q1, -g.angle / 2);
                out.append(Gate::cnot(g.q0, g.q1));
                break;
            case GateKind::X:
            case GateKind::SqrtX:
            case GateKind::RZ:
            case GateKind::CNOT:
            case GateKind::MeasureAncilla:
            case GateKind::ResetAncilla:
            case GateKind::Measure:
                out.append(g);
                break;
            default:
                throw std::invalid_argument("lower_to_basis: unknown gate kind");
        }
    }
    return out;
}

int64_t cnot_count(const Circuit &circuit) {
    int64_t count = 0;
    for (const Gate &g : circuit.gates()) {
        if (g.kind == GateKind::CNOT) {
            count += 1;
        } else if (g.kind == GateKind::CRY) {
            count += 2;
        }
    }
    return count;
}

int64_t measurement_count(const Circuit &circuit) {
    int64_t count = 0;
    for (const Gate &g : circuit.gates()) {
        count += g.kind == GateKind::MeasureAncilla || g.kind == GateKind::Measure;
    }
    return count;
}

void Topology::add_edge(int a, int b) {
    edges.insert({std::min(a, b), std::max(a, b)});
}

bool Topology::has_edge(int a, int b) const {
    return edges.contains({std::min(a, b), std::max(a, b)});
}

bool Topology::connects(const std::vector<int> &qubits) const {
    if (qubits.empty()) {
        return true;
    }
    std::set<int> reached{qubits.front()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto &[a, b] : edges) {
            if (reached.contains(a) != reached.contains(b)) {
                reached.insert(a);
                reached.insert(b);
                grew = true;
            }
        }
    }
    for (int q : qubits) {
        if (!reached.contains(q)) {
            return false;
        }
    }
    return true;
}

Topology comb_topology(int n_system, SitePattern pattern) {
    Topology t = line_topology(n_system);
    const std::vector<int> sites = dissipative_sites(n_system, pattern);
    for (size_t k = 0; k < sites.size(); k++) {
        t.add_edge(sites[k], n_system + static_cast<int>(k));
    }
    return t;
}

Topology line_topology(int n_qubits) {
    Topology t;
    for (int q = 0; q + 1 < n_qubits; q++) {
        t.add_edge(q, q + 1);
    }
    return t;
}

std::vector<TopologyViolation> validate_topology(const Circuit &circuit, const Topology &topology) {
    std::vector<TopologyViolation> violations;
    const auto &gates = circuit.gates();
    for (size_t i = 0; i < gates.size(); i++) {
        const Gate &g = gates[i];
        if (is_two_qubit(g.kind) && !topology.has_edge(g.q0, g.q1)) {
            violations.push_back({i, g.q0, g.q1});
        }
    }
    return violations;
}

}  // namespace nhising
