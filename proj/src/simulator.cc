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

#include "nhising/simulator.h"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "nhising/channel.h"
#include "nhising/parallel.h"
#include "nhising/random.h"
#include "nhising/statevector.h"

namespace nhising {

std::string index_to_bits(uint64_t index, int n_bits) {
    std::string s(static_cast<size_t>(n_bits), '0');
    for (int i = 0; i < n_bits; i++) {
        if ((index >> i) & 1) {
            s[static_cast<size_t>(i)] = '1';
        }
    }
    return s;
}

uint64_t bits_to_index(std::string_view bits) {
    if (bits.size() > 64) {
        throw std::invalid_argument("bitstring longer than 64 bits");
    }
    uint64_t index = 0;
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            index |= uint64_t{1} << i;
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bitstring may only contain '0' and '1'");
        }
    }
    return index;
}

void ShotTable::add(const ShotKey &key, uint64_t count) {
    entries[key] += count;
    n_shots += count;
}

void ShotTable::merge(const ShotTable &other) {
    for (const auto &[key, count] : other.entries) {
        entries[key] += count;
    }
    n_shots += other.n_shots;
}

std::string shot_table_to_json(const ShotTable &table) {
    nlohmann::json j;
    j["n_shots"] = table.n_shots;
    j["entries"] = nlohmann::json::array();
    for (const auto &[key, count] : table.entries) {
        j["entries"].push_back({{"ancilla", key.ancilla_record}, {"final", key.final_bits}, {"count", count}});
    }
    return j.dump();
}

ShotTable shot_table_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ShotTable table;
    for (const auto &e : j.at("entries")) {
        table.add(ShotKey{e.at("ancilla").get<std::string>(), e.at("final").get<std::string>()},
                  e.at("count").get<uint64_t>());
    }
    if (table.n_shots != j.at("n_shots").get<uint64_t>()) {
        throw std::invalid_argument("shot table counts do not sum to n_shots");
    }
    return table;
}

namespace {

int sample_and_collapse(StateVector &psi, int q, Rng &rng) {
    const double p1 = psi.probability_one(q);
    if (p1 <= 0) {
        return 0;
    }
    if (p1 >= 1) {
        return 1;
    }
    const int outcome = uniform01(rng) < p1 ? 1 : 0;
    psi.collapse(q, outcome, outcome ? p1 : 1 - p1);
    return outcome;
}

struct ShotRunner {
    const Circuit &circuit;
    const NoiseModel *noise;
    const StateVector &initial;
    int record_length;

    ShotKey run(Rng &rng) const {
        StateVector psi = initial;
        const int n_system = circuit.n_system();
        std::string record(static_cast<size_t>(record_length), '0');
        std::string final_bits(static_cast<size_t>(n_system), '0');
        std::vector<bool> measured(static_cast<size_t>(n_system), false);
        auto read = [&](int q, int bit) { return noise ? corrupt_bit(bit, noise->readout_for(q), rng) : bit; };

        for (const Gate &g : circuit.gates()) {
            switch (g.kind) {
                case GateKind::MeasureAncilla: {
                    const int outcome = sample_and_collapse(psi, g.q0, rng);
                    record[static_cast<size_t>(g.slot)] = read(g.q0, outcome) ? '1' : '0';
                    break;
                }
                case GateKind::ResetAncilla:
                    if (sample_and_collapse(psi, g.q0, rng)) {
                        psi.apply_x(g.q0);
                    }
                    break;
                case GateKind::Measure: {
                    const int outcome = sample_and_collapse(psi, g.q0, rng);
                    if (g.q0 < n_system) {
                        final_bits[static_cast<size_t>(g.q0)] = read(g.q0, outcome) ? '1' : '0';
                        measured[static_cast<size_t>(g.q0)] = true;
                    }
                    break;
                }
                default:
                    psi.apply(g);
                    if (noise) {
                        if (is_two_qubit(g.kind)) {
                            const int qs[2] = {g.q0, g.q1};
                            apply_depolarizing(psi, qs, noise->p2, rng);
                        } else {
                            const int qs[1] = {g.q0};
                            apply_depolarizing(psi, qs, noise->p1, rng);
                        }
                    }
                    break;
            }
        }
        for (int q = 0; q < n_system; q++) {
            if (!measured[static_cast<size_t>(q)]) {
                final_bits[static_cast<size_t>(q)] = read(q, sample_and_collapse(psi, q, rng)) ? '1' : '0';
            }
        }
        if (std::abs(psi.norm() - 1) > 1e-10) {
            throw std::logic_error("trajectory lost normalization (norm " + std::to_string(psi.norm()) + ")");
        }
        return ShotKey{std::move(record), std::move(final_bits)};
    }
};

}  // namespace

ShotTable run_shots(const Circuit &circuit, uint64_t n_shots, uint64_t seed, const NoiseModel *noise,
                    const RunOptions &options) {
    if (noise) {
        noise->validate();
    }
    const uint64_t system_dim = uint64_t{1} << circuit.n_system();
    if (options.initial_state >= system_dim) {
        throw std::invalid_argument("initial state outside the system register");
    }
    for (const Gate &g : circuit.gates()) {
        if (g.kind == GateKind::MeasureAncilla && g.slot >= circuit.ancilla_record_length()) {
            throw std::invalid_argument("MeasureAncilla slot exceeds the ancilla record length");
        }
    }
    const StateVector initial(circuit.n_qubits(), options.initial_state);
    const ShotRunner runner{circuit, noise, initial, circuit.ancilla_record_length()};

    const int workers = options.workers > 0 ? options.workers : default_workers();
    const uint64_t batch = 4096;
    const uint64_t n_batches = (n_shots + batch - 1) / batch;
    std::vector<ShotTable> partial(n_batches);
    parallel_for(n_batches, workers, [&](size_t b) {
        const uint64_t begin = b * batch;
        const uint64_t end = std::min(n_shots, begin + batch);
        ShotTable &table = partial[b];
        for (uint64_t shot = begin; shot < end; shot++) {
            Rng rng(substream_seed(seed, shot));
            table.add(runner.run(rng));
        }
    });
    ShotTable result;
    for (const ShotTable &t : partial) {
        result.merge(t);
    }
    if (n_shots == 0) {
        result.n_shots = 0;
    }
    return result;
}

PostSelection post_select(const ShotTable &table) {
    PostSelection ps;
    ps.total = table.n_shots;
    for (const auto &[key, count] : table.entries) {
        if (key.ancilla_record.find('1') == std::string::npos) {
            ps.counts[key.final_bits] += count;
            ps.kept += count;
        }
    }
    ps.fraction = ps.total ? static_cast<double>(ps.kept) / static_cast<double>(ps.total) : 0.0;
    return ps;
}

std::optional<ObservableEstimate> estimate_observable(const std::map<std::string, uint64_t> &counts, int n_system) {
    uint64_t total = 0;
    double sum = 0;
    double sum_sq = 0;
    for (const auto &[bits, count] : counts) {
        if (static_cast<int>(bits.size()) != n_system) {
            throw std::invalid_argument("bitstring length does not match n_system");
        }
        const double o = observable_value(bits_to_index(bits), n_system);
        total += count;
        sum += o * static_cast<double>(count);
        sum_sq += o * o * static_cast<double>(count);
    }
    if (total == 0) {
        return std::nullopt;
    }
    const double n = static_cast<double>(total);
    ObservableEstimate e;
    e.value = sum / n;
    e.shots = total;
    const double variance = std::max(0.0, sum_sq / n - e.value * e.value);
    e.standard_error = std::sqrt(variance / n);
    return e;
}

std::optional<double> expectation_observable(const std::map<std::string, uint64_t> &counts, int n_system) {
    if (auto e = estimate_observable(counts, n_system)) {
        return e->value;
    }
    return std::nullopt;
}

PostSelectedEvolution run_postselected_exact(const HamiltonianSpec &spec, double dt, int n_steps,
                                             const Amplitudes &psi0) {
    spec.validate();
    if (n_steps < 0) {
        throw std::invalid_argument("n_steps must be >= 0");
    }
    const int n = spec.n_sites;
    if (psi0.size() != static_cast<Eigen::Index>(uint64_t{1} << n)) {
        throw std::invalid_argument("initial state dimension does not match n_sites");
    }
    const ChannelParams params = channel_params(spec.theta, dt);
    const Eigen::Matrix2cd e0 = kraus_pair(params).e0;
    const Eigen::Matrix2cd rx = single_qubit_matrix(GateKind::RX, -2.0 * spec.h_x * dt);
    const Eigen::Matrix2cd rz = single_qubit_matrix(GateKind::RZ, -2.0 * spec.lambda * dt);
    const std::vector<int> damped = dissipative_sites(n, spec.pattern);

    StateVector psi(psi0.normalized());
    PostSelectedEvolution out;
    for (int step = 0; step < n_steps; step++) {
        double step_p0 = 1;
        for (int q : damped) {
            const double p0 = 1 - params.gamma * psi.probability_one(q);
            psi.apply_1q(q, e0);
            psi = StateVector(psi.amplitudes() / std::sqrt(p0));
            step_p0 *= p0;
        }
        for (int q = 0; q < n; q++) {
            psi.apply_1q(q, rx);
        }
        for (int q = 0; q + 1 < n; q++) {
            psi.apply_cnot(q, q + 1);
            psi.apply_1q(q + 1, rz);
            psi.apply_cnot(q, q + 1);
        }
        out.step_survival.push_back(step_p0);
        out.survival *= step_p0;
    }
    out.state = psi.amplitudes();
    return out;
}

PostSelectedEvolution run_postselected_exact(const HamiltonianSpec &spec, double dt, int n_steps,
                                             uint64_t initial_state) {
    return run_postselected_exact(spec, dt, n_steps, StateVector(spec.n_sites, initial_state).amplitudes());
}

double observable_expectation(const Amplitudes &state, int n_system) {
    double e = 0;
    for (Eigen::Index i = 0; i < state.size(); i++) {
        e += std::norm(state[i]) * observable_value(static_cast<uint64_t>(i), n_system);
    }
    return e / state.squaredNorm();
}

}  // namespace nhising
