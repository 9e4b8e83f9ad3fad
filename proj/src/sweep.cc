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

#include "nhising/sweep.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "nhising/channel.h"
#include "nhising/circuit.h"
#include "nhising/parallel.h"
#include "nhising/random.h"

namespace nhising {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string opt_num(const std::optional<double> &v) {
    return v ? num(*v) : std::string();
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return quoted + "\"";
}

}  // namespace

std::vector<double> GridAxis::values() const {
    if (count < 1) {
        throw std::invalid_argument("grid count must be >= 1");
    }
    std::vector<double> v(static_cast<size_t>(count));
    for (int i = 0; i < count; i++) {
        v[static_cast<size_t>(i)] = count == 1 ? min : min + (max - min) * i / (count - 1);
    }
    return v;
}

int default_trotter_steps(int n_sites) {
    switch (n_sites) {
        case 2:
            return 7;
        case 4:
            return 5;
        case 6:
            return 4;
        default:
            throw std::invalid_argument("no default Trotter step count for " + std::to_string(n_sites) +
                                        " sites; set n_steps");
    }
}

void SweepConfig::validate(bool needs_steps) const {
    spec(0.0, 0.0).validate();
    if (!(dt > 0) || !std::isfinite(dt)) {
        throw std::invalid_argument("dt must be > 0");
    }
    if (n_steps < 0) {
        throw std::invalid_argument("n_steps must be >= 0");
    }
    if (needs_steps) {
        resolved_steps();
    }
    if (theta_grid.count < 1 || hx_grid.count < 1) {
        throw std::invalid_argument("grid counts must be >= 1");
    }
    if (theta_grid.min < 0) {
        throw std::invalid_argument("theta grid must be non-negative");
    }
    if (noise) {
        noise->validate();
    }
    if (mitigation.cutoff < 0) {
        throw std::invalid_argument("mitigation cutoff must be >= 0");
    }
    if (initial_state >= (uint64_t{1} << n_sites)) {
        throw std::invalid_argument("initial state outside the system register");
    }
}

int SweepConfig::resolved_steps() const {
    return n_steps > 0 ? n_steps : default_trotter_steps(n_sites);
}

HamiltonianSpec SweepConfig::spec(double theta, double h_x) const {
    return HamiltonianSpec{lambda, h_x, theta, n_sites, pattern};
}

PointResult run_point(const SweepConfig &config, double theta, double h_x, uint64_t seed) {
    PointResult r;
    r.theta = theta;
    r.h_x = h_x;
    const HamiltonianSpec spec = config.spec(theta, h_x);
    const int steps = config.resolved_steps();

    Circuit circuit = build_trotter_circuit(spec, config.dt, steps);
    const NoiseModel *noise = nullptr;
    if (config.noise && !config.noise->is_noiseless()) {
        circuit = lower_to_basis(circuit);
        noise = &*config.noise;
    }
    RunOptions options;
    options.initial_state = config.initial_state;
    options.workers = config.workers;
    r.shots = run_shots(circuit, config.n_shots, seed, noise, options);

    const PostSelection ps = post_select(r.shots);
    r.postselect_fraction = ps.fraction;
    r.kept_shots = ps.kept;
    r.raw = estimate_observable(ps.counts, spec.n_sites);

    const PostSelectedEvolution exact = run_postselected_exact(spec, config.dt, steps, config.initial_state);
    r.survival_exact = exact.survival;
    r.exact_expectation = observable_expectation(exact.state, spec.n_sites);

    if (!r.raw) {
        r.status = "no post-selected shots";
    } else if (config.mitigation.enabled) {
        std::vector<ReadoutError> readout;
        for (int q = 0; q < spec.n_sites; q++) {
            readout.push_back(config.noise ? config.noise->readout_for(q) : ReadoutError{});
        }
        r.quasi = mitigate(ps.counts, ConfusionSpec::from_readout(readout), config.mitigation.cutoff);
        r.mitigated = quasi_expectation(r.quasi, spec.n_sites);
    }
    return r;
}

std::vector<PointResult> run_sweep(const SweepConfig &config) {
    config.validate();
    const std::vector<double> thetas = config.theta_grid.values();
    const std::vector<double> fields = config.hx_grid.values();

    // One exceptional point per h_x column.
    std::vector<std::optional<double>> star(fields.size());
    std::vector<std::string> star_status(fields.size());
    const HamiltonianSpec base = config.spec(0.0, 0.0);
    ExceptionalSearch search;
    search.theta_max = config.exceptional_theta_max;
    const int workers = config.workers > 0 ? config.workers : default_workers();
    parallel_for(fields.size(), workers, [&](size_t j) {
        try {
            star[j] = exceptional_theta(base, fields[j], search).theta_star;
        } catch (const std::exception &e) {
            star_status[j] = e.what();
        }
    });

    SweepConfig per_point = config;
    per_point.workers = 1;
    std::vector<PointResult> rows(thetas.size() * fields.size());
    parallel_for(rows.size(), workers, [&](size_t p) {
        const double theta = thetas[p / fields.size()];
        const double h_x = fields[p % fields.size()];
        try {
            rows[p] = run_point(per_point, theta, h_x, substream_seed(config.seed, p));
        } catch (const std::exception &e) {
            rows[p] = PointResult{};
            rows[p].theta = theta;
            rows[p].h_x = h_x;
            rows[p].status = std::string("error: ") + e.what();
        }
        rows[p].exceptional_theta = star[p % fields.size()];
        if (!star_status[p % fields.size()].empty() && rows[p].status == "ok") {
            rows[p].status = "exceptional search: " + star_status[p % fields.size()];
        }
    });
    return rows;
}

std::string sweep_csv(const std::vector<PointResult> &rows) {
    std::string out =
        "theta,h_x,expectation_raw,stderr_raw,expectation_mitigated,expectation_exact,postselect_fraction,"
        "kept_shots,survival_exact,exceptional_theta,status\n";
    for (const PointResult &r : rows) {
        out += num(r.theta) + "," + num(r.h_x) + ",";
        out += (r.raw ? num(r.raw->value) : "") + "," + (r.raw ? num(r.raw->standard_error) : "") + ",";
        out += opt_num(r.mitigated) + "," + num(r.exact_expectation) + "," + num(r.postselect_fraction) + ",";
        out += std::to_string(r.kept_shots) + "," + num(r.survival_exact) + "," + opt_num(r.exceptional_theta) + ",";
        out += csv_field(r.status) + "\n";
    }
    return out;
}

std::string sweep_json(const std::vector<PointResult> &rows) {
    nlohmann::json points = nlohmann::json::array();
    for (const PointResult &r : rows) {
        nlohmann::json p;
        p["theta"] = r.theta;
        p["h_x"] = r.h_x;
        p["shots"] = nlohmann::json::parse(shot_table_to_json(r.shots));
        nlohmann::json quasi = nlohmann::json::object();
        for (const auto &[bits, w] : r.quasi) {
            quasi[bits] = w;
        }
        p["mitigated"] = quasi;
        points.push_back(std::move(p));
    }
    return nlohmann::json{{"points", points}}.dump(1);
}

ExceptionalLine exceptional_line(const HamiltonianSpec &base, const std::vector<double> &hx_values,
                                 const ExceptionalSearch &search, int workers) {
    ExceptionalLine line;
    line.rows.resize(hx_values.size());
    parallel_for(hx_values.size(), workers > 0 ? workers : default_workers(), [&](size_t i) {
        ExceptionalLineRow &row = line.rows[i];
        row.h_x = hx_values[i];
        try {
            row.point = exceptional_theta(base, hx_values[i], search);
        } catch (const std::exception &e) {
            row.status = e.what();
        }
    });
    const ExceptionalLineRow *prev = nullptr;
    for (const ExceptionalLineRow &row : line.rows) {
        if (!row.point) {
            continue;
        }
        if (prev && row.h_x > prev->h_x && row.point->theta_star + search.tolerance < prev->point->theta_star) {
            line.warnings.push_back("exceptional line decreases between h_x=" + num(prev->h_x) + " and h_x=" +
                                    num(row.h_x));
        }
        prev = &row;
    }
    return line;
}

std::string exceptional_csv(const ExceptionalLine &line) {
    std::string out = "h_x,theta_star,bracket_width,status\n";
    for (const ExceptionalLineRow &row : line.rows) {
        out += num(row.h_x) + ",";
        out += row.point ? num(row.point->theta_star) + "," + num(row.point->bracket_width) : std::string(",");
        out += "," + csv_field(row.status) + "\n";
    }
    return out;
}

ResourceRow resources(int n_sites, SitePattern pattern, int n_steps) {
    const HamiltonianSpec spec{1.0, 1.0, 0.5, n_sites, pattern};
    const double dt = 0.3;
    const Circuit lowered = lower_to_basis(build_trotter_circuit(spec, dt, n_steps));
    ResourceRow row;
    row.n_sites = n_sites;
    row.n_steps = n_steps;
    row.cnots = cnot_count(lowered);
    row.measurements = measurement_count(lowered);
    row.cnots_unn = n_sites >= 2 ? cnot_count(lower_to_basis(build_unn(n_sites, spec.lambda, dt))) : 0;
    row.cnots_ux = cnot_count(lower_to_basis(build_ux(n_sites, spec.h_x, dt)));
    row.cnots_udc =
        cnot_count(lower_to_basis(build_udc(n_sites, pattern, channel_params(spec.theta, dt).gamma)));
    return row;
}

std::string resources_table(const std::vector<ResourceRow> &rows) {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%4s %5s %8s %13s %11s %10s %11s\n", "N", "N_t", "CNOTs", "measurements",
                  "U_NN/step", "U_X/step", "U_DC/step");
    out += buf;
    for (const ResourceRow &r : rows) {
        std::snprintf(buf, sizeof(buf), "%4d %5d %8lld %13lld %11lld %10lld %11lld\n", r.n_sites, r.n_steps,
                      static_cast<long long>(r.cnots), static_cast<long long>(r.measurements),
                      static_cast<long long>(r.cnots_unn), static_cast<long long>(r.cnots_ux),
                      static_cast<long long>(r.cnots_udc));
        out += buf;
    }
    return out;
}

std::string resources_csv(const std::vector<ResourceRow> &rows) {
    std::string out = "n_sites,n_steps,cnots,measurements\n";
    for (const ResourceRow &r : rows) {
        out += std::to_string(r.n_sites) + "," + std::to_string(r.n_steps) + "," + std::to_string(r.cnots) + "," +
               std::to_string(r.measurements) + "\n";
    }
    return out;
}

std::vector<double> synthetic_distribution(int n_bits, Rng &rng) {
    const uint64_t dim = uint64_t{1} << n_bits;
    std::vector<double> bias(static_cast<size_t>(n_bits));
    for (double &b : bias) {
        b = 0.05 + 0.3 * uniform01(rng);
    }
    std::vector<double> p(dim);
    for (uint64_t x = 0; x < dim; x++) {
        double w = 1;
        for (int q = 0; q < n_bits; q++) {
            w *= ((x >> q) & 1) ? bias[static_cast<size_t>(q)] : 1 - bias[static_cast<size_t>(q)];
        }
        p[x] = w;
    }
    // A few correlated spikes on top of the product distribution.
    const double mix = 0.3 * uniform01(rng);
    const int spikes = 1 + static_cast<int>(uniform01(rng) * 3);
    std::vector<double> spike_w(static_cast<size_t>(spikes));
    for (double &w : spike_w) {
        w = 0.1 + uniform01(rng);
    }
    const double spike_sum = std::accumulate(spike_w.begin(), spike_w.end(), 0.0);
    for (double &v : p) {
        v *= 1 - mix;
    }
    for (int s = 0; s < spikes; s++) {
        const auto x = static_cast<uint64_t>(uniform01(rng) * static_cast<double>(dim));
        p[std::min(x, dim - 1)] += mix * spike_w[static_cast<size_t>(s)] / spike_sum;
    }
    return p;
}

MitigationDemoResult run_mitigation_demo(const MitigationDemoConfig &config, const std::vector<double> &ideal) {
    const int n = config.n_sites;
    if (ideal.size() != (uint64_t{1} << n)) {
        throw std::invalid_argument("ideal distribution size does not match n_sites");
    }
    MitigationDemoResult result;
    result.ideal = ideal;
    std::vector<double> cumulative(ideal.size());
    std::partial_sum(ideal.begin(), ideal.end(), cumulative.begin());
    const double total = cumulative.back();
    for (size_t x = 0; x < ideal.size(); x++) {
        result.ideal_expectation += ideal[x] / total * observable_value(x, n);
    }

    Rng rng(substream_seed(config.seed, 0x5eed));
    std::map<uint64_t, uint64_t> by_index;
    for (uint64_t shot = 0; shot < config.n_shots; shot++) {
        const double u = uniform01(rng) * total;
        auto x = static_cast<uint64_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        x = std::min<uint64_t>(x, ideal.size() - 1);
        uint64_t observed = 0;
        for (int q = 0; q < n; q++) {
            if (corrupt_bit(static_cast<int>((x >> q) & 1), config.readout, rng)) {
                observed |= uint64_t{1} << q;
            }
        }
        by_index[observed]++;
    }
    for (const auto &[x, c] : by_index) {
        result.noisy_counts[index_to_bits(x, n)] = c;
    }
    result.noisy_expectation = *expectation_observable(result.noisy_counts, n);
    const QuasiDistribution quasi =
        mitigate(result.noisy_counts, ConfusionSpec::uniform(n, config.readout), config.cutoff);
    result.mitigated_expectation = quasi_expectation(quasi, n);
    return result;
}

MitigationDemoResult run_mitigation_demo(const MitigationDemoConfig &config) {
    Rng rng(substream_seed(config.seed, 0xd157));
    return run_mitigation_demo(config, synthetic_distribution(config.n_sites, rng));
}

}  // namespace nhising
