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

// Command-line front end. Flags override the matching config key.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nhising/config.h"
#include "nhising/simulator.h"
#include "nhising/sweep.h"

using namespace nhising;

namespace {

struct Overrides {
    std::string config;
    std::optional<int> n_sites;
    std::optional<std::string> pattern;
    std::optional<double> lambda;
    std::optional<double> dt;
    std::optional<int> n_steps;
    std::optional<double> theta_min, theta_max;
    std::optional<int> theta_count;
    std::optional<double> hx_min, hx_max;
    std::optional<int> hx_count;
    std::optional<uint64_t> shots;
    std::optional<uint64_t> seed;
    std::optional<std::string> initial_state;
    std::optional<std::string> noise;
    std::optional<double> p1, p2, p01, p10;
    bool mitigate = false;
    bool no_mitigate = false;
    std::optional<int> cutoff;
    std::optional<double> exceptional_theta_max;
    std::optional<int> workers;
};

void add_model_flags(CLI::App *app, Overrides &o) {
    app->add_option("--config", o.config, "JSON config file");
    app->add_option("--n-sites", o.n_sites, "number of spins");
    app->add_option("--pattern", o.pattern, "damping pattern: all | alternate");
    app->add_option("--lambda", o.lambda, "ZZ coupling");
    app->add_option("--dt", o.dt, "Trotter step");
    app->add_option("--workers", o.workers, "worker threads (default: $NHISING_WORKERS or all cores)");
}

void add_run_flags(CLI::App *app, Overrides &o) {
    app->add_option("--n-steps", o.n_steps, "Trotter steps (default per size)");
    app->add_option("--shots", o.shots, "shots per point");
    app->add_option("--seed", o.seed, "master seed");
    app->add_option("--initial-state", o.initial_state, "system bit string, character i = qubit i");
    app->add_option("--noise", o.noise, "demo | none");
    app->add_option("--p1", o.p1, "1-qubit depolarizing rate");
    app->add_option("--p2", o.p2, "2-qubit depolarizing rate");
    app->add_option("--p01", o.p01, "readout P(1|0)");
    app->add_option("--p10", o.p10, "readout P(0|1)");
    app->add_flag("--mitigate", o.mitigate, "apply readout mitigation");
    app->add_flag("--no-mitigate", o.no_mitigate, "disable readout mitigation");
    app->add_option("--cutoff", o.cutoff, "mitigation Hamming cutoff");
}

void add_grid_flags(CLI::App *app, Overrides &o) {
    app->add_option("--theta-min", o.theta_min);
    app->add_option("--theta-max", o.theta_max);
    app->add_option("--theta-count", o.theta_count);
    app->add_option("--hx-min", o.hx_min);
    app->add_option("--hx-max", o.hx_max);
    app->add_option("--hx-count", o.hx_count);
}

SweepConfig resolve(const Overrides &o, SweepConfig base = {}, bool needs_steps = true) {
    SweepConfig c = base;
    if (!o.config.empty()) c = load_config(o.config, base);
    if (o.n_sites) c.n_sites = *o.n_sites;
    if (o.pattern) c.pattern = parse_pattern(*o.pattern);
    if (o.lambda) c.lambda = *o.lambda;
    if (o.dt) c.dt = *o.dt;
    if (o.n_steps) c.n_steps = *o.n_steps;
    if (o.theta_min) c.theta_grid.min = *o.theta_min;
    if (o.theta_max) c.theta_grid.max = *o.theta_max;
    if (o.theta_count) c.theta_grid.count = *o.theta_count;
    if (o.hx_min) c.hx_grid.min = *o.hx_min;
    if (o.hx_max) c.hx_grid.max = *o.hx_max;
    if (o.hx_count) c.hx_grid.count = *o.hx_count;
    if (o.shots) c.n_shots = *o.shots;
    if (o.seed) c.seed = *o.seed;
    if (o.initial_state) {
        if (static_cast<int>(o.initial_state->size()) != c.n_sites) {
            throw std::invalid_argument("--initial-state must have n_sites bits");
        }
        c.initial_state = bits_to_index(*o.initial_state);
    }
    if (o.noise) {
        if (*o.noise == "demo") {
            c.noise = NoiseModel::demo_defaults();
        } else if (*o.noise == "none") {
            c.noise.reset();
        } else {
            throw std::invalid_argument("--noise must be demo or none");
        }
    }
    if (o.p1 || o.p2 || o.p01 || o.p10) {
        NoiseModel m = c.noise.value_or(NoiseModel{});
        if (o.p1) m.p1 = *o.p1;
        if (o.p2) m.p2 = *o.p2;
        if (o.p01 || o.p10) {
            ReadoutError r = m.readout.empty() ? ReadoutError{} : m.readout.front();
            if (o.p01) r.p01 = *o.p01;
            if (o.p10) r.p10 = *o.p10;
            m.readout = {r};
        }
        c.noise = m;
    }
    if (o.mitigate) c.mitigation.enabled = true;
    if (o.no_mitigate) c.mitigation.enabled = false;
    if (o.cutoff) c.mitigation.cutoff = *o.cutoff;
    if (o.exceptional_theta_max) c.exceptional_theta_max = *o.exceptional_theta_max;
    if (o.workers) c.workers = *o.workers;
    c.validate(needs_steps);
    return c;
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Non-Hermitian Ising simulation toolkit"};
    app.require_subcommand(1);
    Overrides o;

    double theta = 0, h_x = 0;
    CLI::App *evolve = app.add_subcommand("evolve", "single point: <O>, post-selected fraction, survival");
    add_model_flags(evolve, o);
    add_run_flags(evolve, o);
    evolve->add_option("--theta", theta, "damping strength")->required();
    evolve->add_option("--hx", h_x, "transverse field")->required();

    std::string out_path, shots_json;
    CLI::App *sweep = app.add_subcommand("sweep", "(theta, h_x) grid to CSV");
    add_model_flags(sweep, o);
    add_run_flags(sweep, o);
    add_grid_flags(sweep, o);
    sweep->add_option("--exceptional-theta-max", o.exceptional_theta_max);
    sweep->add_option("--out", out_path, "CSV path (default stdout)");
    sweep->add_option("--shots-json", shots_json, "write shot tables and quasi-distributions as JSON");

    double tolerance = 1e-6;
    CLI::App *exceptional = app.add_subcommand("exceptional", "exceptional line theta*(h_x) to CSV");
    add_model_flags(exceptional, o);
    add_grid_flags(exceptional, o);
    exceptional->add_option("--theta-search-max", o.exceptional_theta_max, "upper end of the bisection bracket");
    exceptional->add_option("--tolerance", tolerance, "bisection tolerance");
    exceptional->add_option("--out", out_path, "CSV path (default stdout)");

    bool csv = false;
    std::optional<int> res_sites, res_steps;
    std::string res_pattern = "alternate";
    CLI::App *res = app.add_subcommand("resources", "CNOT and measurement counts");
    res->add_option("--n-sites", res_sites, "single size (default: the 2/4/6 table)");
    res->add_option("--n-steps", res_steps, "Trotter steps (default per size)");
    res->add_option("--pattern", res_pattern, "damping pattern");
    res->add_flag("--csv", csv, "CSV instead of an aligned table");

    MitigationDemoConfig demo;
    CLI::App *mdemo = app.add_subcommand("mitigate-demo", "synthetic readout mitigation pipeline");
    mdemo->add_option("--n-sites", demo.n_sites);
    mdemo->add_option("--shots", demo.n_shots);
    mdemo->add_option("--seed", demo.seed);
    mdemo->add_option("--p01", demo.readout.p01);
    mdemo->add_option("--p10", demo.readout.p10);
    mdemo->add_option("--cutoff", demo.cutoff);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*evolve) {
            const SweepConfig c = resolve(o);
            const PointResult r = run_point(c, theta, h_x, c.seed);
            std::printf("theta %.12g\nh_x %.12g\nn_steps %d\n", theta, h_x, c.resolved_steps());
            if (r.raw) {
                std::printf("expectation %.12g\nstderr %.12g\n", r.raw->value, r.raw->standard_error);
            } else {
                std::printf("expectation nan\n");
            }
            if (r.mitigated) std::printf("expectation_mitigated %.12g\n", *r.mitigated);
            std::printf("expectation_exact %.12g\npostselect_fraction %.12g\nkept_shots %llu\nsurvival_exact %.12g\n",
                        r.exact_expectation, r.postselect_fraction, static_cast<unsigned long long>(r.kept_shots),
                        r.survival_exact);
            return r.raw ? 0 : 1;
        }
        if (*sweep) {
            const SweepConfig c = resolve(o);
            const std::vector<PointResult> rows = run_sweep(c);
            write_output(out_path, sweep_csv(rows));
            if (!shots_json.empty()) write_output(shots_json, sweep_json(rows));
            return 0;
        }
        if (*exceptional) {
            SweepConfig base;
            base.hx_grid = GridAxis{0.05, 2.0, 40};
            const SweepConfig c = resolve(o, base, false);
            ExceptionalSearch search;
            search.tolerance = tolerance;
            search.theta_max = c.exceptional_theta_max;
            const ExceptionalLine line =
                exceptional_line(c.spec(0.0, 0.0), c.hx_grid.values(), search, c.workers);
            for (const std::string &w : line.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
            write_output(out_path, exceptional_csv(line));
            return 0;
        }
        if (*res) {
            const SitePattern pattern = parse_pattern(res_pattern);
            std::vector<ResourceRow> rows;
            if (res_sites) {
                rows.push_back(resources(*res_sites, pattern, res_steps ? *res_steps : default_trotter_steps(*res_sites)));
            } else {
                for (int n : {2, 4, 6}) rows.push_back(resources(n, pattern, default_trotter_steps(n)));
            }
            write_output("", csv ? resources_csv(rows) : resources_table(rows));
            return 0;
        }
        if (*mdemo) {
            const MitigationDemoResult r = run_mitigation_demo(demo);
            std::printf("n_sites %d\nshots %llu\nideal %.12g\nnoisy %.12g\nmitigated %.12g\n", demo.n_sites,
                        static_cast<unsigned long long>(demo.n_shots), r.ideal_expectation, r.noisy_expectation,
                        r.mitigated_expectation);
            return 0;
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
