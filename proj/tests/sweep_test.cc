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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nhising/config.h"
#include "oracles.h"

namespace nhising {
namespace {

SweepConfig small_config() {
    SweepConfig c;
    c.theta_grid = {0.0, 0.8, 3};
    c.hx_grid = {0.2, 1.6, 4};
    c.n_shots = 4000;
    c.seed = 5;
    return c;
}

TEST(Grid, Values) {
    EXPECT_EQ((GridAxis{0.0, 1.0, 5}).values(), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
    EXPECT_EQ((GridAxis{0.3, 9.0, 1}).values(), (std::vector<double>{0.3}));
    EXPECT_THROW((GridAxis{0, 1, 0}).values(), std::invalid_argument);
}

TEST(SweepConfigTest, DefaultsAndValidation) {
    SweepConfig c;
    EXPECT_EQ(c.dt, 0.3);
    EXPECT_EQ(c.n_shots, 100000u);
    EXPECT_EQ(c.resolved_steps(), 7);
    EXPECT_EQ(default_trotter_steps(4), 5);
    EXPECT_EQ(default_trotter_steps(6), 4);
    EXPECT_THROW(default_trotter_steps(3), std::invalid_argument);
    c.dt = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = SweepConfig{};
    c.hx_grid.count = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = SweepConfig{};
    c.n_sites = 3;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.n_steps = 2;
    EXPECT_NO_THROW(c.validate());
}

TEST(Sweep, GridOrderAndZeroThetaRow) {
    const SweepConfig c = small_config();
    const std::vector<PointResult> rows = run_sweep(c);
    ASSERT_EQ(rows.size(), 12u);
    const std::vector<double> thetas = c.theta_grid.values(), fields = c.hx_grid.values();
    for (size_t p = 0; p < rows.size(); p++) {
        EXPECT_EQ(rows[p].theta, thetas[p / 4]);
        EXPECT_EQ(rows[p].h_x, fields[p % 4]);
        EXPECT_EQ(rows[p].status, "ok");
        ASSERT_TRUE(rows[p].raw);
        EXPECT_LE(std::abs(rows[p].raw->value), 1.0);
        EXPECT_GE(rows[p].postselect_fraction, 0.0);
        EXPECT_LE(rows[p].postselect_fraction, 1.0);
        ASSERT_TRUE(rows[p].exceptional_theta);
    }
    for (size_t j = 0; j < 4; j++) {
        EXPECT_EQ(rows[j].postselect_fraction, 1.0);
        EXPECT_EQ(rows[j].survival_exact, 1.0);
    }
}

TEST(Sweep, NoiselessColumnMatchesOracle) {
    SweepConfig c = small_config();
    c.n_shots = 20000;
    for (const PointResult &r : run_sweep(c)) {
        const oracle::Branch b = oracle::zero_jump(2, 1.0, r.h_x, r.theta, 0.3, 7, true, oracle::Vec::Unit(4, 0));
        EXPECT_NEAR(r.survival_exact, b.survival, 1e-12);
        const double o = oracle::magnetization(b.state, 2);
        EXPECT_NEAR(r.exact_expectation, o, 1e-10);
        // Per-shot O takes values in {-1, 0, 1}; use the sample standard error.
        EXPECT_LT(std::abs(r.raw->value - o), 3 * r.raw->standard_error + 1e-12)
            << "theta=" << r.theta << " h_x=" << r.h_x;
    }
}

TEST(Sweep, DefaultGridHasHundredPoints) {
    SweepConfig c;
    c.n_shots = 50;
    EXPECT_EQ(run_sweep(c).size(), 100u);
}

TEST(Sweep, DeterministicCsv) {
    SweepConfig c = small_config();
    c.noise = NoiseModel::demo_defaults();
    c.mitigation.enabled = true;
    c.n_shots = 1000;
    SweepConfig parallel = c;
    parallel.workers = 3;
    c.workers = 1;
    const std::string a = sweep_csv(run_sweep(c));
    EXPECT_EQ(a, sweep_csv(run_sweep(parallel)));
    std::istringstream in(a);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header,
              "theta,h_x,expectation_raw,stderr_raw,expectation_mitigated,expectation_exact,postselect_fraction,"
              "kept_shots,survival_exact,exceptional_theta,status");
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        lines++;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 10);
    }
    EXPECT_EQ(lines, 12);
}

TEST(Sweep, PointFailuresAreRecorded) {
    SweepConfig c = small_config();
    c.theta_grid = {0.5, 0.5, 1};
    c.hx_grid = {1.0, 1.0, 1};
    c.mitigation.enabled = true;
    c.n_shots = 200;
    c.noise = NoiseModel{0, 0, {{0.5, 0.5}, {0.5, 0.5}, {0, 0}}};  // singular system confusion
    const std::vector<PointResult> rows = run_sweep(c);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NE(rows[0].status.find("error"), std::string::npos) << rows[0].status;
}

TEST(Sweep, JsonCarriesShotTables) {
    SweepConfig c = small_config();
    c.n_shots = 100;
    const std::vector<PointResult> rows = run_sweep(c);
    const std::string json = sweep_json(rows);
    EXPECT_NE(json.find("\"points\""), std::string::npos);
    EXPECT_NE(json.find("\"entries\""), std::string::npos);
}

TEST(ExceptionalLineTest, DecoupledAndShape) {
    ExceptionalSearch search;
    search.tolerance = 1e-10;
    search.theta_max = 3;
    const ExceptionalLine decoupled = exceptional_line({0.0, 0, 0, 2, SitePattern::AlternateSites}, {0.3, 1.0, 2.2}, search);
    for (const ExceptionalLineRow &row : decoupled.rows) {
        ASSERT_TRUE(row.point);
        EXPECT_NEAR(row.point->theta_star, row.h_x, 1e-9);
    }
    const ExceptionalLine line = exceptional_line({1.0, 0, 0, 4, SitePattern::AlternateSites}, GridAxis{0.1, 2.0, 12}.values());
    EXPECT_TRUE(line.warnings.empty());
    const std::string csv = exceptional_csv(line);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "h_x,theta_star,bracket_width,status");
}

TEST(ExceptionalLineTest, BracketFailuresPerPoint) {
    ExceptionalSearch search;
    search.theta_max = 0.3;
    const ExceptionalLine line = exceptional_line({1.0, 0, 0, 2, SitePattern::AlternateSites}, {0.2, 1.5}, search);
    ASSERT_EQ(line.rows.size(), 2u);
    EXPECT_TRUE(line.rows[0].point);
    EXPECT_FALSE(line.rows[1].point);
    EXPECT_NE(line.rows[1].status, "ok");
}

TEST(Resources, DefaultBudgets) {
    EXPECT_EQ(resources(2, SitePattern::AlternateSites, 7).cnots, 28);
    EXPECT_EQ(resources(6, SitePattern::AlternateSites, 4).cnots, 64);
    const ResourceRow r = resources(4, SitePattern::AlternateSites, 5);
    EXPECT_EQ(r.cnots, 50);
    EXPECT_EQ(r.measurements, 14);
    EXPECT_EQ(r.cnots_unn, 6);
    EXPECT_EQ(r.cnots_ux, 0);
    EXPECT_EQ(r.cnots_udc, 4);
    const std::string csv = resources_csv({r});
    EXPECT_EQ(csv, "n_sites,n_steps,cnots,measurements\n4,5,50,14\n");
    EXPECT_NE(resources_table({r}).find("50"), std::string::npos);
}

TEST(Config, ParsesAllKeys) {
    const SweepConfig c = parse_config(R"({
        "n_sites": 4, "pattern": "all", "lambda": 0.5, "dt": 0.2, "n_steps": 3,
        "theta_grid": {"min": 0.1, "max": 0.9, "count": 5},
        "hx_grid": {"count": 7},
        "n_shots": 123, "seed": 9, "initial_state": "0110",
        "noise": {"p1": 0.002, "p2": 0.02, "p01": 0.03},
        "mitigation": {"enabled": true, "cutoff": 2},
        "exceptional_theta_max": 3.0
    })");
    EXPECT_EQ(c.n_sites, 4);
    EXPECT_EQ(c.pattern, SitePattern::AllSites);
    EXPECT_EQ(c.lambda, 0.5);
    EXPECT_EQ(c.dt, 0.2);
    EXPECT_EQ(c.n_steps, 3);
    EXPECT_EQ(c.theta_grid.count, 5);
    EXPECT_EQ(c.hx_grid.min, 0.02);
    EXPECT_EQ(c.hx_grid.count, 7);
    EXPECT_EQ(c.n_shots, 123u);
    EXPECT_EQ(c.initial_state, 0b0110u);
    ASSERT_TRUE(c.noise);
    EXPECT_EQ(c.noise->p2, 0.02);
    EXPECT_EQ(c.noise->readout_for(0), (ReadoutError{0.03, 0.0}));
    EXPECT_TRUE(c.mitigation.enabled);
    EXPECT_EQ(c.mitigation.cutoff, 2);
    EXPECT_EQ(c.exceptional_theta_max, 3.0);
}

TEST(Config, NoiseShortcutsAndErrors) {
    EXPECT_EQ(parse_config(R"({"noise": "demo"})").noise->p2, 0.01);
    SweepConfig base;
    base.noise = NoiseModel::demo_defaults();
    EXPECT_FALSE(parse_config(R"({"noise": null})", base).noise);
    EXPECT_THROW(parse_config(R"({"n_site": 2})"), std::invalid_argument);
    EXPECT_THROW(parse_config(R"({"noise": "loud"})"), std::invalid_argument);
    EXPECT_THROW(parse_config(R"({"dt": "fast"})"), std::invalid_argument);
    EXPECT_THROW(parse_config(R"({"hx_grid": {"step": 2}})"), std::invalid_argument);
    EXPECT_THROW(parse_config("{"), std::invalid_argument);
    EXPECT_THROW(parse_config(R"({"initial_state": "000"})"), std::invalid_argument);
    EXPECT_THROW(load_config("/nonexistent/config.json"), std::invalid_argument);
}

TEST(MitigationDemo, Deterministic) {
    MitigationDemoConfig config;
    config.n_shots = 5000;
    const MitigationDemoResult a = run_mitigation_demo(config);
    const MitigationDemoResult b = run_mitigation_demo(config);
    EXPECT_EQ(a.noisy_counts, b.noisy_counts);
    EXPECT_EQ(a.mitigated_expectation, b.mitigated_expectation);
    EXPECT_NEAR(std::accumulate(a.ideal.begin(), a.ideal.end(), 0.0), 1, 1e-12);
}

}  // namespace
}  // namespace nhising
