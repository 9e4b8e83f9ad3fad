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

#include "nhising/mitigation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nhising/errors.h"
#include "nhising/random.h"
#include "nhising/simulator.h"
#include "nhising/sweep.h"

namespace nhising {
namespace {

std::vector<std::string> all_strings(int n) {
    std::vector<std::string> out;
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        out.push_back(index_to_bits(x, n));
    }
    return out;
}

TEST(Confusion, Construction) {
    const ConfusionSpec spec = ConfusionSpec::uniform(3, {0.1, 0.2});
    EXPECT_EQ(spec.n_qubits(), 3);
    EXPECT_NO_THROW(spec.validate());
    EXPECT_DOUBLE_EQ(spec.qubits[0](1, 0), 0.1);
    EXPECT_DOUBLE_EQ(spec.qubits[0](0, 1), 0.2);
    EXPECT_DOUBLE_EQ(spec.assignment_probability("101", "100"), 0.8 * 0.9 * 0.1);
    ConfusionSpec bad = ConfusionSpec::identity(1);
    bad.qubits[0](0, 0) = 0.5;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_THROW(spec.assignment_probability("10", "100"), std::invalid_argument);
}

TEST(RestrictedConfusion, Examples) {
    const std::vector<std::string> observed{"000", "011", "110", "111"};
    EXPECT_EQ(restricted_confusion(observed, ConfusionSpec::identity(3), 3), Eigen::MatrixXd::Identity(4, 4));

    const Eigen::MatrixXd one = restricted_confusion({"0", "1"}, ConfusionSpec::uniform(1, {0.1, 0.1}), 1);
    Eigen::Matrix2d expected;
    expected << 0.9, 0.1, 0.1, 0.9;
    EXPECT_LT((one - expected).cwiseAbs().maxCoeff(), 1e-15);

    const ConfusionSpec spec = ConfusionSpec::uniform(3, {0.05, 0.1});
    const Eigen::MatrixXd diag = restricted_confusion(observed, spec, 0);
    for (Eigen::Index i = 0; i < 4; i++) {
        for (Eigen::Index j = 0; j < 4; j++) {
            EXPECT_EQ(diag(i, j), i == j ? spec.assignment_probability(observed[i], observed[i]) : 0.0);
        }
    }
    const Eigen::MatrixXd d1 = restricted_confusion(observed, spec, 1);
    EXPECT_EQ(d1(0, 1), 0.0);  // distance 2
    EXPECT_DOUBLE_EQ(d1(3, 1), spec.assignment_probability("111", "011"));
    EXPECT_THROW(restricted_confusion({}, spec, 1), std::invalid_argument);
    EXPECT_THROW(restricted_confusion(observed, spec, -1), std::invalid_argument);
}

TEST(Mitigate, IdentityLeavesFrequencies) {
    const std::map<std::string, uint64_t> counts{{"00", 30}, {"01", 50}, {"11", 20}};
    const QuasiDistribution q = mitigate(counts, ConfusionSpec::identity(2));
    EXPECT_NEAR(q.at("00"), 0.3, 1e-15);
    EXPECT_NEAR(q.at("01"), 0.5, 1e-15);
    EXPECT_NEAR(q.at("11"), 0.2, 1e-15);
    EXPECT_THROW(mitigate({{"00", 0}}, ConfusionSpec::identity(2)), std::invalid_argument);
}

TEST(Mitigate, ExactAtFullRank) {
    const int n = 4;
    Rng rng(3);
    const std::vector<double> ideal = synthetic_distribution(n, rng);
    const ConfusionSpec spec = ConfusionSpec::from_readout(std::vector<ReadoutError>{{0.05, 0.08}, {0.02, 0.1}, {0.07, 0.03}, {0.04, 0.04}});
    const std::vector<std::string> strings = all_strings(n);
    const Eigen::MatrixXd a = restricted_confusion(strings, spec, n);
    Eigen::VectorXd p(static_cast<Eigen::Index>(ideal.size()));
    for (size_t i = 0; i < ideal.size(); i++) {
        p[static_cast<Eigen::Index>(i)] = ideal[bits_to_index(strings[i])];
    }
    const Eigen::VectorXd noisy = a * p;
    const double scale = 1e15;
    std::map<std::string, uint64_t> counts;
    for (size_t i = 0; i < strings.size(); i++) {
        counts[strings[i]] = static_cast<uint64_t>(std::llround(noisy[static_cast<Eigen::Index>(i)] * scale));
    }
    const MitigationResult r = mitigate_detailed(counts, spec, n);
    for (size_t i = 0; i < strings.size(); i++) {
        EXPECT_NEAR(r.quasi.at(strings[i]), p[static_cast<Eigen::Index>(i)], 1e-10);
    }
    EXPECT_LT(r.residual, 1e-12);
}

TEST(Mitigate, ResidualNonIncreasingInCutoff) {
    for (uint64_t seed = 1; seed <= 5; seed++) {
        MitigationDemoConfig config;
        config.n_sites = 5;
        config.n_shots = 20000;
        config.seed = seed;
        const MitigationDemoResult demo = run_mitigation_demo(config);
        const ConfusionSpec spec = ConfusionSpec::uniform(5, config.readout);
        double prev = 1e300;
        for (int d = 0; d <= 5; d++) {
            const double residual = mitigate_detailed(demo.noisy_counts, spec, d).residual;
            EXPECT_LE(residual, prev + 1e-15) << "seed " << seed << " d=" << d;
            prev = residual;
        }
        EXPECT_LT(prev, 1e-12);
    }
}

TEST(Mitigate, UnitSumAndNegativeEntriesKept) {
    const std::map<std::string, uint64_t> counts{{"00", 97}, {"01", 3}};
    const QuasiDistribution q = mitigate(counts, ConfusionSpec::uniform(2, {0.05, 0.05}), 2);
    double sum = 0;
    bool negative = false;
    for (const auto &[k, v] : q) {
        sum += v;
        negative |= v < 0;
    }
    EXPECT_NEAR(sum, 1, 1e-12);
    EXPECT_TRUE(negative);
}

TEST(Mitigate, SingularReported) {
    const ConfusionSpec half = ConfusionSpec::uniform(1, {0.5, 0.5});
    try {
        mitigate({{"0", 5}, {"1", 5}}, half, 1);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError &e) {
        EXPECT_NE(std::string(e.what()).find("rcond"), std::string::npos);
    }
}

TEST(Mitigate, SyntheticPipelineRecovery) {
    for (int n = 2; n <= 6; n++) {
        MitigationDemoConfig config;
        config.n_sites = n;
        config.cutoff = 2;
        config.seed = 100 + static_cast<uint64_t>(n);
        const MitigationDemoResult r = run_mitigation_demo(config);
        const double p = config.readout.p01;
        // Full inversion rescales each symmetric-noise Z by 1 / (1 - 2p).
        double mean = 0, sq = 0;
        for (const auto &[bits, c] : r.noisy_counts) {
            const double o = observable_value(bits_to_index(bits), n);
            mean += o * static_cast<double>(c);
            sq += o * o * static_cast<double>(c);
        }
        const double shots = static_cast<double>(config.n_shots);
        mean /= shots;
        const double sigma = std::sqrt((sq / shots - mean * mean) / shots) / (1 - 2 * p);
        EXPECT_LT(std::abs(r.mitigated_expectation - r.ideal_expectation), 3 * sigma) << "n=" << n;
        EXPECT_LT(std::abs(r.mitigated_expectation - r.ideal_expectation),
                  std::abs(r.noisy_expectation - r.ideal_expectation))
            << "n=" << n;
    }
}

TEST(QuasiExpectation, Signed) {
    EXPECT_NEAR(quasi_expectation({{"00", 1.2}, {"11", -0.2}}, 2), 1.4, 1e-15);
    EXPECT_EQ(hamming_distance("0110", "1100"), 2);
    EXPECT_THROW(hamming_distance("01", "0"), std::invalid_argument);
}

}  // namespace
}  // namespace nhising
