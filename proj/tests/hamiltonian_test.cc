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

#include "nhising/hamiltonian.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.h"

namespace nhising {
namespace {

constexpr double kTight = 1e-13;

double max_diff(const DenseOperator &a, const DenseOperator &b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(Hamiltonian, DiagonalCouplingOnly) {
    const DenseOperator h = build_hamiltonian({1.0, 0.0, 0.0, 2, SitePattern::AllSites});
    DenseOperator expected = DenseOperator::Zero(4, 4);
    expected.diagonal() << -1, 1, 1, -1;
    EXPECT_LT(max_diff(h, expected), kTight);
}

TEST(Hamiltonian, SingleSiteField) {
    const DenseOperator h = build_hamiltonian({0.0, 1.0, 0.0, 1, SitePattern::AllSites});
    DenseOperator expected(2, 2);
    expected << 0, -1, -1, 0;
    EXPECT_LT(max_diff(h, expected), kTight);
}

TEST(Hamiltonian, TwoSiteAlternateMatchesKronecker) {
    const DenseOperator h = build_hamiltonian({1.0, 0.5, 0.2, 2, SitePattern::AlternateSites});
    using oracle::kron;
    using oracle::pauli;
    // Site 2 is qubit 1, the left factor.
    const DenseOperator expected = -kron(pauli('Z'), pauli('Z')) -
                                   0.5 * (kron(pauli('X'), pauli('I')) + kron(pauli('I'), pauli('X'))) +
                                   Complex(0, 0.2) * kron(pauli('Z'), pauli('I'));
    EXPECT_LT(max_diff(h, expected), kTight);
}

TEST(Hamiltonian, MatchesKroneckerOracle) {
    for (int n = 1; n <= 6; n++) {
        for (bool alternate : {false, true}) {
            const HamiltonianSpec spec{0.7, 1.3, 0.45, n, alternate ? SitePattern::AlternateSites : SitePattern::AllSites};
            EXPECT_LT(max_diff(build_hamiltonian(spec), oracle::hamiltonian(n, 0.7, 1.3, 0.45, alternate)), kTight)
                << "n=" << n << " alternate=" << alternate;
        }
    }
}

TEST(Hamiltonian, SymmetricAndPtInvariant) {
    for (int n = 1; n <= 5; n++) {
        for (SitePattern pattern : {SitePattern::AllSites, SitePattern::AlternateSites}) {
            const DenseOperator h = build_hamiltonian({1.0, 0.8, 0.6, n, pattern});
            EXPECT_LT(max_diff(h, h.transpose()), kTight);
            DenseOperator p = DenseOperator::Identity(1, 1);
            for (int q = 0; q < n; q++) {
                p = oracle::kron(p, oracle::pauli('X'));
            }
            EXPECT_LT(max_diff(p * h.conjugate() * p, h), kTight);
        }
    }
}

TEST(Hamiltonian, HermiticitySplit) {
    const HamiltonianSpec spec{1.0, 0.9, 0.35, 4, SitePattern::AllSites};
    const DenseOperator h0 = build_hamiltonian(spec.with_theta(0));
    EXPECT_LT(max_diff(h0, h0.adjoint()), kTight);
    const DenseOperator diff = build_hamiltonian(spec) - h0;
    EXPECT_LT(max_diff(diff, DenseOperator(diff.diagonal().asDiagonal())), kTight);
    EXPECT_LT(diff.diagonal().real().cwiseAbs().maxCoeff(), kTight);
}

TEST(Hamiltonian, PatternsAgreeWithoutDamping) {
    const HamiltonianSpec all{1.0, 0.4, 0.0, 5, SitePattern::AllSites};
    HamiltonianSpec alt = all;
    alt.pattern = SitePattern::AlternateSites;
    EXPECT_EQ(build_hamiltonian(all), build_hamiltonian(alt));
}

TEST(Hamiltonian, DissipativeSites) {
    EXPECT_EQ(dissipative_sites(4, SitePattern::AllSites), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(dissipative_sites(5, SitePattern::AlternateSites), (std::vector<int>{1, 3}));
    EXPECT_TRUE(dissipative_sites(1, SitePattern::AlternateSites).empty());
}

TEST(Hamiltonian, RejectsInvalidSpecs) {
    EXPECT_THROW(build_hamiltonian({1.0, 0.0, 0.0, 0, SitePattern::AllSites}), std::invalid_argument);
    EXPECT_THROW(build_hamiltonian({1.0, 0.0, -0.1, 2, SitePattern::AllSites}), std::invalid_argument);
    EXPECT_THROW(build_hamiltonian({1.0, std::nan(""), 0.0, 2, SitePattern::AllSites}), std::invalid_argument);
}

TEST(Hamiltonian, PatternNames) {
    EXPECT_EQ(parse_pattern("all"), SitePattern::AllSites);
    EXPECT_EQ(parse_pattern("alternate"), SitePattern::AlternateSites);
    EXPECT_EQ(parse_pattern(pattern_name(SitePattern::AlternateSites)), SitePattern::AlternateSites);
    EXPECT_THROW(parse_pattern("odd"), std::invalid_argument);
}

TEST(Observable, Examples) {
    DenseOperator one = build_observable(1);
    EXPECT_EQ(one(0, 0), Complex(1));
    EXPECT_EQ(one(1, 1), Complex(-1));
    const DenseOperator two = build_observable(2);
    EXPECT_NEAR(two(0, 0).real(), 1, kTight);
    EXPECT_NEAR(two(1, 1).real(), 0, kTight);
    EXPECT_NEAR(two(2, 2).real(), 0, kTight);
    EXPECT_NEAR(two(3, 3).real(), -1, kTight);
    for (int n = 1; n <= 8; n++) {
        EXPECT_DOUBLE_EQ(observable_value((uint64_t{1} << n) - 1, n), -1);
        const DenseOperator o = build_observable(n);
        EXPECT_LT(max_diff(o, DenseOperator(o.diagonal().asDiagonal())), kTight);
        EXPECT_LE(o.diagonal().real().cwiseAbs().maxCoeff(), 1.0);
    }
}

}  // namespace
}  // namespace nhising
