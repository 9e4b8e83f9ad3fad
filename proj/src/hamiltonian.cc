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

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nhising {

std::string_view pattern_name(SitePattern pattern) {
    switch (pattern) {
        case SitePattern::AllSites:
            return "all";
        case SitePattern::AlternateSites:
            return "alternate";
    }
    return "?";
}

SitePattern parse_pattern(std::string_view text) {
    if (text == "all" || text == "AllSites") {
        return SitePattern::AllSites;
    }
    if (text == "alternate" || text == "alt" || text == "AlternateSites") {
        return SitePattern::AlternateSites;
    }
    throw std::invalid_argument("unknown site pattern '" + std::string(text) + "' (expected all|alternate)");
}

void HamiltonianSpec::validate() const {
    if (n_sites < 1) {
        throw std::invalid_argument("n_sites must be >= 1");
    }
    if (n_sites > 20) {
        throw std::invalid_argument("n_sites > 20 is beyond dense-matrix scale");
    }
    if (!std::isfinite(lambda) || !std::isfinite(h_x) || !std::isfinite(theta)) {
        throw std::invalid_argument("Hamiltonian parameters must be finite");
    }
    if (theta < 0) {
        throw std::invalid_argument("theta must be >= 0");
    }
}

HamiltonianSpec HamiltonianSpec::with_theta(double new_theta) const {
    HamiltonianSpec copy = *this;
    copy.theta = new_theta;
    return copy;
}

HamiltonianSpec HamiltonianSpec::with_h_x(double new_h_x) const {
    HamiltonianSpec copy = *this;
    copy.h_x = new_h_x;
    return copy;
}

std::vector<int> dissipative_sites(int n_sites, SitePattern pattern) {
    std::vector<int> sites;
    for (int q = 0; q < n_sites; q++) {
        // Site q+1 is even exactly when q is odd.
        if (pattern == SitePattern::AllSites || q % 2 == 1) {
            sites.push_back(q);
        }
    }
    return sites;
}

DenseOperator build_hamiltonian(const HamiltonianSpec &spec) {
    spec.validate();
    const int n = spec.n_sites;
    const uint64_t dim = uint64_t{1} << n;
    const std::vector<int> damped = dissipative_sites(n, spec.pattern);

    DenseOperator h = DenseOperator::Zero(dim, dim);
    for (uint64_t b = 0; b < dim; b++) {
        auto z = [b](int q) { return ((b >> q) & 1) ? -1.0 : 1.0; };
        double zz = 0;
        for (int q = 0; q + 1 < n; q++) {
            zz += z(q) * z(q + 1);
        }
        double zsum = 0;
        for (int q : damped) {
            zsum += z(q);
        }
        h(b, b) = Complex(-spec.lambda * zz, spec.theta * zsum);
        for (int q = 0; q < n; q++) {
            h(b ^ (uint64_t{1} << q), b) += -spec.h_x;
        }
    }
    return h;
}

double observable_value(uint64_t basis_index, int n_sites) {
    const uint64_t mask = n_sites >= 64 ? ~uint64_t{0} : (uint64_t{1} << n_sites) - 1;
    const int ones = std::popcount(basis_index & mask);
    return static_cast<double>(n_sites - 2 * ones) / n_sites;
}

DenseOperator build_observable(int n_sites) {
    if (n_sites < 1) {
        throw std::invalid_argument("n_sites must be >= 1");
    }
    const uint64_t dim = uint64_t{1} << n_sites;
    DenseOperator o = DenseOperator::Zero(dim, dim);
    for (uint64_t b = 0; b < dim; b++) {
        o(b, b) = observable_value(b, n_sites);
    }
    return o;
}

}  // namespace nhising
