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

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nhising/circuit.h"

namespace nhising {

namespace {

std::string format_angle(double a) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

[[noreturn]] void fail(size_t line_no, const std::string &why) {
    throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " + why);
}

int parse_int(const std::string &token, size_t line_no) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        fail(line_no, "expected an integer, got '" + token + "'");
    }
    return value;
}

double parse_double(const std::string &token, size_t line_no) {
    try {
        size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) {
            fail(line_no, "trailing characters in '" + token + "'");
        }
        return v;
    } catch (const std::logic_error &) {
        fail(line_no, "expected a number, got '" + token + "'");
    }
}

}  // namespace

std::string to_text(const Circuit &circuit) {
    std::string out = "circuit " + std::to_string(circuit.n_system()) + " " + std::to_string(circuit.n_ancilla()) + "\n";
    if (!circuit.ancilla_map().empty()) {
        out += "ancillas";
        for (int a : circuit.ancilla_map()) {
            out += " " + std::to_string(a);
        }
        out += "\n";
    }
    for (const Gate &g : circuit.gates()) {
        out += gate_name(g.kind);
        out += " " + std::to_string(g.q0);
        if (is_two_qubit(g.kind)) {
            out += " " + std::to_string(g.q1);
        }
        if (is_rotation(g.kind)) {
            out += " " + format_angle(g.angle);
        }
        if (g.kind == GateKind::MeasureAncilla) {
            out += " " + std::to_string(g.slot);
        }
        out += "\n";
    }
    return out;
}

Circuit circuit_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    Circuit circuit;
    while (std::getline(in, line)) {
        line_no++;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        if (!have_header) {
            if (tok[0] != "circuit" || tok.size() != 3) {
                fail(line_no, "expected 'circuit <n_system> <n_ancilla>'");
            }
            circuit = Circuit(parse_int(tok[1], line_no), parse_int(tok[2], line_no));
            have_header = true;
            continue;
        }
        if (tok[0] == "ancillas") {
            if (!circuit.empty()) {
                fail(line_no, "'ancillas' must precede the gates");
            }
            std::vector<int> map;
            for (size_t i = 1; i < tok.size(); i++) {
                map.push_back(parse_int(tok[i], line_no));
            }
            try {
                circuit = Circuit(circuit.n_system(), circuit.n_ancilla(), map);
            } catch (const std::invalid_argument &e) {
                fail(line_no, e.what());
            }
            continue;
        }
        GateKind kind;
        try {
            kind = parse_gate_name(tok[0]);
        } catch (const std::invalid_argument &e) {
            fail(line_no, e.what());
        }
        const size_t expected = 2 + (is_two_qubit(kind) ? 1 : 0) + (is_rotation(kind) ? 1 : 0) +
                                (kind == GateKind::MeasureAncilla ? 1 : 0);
        if (tok.size() != expected) {
            fail(line_no, std::string(gate_name(kind)) + " expects " + std::to_string(expected - 1) + " operands");
        }
        Gate g;
        g.kind = kind;
        size_t at = 1;
        g.q0 = parse_int(tok[at++], line_no);
        if (is_two_qubit(kind)) {
            g.q1 = parse_int(tok[at++], line_no);
        }
        if (is_rotation(kind)) {
            g.angle = parse_double(tok[at++], line_no);
        }
        if (kind == GateKind::MeasureAncilla) {
            g.slot = parse_int(tok[at++], line_no);
        }
        try {
            circuit.append(g);
        } catch (const std::invalid_argument &e) {
            fail(line_no, e.what());
        }
    }
    if (!have_header) {
        throw std::invalid_argument("circuit text is missing the 'circuit' header");
    }
    return circuit;
}

}  // namespace nhising
