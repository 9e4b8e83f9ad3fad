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

#include "nhising/config.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nhising {

namespace {

using nlohmann::json;

void check_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw std::invalid_argument(where + ": expected an object");
    }
    for (const auto &[key, value] : obj.items()) {
        if (!allowed.count(key)) {
            throw std::invalid_argument(where + ": unknown key \"" + key + "\"");
        }
    }
}

template <typename T>
T get(const json &obj, const std::string &key, const std::string &where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &) {
        throw std::invalid_argument(where + ": bad value for \"" + key + "\"");
    }
}

GridAxis parse_axis(const json &obj, GridAxis axis, const std::string &where) {
    check_keys(obj, {"min", "max", "count"}, where);
    if (obj.contains("min")) axis.min = get<double>(obj, "min", where);
    if (obj.contains("max")) axis.max = get<double>(obj, "max", where);
    if (obj.contains("count")) axis.count = get<int>(obj, "count", where);
    return axis;
}

uint64_t parse_initial_state(const json &value, int n_sites) {
    if (value.is_number_unsigned()) {
        return value.get<uint64_t>();
    }
    if (!value.is_string()) {
        throw std::invalid_argument("initial_state: expected a bit string or index");
    }
    const std::string bits = value.get<std::string>();
    if (static_cast<int>(bits.size()) != n_sites) {
        throw std::invalid_argument("initial_state: expected " + std::to_string(n_sites) + " bits");
    }
    return bits_to_index(bits);
}

}  // namespace

SweepConfig parse_config(std::string_view json_text, SweepConfig base) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    const std::string where = "config";
    check_keys(root,
               {"n_sites", "pattern", "lambda", "dt", "n_steps", "theta_grid", "hx_grid", "n_shots", "seed",
                "initial_state", "noise", "mitigation", "exceptional_theta_max"},
               where);
    SweepConfig c = base;
    if (root.contains("n_sites")) c.n_sites = get<int>(root, "n_sites", where);
    if (root.contains("pattern")) c.pattern = parse_pattern(get<std::string>(root, "pattern", where));
    if (root.contains("lambda")) c.lambda = get<double>(root, "lambda", where);
    if (root.contains("dt")) c.dt = get<double>(root, "dt", where);
    if (root.contains("n_steps")) c.n_steps = get<int>(root, "n_steps", where);
    if (root.contains("theta_grid")) c.theta_grid = parse_axis(root["theta_grid"], c.theta_grid, "theta_grid");
    if (root.contains("hx_grid")) c.hx_grid = parse_axis(root["hx_grid"], c.hx_grid, "hx_grid");
    if (root.contains("n_shots")) c.n_shots = get<uint64_t>(root, "n_shots", where);
    if (root.contains("seed")) c.seed = get<uint64_t>(root, "seed", where);
    if (root.contains("initial_state")) c.initial_state = parse_initial_state(root["initial_state"], c.n_sites);
    if (root.contains("exceptional_theta_max")) {
        c.exceptional_theta_max = get<double>(root, "exceptional_theta_max", where);
    }
    if (root.contains("noise")) {
        const json &n = root["noise"];
        if (n.is_null()) {
            c.noise.reset();
        } else if (n.is_string()) {
            if (n.get<std::string>() != "demo") {
                throw std::invalid_argument("noise: expected an object, \"demo\" or null");
            }
            c.noise = NoiseModel::demo_defaults();
        } else {
            check_keys(n, {"p1", "p2", "p01", "p10"}, "noise");
            NoiseModel model;
            if (n.contains("p1")) model.p1 = get<double>(n, "p1", "noise");
            if (n.contains("p2")) model.p2 = get<double>(n, "p2", "noise");
            if (n.contains("p01") || n.contains("p10")) {
                ReadoutError r;
                if (n.contains("p01")) r.p01 = get<double>(n, "p01", "noise");
                if (n.contains("p10")) r.p10 = get<double>(n, "p10", "noise");
                model.readout = {r};
            }
            c.noise = model;
        }
    }
    if (root.contains("mitigation")) {
        const json &m = root["mitigation"];
        check_keys(m, {"enabled", "cutoff"}, "mitigation");
        if (m.contains("enabled")) c.mitigation.enabled = get<bool>(m, "enabled", "mitigation");
        if (m.contains("cutoff")) c.mitigation.cutoff = get<int>(m, "cutoff", "mitigation");
    }
    return c;
}

SweepConfig load_config(const std::string &path, SweepConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), base);
}

}  // namespace nhising
