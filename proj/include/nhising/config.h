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

#ifndef NHISING_CONFIG_H
#define NHISING_CONFIG_H

#include <string>
#include <string_view>

#include "nhising/sweep.h"

namespace nhising {

// JSON configuration file. Every key is optional; unknown keys are rejected.
//
//   {
//     "n_sites": 2, "pattern": "alternate", "lambda": 1.0, "dt": 0.3,
//     "n_steps": 7,
//     "theta_grid": {"min": 0.02, "max": 1.0, "count": 10},
//     "hx_grid": {"min": 0.02, "max": 2.0, "count": 10},
//     "n_shots": 100000, "seed": 1, "initial_state": "00",
//     "noise": {"p1": 0.001, "p2": 0.01, "p01": 0.02, "p10": 0.02},
//     "mitigation": {"enabled": true, "cutoff": 3},
//     "exceptional_theta_max": 2.0
//   }
//
// "noise": "demo" selects NoiseModel::demo_defaults(); null disables noise.

/// Throws std::invalid_argument with the offending key.
SweepConfig parse_config(std::string_view json_text, SweepConfig base = {});
SweepConfig load_config(const std::string &path, SweepConfig base = {});

}  // namespace nhising

#endif
