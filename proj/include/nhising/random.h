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

#ifndef NHISING_RANDOM_H
#define NHISING_RANDOM_H

#include <cstdint>
#include <random>

namespace nhising {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
inline uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of the independent substream `counter` of `master`. Substreams are
/// keyed by counter only, so the schedule that consumes them is irrelevant.
inline uint64_t substream_seed(uint64_t master, uint64_t counter) {
    return mix64(mix64(master) ^ mix64(counter + 0x632BE59BD9B4E019ULL));
}

/// Uniform double in [0, 1) with 53 random bits; platform independent.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace nhising

#endif
