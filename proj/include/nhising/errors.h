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

#ifndef NHISING_ERRORS_H
#define NHISING_ERRORS_H

#include <stdexcept>
#include <string>

namespace nhising {

/// A numerical routine failed (eigensolver non-convergence, singular solve).
class NumericalError : public std::runtime_error {
   public:
    explicit NumericalError(const std::string &message) : std::runtime_error(message) {}
};

/// The exceptional-point search interval does not bracket a transition.
class BracketError : public std::runtime_error {
   public:
    explicit BracketError(const std::string &message) : std::runtime_error(message) {}
};

}  // namespace nhising

#endif
