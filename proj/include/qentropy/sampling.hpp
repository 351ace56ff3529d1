// Copyright 2026 The qentropy Authors
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

#ifndef QENTROPY_SAMPLING_HPP
#define QENTROPY_SAMPLING_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "qentropy/qstate.hpp"
#include "qentropy/tomography.hpp"

namespace qentropy {

/// Uniform point in the Bloch ball. With probability `pure_fraction` the
/// point is put on the surface instead, so pure states are exercised too.
inline QubitState random_state(Engine& eng, double pure_fraction = 0.2) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double z = 2.0 * u(eng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * u(eng);
  const double rho = std::sqrt(1.0 - z * z);
  const double radius = u(eng) < pure_fraction ? 1.0 : std::cbrt(u(eng));
  return QubitState::from_bloch(radius * rho * std::cos(phi), radius * rho * std::sin(phi),
                                radius * z);
}

inline double uniform(Engine& eng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(eng);
}

}  // namespace qentropy

#endif  // QENTROPY_SAMPLING_HPP
