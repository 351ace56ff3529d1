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

#ifndef QENTROPY_RK4_HPP
#define QENTROPY_RK4_HPP

#include <cstddef>

namespace qentropy {

/// One classical fourth-order Runge-Kutta step of dy/dt = f(t, y).
///
/// `State` needs addition and multiplication by a double; Eigen fixed-size
/// matrices and plain doubles both qualify.
template <class State, class Derivative>
State rk4_step(const Derivative& f, const State& y, double t, double h) {
  const double half = 0.5 * h;
  const State k1 = f(t, y);
  const State k2 = f(t + half, State(y + half * k1));
  const State k3 = f(t + half, State(y + half * k2));
  const State k4 = f(t + h, State(y + h * k3));
  return State(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

/// Integrates from t0 to t1 in `steps` equal steps.
template <class State, class Derivative>
State rk4_integrate(const Derivative& f, State y, double t0, double t1, std::size_t steps) {
  if (steps == 0) return y;
  const double h = (t1 - t0) / static_cast<double>(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    y = rk4_step(f, y, t0 + static_cast<double>(i) * h, h);
  }
  return y;
}

}  // namespace qentropy

#endif  // QENTROPY_RK4_HPP
