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

#ifndef QENTROPY_GAD_CHANNEL_HPP
#define QENTROPY_GAD_CHANNEL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>

#include "qentropy/errors.hpp"
#include "qentropy/qstate.hpp"
#include "qentropy/rk4.hpp"

namespace qentropy {

/// Generalized amplitude damping channel.
///
/// `p` is the ground-state weight of the thermal fixed point, in [0.5, 1]
/// (infinite to zero temperature). `r` is the damping strength, in [0, 1]
/// (zero to infinite interaction time).
class GadChannel {
 public:
  GadChannel(double p, double r) : p_(p), r_(r) {
    if (!(p >= 0.5 && p <= 1.0)) {
      std::ostringstream os;
      os << "GAD weight p=" << p << " outside [0.5, 1]";
      throw ParameterOutOfRange(os.str());
    }
    if (!(r >= 0.0 && r <= 1.0)) {
      std::ostringstream os;
      os << "GAD damping r=" << r << " outside [0, 1]";
      throw ParameterOutOfRange(os.str());
    }
  }

  double p() const noexcept { return p_; }
  double r() const noexcept { return r_; }

 private:
  double p_;
  double r_;
};

using KrausSet = std::array<Matrix2, 4>;

/// M0, M1 (relaxation) and M2, M3 (excitation).
inline KrausSet kraus_operators(const GadChannel& ch) {
  const double sp = std::sqrt(ch.p());
  const double sq = std::sqrt(1.0 - ch.p());
  const double sr = std::sqrt(ch.r());
  const double sd = std::sqrt(1.0 - ch.r());

  KrausSet ops;
  for (auto& m : ops) m.setZero();
  ops[0](0, 0) = sp;
  ops[0](1, 1) = sp * sd;
  ops[1](0, 1) = sp * sr;
  ops[2](0, 0) = sq * sd;
  ops[2](1, 1) = sq;
  ops[3](1, 0) = sq * sr;
  return ops;
}

inline Matrix2 apply_kraus(const KrausSet& ops, const Matrix2& rho) {
  Matrix2 out = Matrix2::Zero();
  for (const auto& m : ops) out += m * rho * m.adjoint();
  return out;
}

inline QubitState apply(const GadChannel& ch, const QubitState& state) {
  return QubitState::from_matrix(apply_kraus(kraus_operators(ch), state.matrix()));
}

/// Thermal fixed point diag(p, 1 - p).
inline QubitState equilibrium_state(const GadChannel& ch) {
  return QubitState::diagonal(ch.p(), 1.0 - ch.p());
}

/// Sequential application `second` after `first`; both must share p.
/// The damping strengths combine as 1 - (1 - r1)(1 - r2).
inline GadChannel compose(const GadChannel& first, const GadChannel& second) {
  if (first.p() != second.p()) {
    std::ostringstream os;
    os << "cannot compose GAD channels with p=" << first.p() << " and p=" << second.p();
    throw MismatchedTemperature(os.str());
  }
  const double r = 1.0 - (1.0 - first.r()) * (1.0 - second.r());
  return GadChannel(first.p(), std::clamp(r, 0.0, 1.0));
}

// ---------------------------------------------------------------------------
// Thermal bath and the master-equation route (hbar = k_B = 1).

struct BathSpec {
  double omega_s = 1.0;      // transition frequency
  double temperature = 0.0;  // same units as omega_s; 0 means zero temperature
  double gamma0 = 1.0;       // spontaneous emission rate

  /// Bath whose temperature yields mean occupation `nbar` at `omega_s`.
  static BathSpec with_occupation(double nbar, double gamma0 = 1.0, double omega_s = 1.0) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
      throw ParameterOutOfRange("mean occupation must be finite and non-negative");
    }
    const double temperature = nbar == 0.0 ? 0.0 : omega_s / std::log1p(1.0 / nbar);
    return BathSpec{omega_s, temperature, gamma0};
  }

  void check() const {
    if (!std::isfinite(omega_s) || !(omega_s > 0.0)) {
      throw ParameterOutOfRange("bath omega_s must be finite and positive");
    }
    if (!std::isfinite(temperature) || !(temperature >= 0.0)) {
      throw ParameterOutOfRange("bath temperature must be finite and non-negative");
    }
    if (!std::isfinite(gamma0) || !(gamma0 > 0.0)) {
      throw ParameterOutOfRange("bath gamma0 must be finite and positive");
    }
  }
};

/// Bose occupation [exp(omega/T) - 1]^-1; exactly 0 at T = 0.
inline double mean_occupation(const BathSpec& bath) {
  bath.check();
  if (bath.temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(bath.omega_s / bath.temperature);
}

/// r(t) = 1 - exp[-(2 nbar + 1) gamma0 t].
inline double r_from_time(const BathSpec& bath, double t) {
  if (!(t >= 0.0)) throw ParameterOutOfRange("interaction time must be non-negative");
  const double rate = (2.0 * mean_occupation(bath) + 1.0) * bath.gamma0;
  if (std::isinf(t)) return 1.0;
  return -std::expm1(-rate * t);
}

/// p(T) = [1 + exp(-omega/T)]^-1.
inline double p_from_temperature(const BathSpec& bath) {
  bath.check();
  if (bath.temperature == 0.0) return 1.0;
  return 1.0 / (1.0 + std::exp(-bath.omega_s / bath.temperature));
}

inline GadChannel channel_for(const BathSpec& bath, double t) {
  return GadChannel(p_from_temperature(bath), r_from_time(bath, t));
}

namespace detail {

inline Matrix2 lowering() {
  Matrix2 m = Matrix2::Zero();
  m(0, 1) = 1.0;  // |0><1|
  return m;
}

/// D[L]rho = L rho L^dagger - {L^dagger L, rho} / 2.
inline Matrix2 dissipator(const Matrix2& jump, const Matrix2& rho) {
  const Matrix2 jdj = jump.adjoint() * jump;
  return jump * rho * jump.adjoint() - 0.5 * (jdj * rho + rho * jdj);
}

inline Matrix2 thermal_generator(double gamma0, double nbar, const Matrix2& rho) {
  const Matrix2 down = lowering();
  const Matrix2 up = down.adjoint();
  return gamma0 * (nbar + 1.0) * dissipator(down, rho) + gamma0 * nbar * dissipator(up, rho);
}

}  // namespace detail

/// Right-hand side of the thermal master equation for a qubit.
inline Matrix2 lindblad_derivative(const BathSpec& bath, const QubitState& state) {
  return detail::thermal_generator(bath.gamma0, mean_occupation(bath), state.matrix());
}

/// 1e-3 of the population relaxation time 1 / (gamma0 (2 nbar + 1)).
inline double default_step(const BathSpec& bath) {
  return 1e-3 / (bath.gamma0 * (2.0 * mean_occupation(bath) + 1.0));
}

/// Fixed-step RK4 integration of the master equation up to time `t`. The step
/// count is ceil(t / dt) so the last step lands exactly on `t`.
inline QubitState evolve_master_equation(const BathSpec& bath, const QubitState& initial,
                                         double t, double dt) {
  if (!std::isfinite(t) || !(t >= 0.0)) {
    throw ParameterOutOfRange("evolution time must be finite and non-negative");
  }
  if (t == 0.0) return initial;
  if (!std::isfinite(dt) || !(dt > 0.0) || dt > t) {
    std::ostringstream os;
    os << "step size dt=" << dt << " must satisfy 0 < dt <= t=" << t;
    throw StepSizeInvalid(os.str());
  }

  const double gamma0 = bath.gamma0;
  const double nbar = mean_occupation(bath);
  auto rhs = [gamma0, nbar](double, const Matrix2& rho) {
    return Matrix2(detail::thermal_generator(gamma0, nbar, rho));
  };
  const auto steps = static_cast<std::size_t>(std::ceil(t / dt - 1e-9));
  const Matrix2 out = rk4_integrate(rhs, initial.matrix(), 0.0, t, std::max<std::size_t>(steps, 1));
  return QubitState::from_matrix(detail::hermitian_part(out));
}

inline QubitState evolve_master_equation(const BathSpec& bath, const QubitState& initial, double t) {
  if (t == 0.0) return initial;
  return evolve_master_equation(bath, initial, t, std::min(default_step(bath), t));
}

}  // namespace qentropy

#endif  // QENTROPY_GAD_CHANNEL_HPP
