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

#ifndef QENTROPY_STATE_PREP_HPP
#define QENTROPY_STATE_PREP_HPP

#include <cmath>
#include <numbers>
#include <sstream>

#include "qentropy/errors.hpp"
#include "qentropy/gad_channel.hpp"
#include "qentropy/qstate.hpp"

namespace qentropy {

inline constexpr double kMaxPrepAngle = std::numbers::pi / 4.0;

inline double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }
inline double radians_to_degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Angle of the first half-wave plate (radians) and whether the two
/// preparation paths are made incoherent. The second plate is fixed at pi/8.
struct PrepSetting {
  double alpha = 0.0;
  bool dephased = false;
};

namespace detail {

inline void check_prep_angle(double alpha) {
  if (!(alpha >= 0.0 && alpha <= kMaxPrepAngle)) {
    std::ostringstream os;
    os << "preparation angle " << alpha << " rad outside [0, pi/4]";
    throw AngleOutOfRange(os.str());
  }
}

}  // namespace detail

/// Equal populations with real coherence cos(4 alpha) / 2, or I/2 when the
/// preparation is dephased.
inline QubitState prepare(const PrepSetting& setting) {
  detail::check_prep_angle(setting.alpha);
  if (setting.dephased) return QubitState::maximally_mixed();
  Matrix2 m;
  const double c = 0.5 * std::cos(4.0 * setting.alpha);
  m << 0.5, c, c, 0.5;
  return QubitState::from_matrix(m);
}

/// HWP1 angle whose prepared state has l1 coherence `c`.
inline double alpha_for_coherence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    std::ostringstream os;
    os << "l1 coherence " << c << " outside [0, 1]";
    throw CoherenceOutOfRange(os.str());
  }
  return std::acos(c) / 4.0;
}

/// Analytic image of prepare(setting) under the GAD channel. Computed from the
/// closed-form populations and coherence, independently of the Kraus map.
inline QubitState evolved_closed_form(const PrepSetting& setting, const GadChannel& ch) {
  const double p = ch.p();
  const double r = ch.r();
  const double ground = p * r + 0.5 * (1.0 - r);
  const double excited = 0.5 * (1.0 + r) - p * r;
  detail::check_prep_angle(setting.alpha);
  double coh = 0.0;
  if (!setting.dephased) {
    coh = 0.5 * std::cos(4.0 * setting.alpha) * std::sqrt(1.0 - r);
  }
  Matrix2 m;
  m << ground, coh, coh, excited;
  return QubitState::from_matrix(m);
}

/// Angle of the SLI1 plates realizing p = cos^2(2 theta).
inline double hwp_theta_for_p(double p) {
  if (!(p >= 0.5 && p <= 1.0)) throw ParameterOutOfRange("p outside [0.5, 1]");
  return std::acos(std::sqrt(p)) / 2.0;
}

/// Angle of the SLI2/SLI3 plate realizing r = sin^2(2 phi).
inline double hwp_phi_for_r(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw ParameterOutOfRange("r outside [0, 1]");
  return std::asin(std::sqrt(r)) / 2.0;
}

}  // namespace qentropy

#endif  // QENTROPY_STATE_PREP_HPP
