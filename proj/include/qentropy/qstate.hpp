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

#ifndef QENTROPY_QSTATE_HPP
#define QENTROPY_QSTATE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "qentropy/errors.hpp"

namespace qentropy {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Ket = Eigen::Vector2cd;

/// Tolerance for Hermiticity, trace and positivity of a density matrix.
inline constexpr double kStateTolerance = 1e-12;
/// Eigenvalues of the reference state below this are treated as zero.
inline constexpr double kSupportTolerance = 1e-12;

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Basis convention: index 0 = ground = |H>, index 1 = excited = |V>.
inline Ket ket_h() { return Ket(1.0, 0.0); }
inline Ket ket_v() { return Ket(0.0, 1.0); }
inline Ket ket_d() { return Ket(kInvSqrt2, kInvSqrt2); }
inline Ket ket_r() { return Ket(Complex(kInvSqrt2, 0.0), Complex(0.0, kInvSqrt2)); }

enum class ViolationKind { NotHermitian, TraceDeviation, NegativeEigenvalue };

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotHermitian:
      return "NotHermitian";
    case ViolationKind::TraceDeviation:
      return "TraceDeviation";
    case ViolationKind::NegativeEigenvalue:
      return "NegativeEigenvalue";
  }
  return "Unknown";
}

/// First density-matrix invariant a matrix fails, with the size of the
/// violation (|m - m^dagger| max entry, |tr - 1|, or the negative eigenvalue).
struct StateViolation {
  ViolationKind kind;
  double magnitude;

  std::string describe() const {
    std::ostringstream os;
    os << to_string(kind) << " (magnitude " << magnitude << ")";
    return os.str();
  }
};

class InvalidStateError : public Error {
 public:
  explicit InvalidStateError(StateViolation violation)
      : Error("invalid qubit state: " + violation.describe()), violation_(violation) {}

  const StateViolation& violation() const noexcept { return violation_; }

 private:
  StateViolation violation_;
};

namespace detail {

/// Ascending eigenvalues of a Hermitian 2x2 matrix.
inline Eigen::Vector2d hermitian_eigenvalues(const Matrix2& m) {
  Eigen::SelfAdjointEigenSolver<Matrix2> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline Matrix2 hermitian_part(const Matrix2& m) { return 0.5 * (m + m.adjoint()); }

/// -x ln x with 0 ln 0 = 0 and noise-level negatives clamped.
inline double entropy_term(double x) {
  if (x <= 0.0) return 0.0;
  return -x * std::log(x);
}

}  // namespace detail

/// Checks the three density-matrix invariants in order: Hermiticity, unit
/// trace, positive semidefiniteness. Returns the first failure.
inline std::optional<StateViolation> validate(const Matrix2& m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= kStateTolerance)) return StateViolation{ViolationKind::NotHermitian, herm};

  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (!(trace_dev <= kStateTolerance)) {
    return StateViolation{ViolationKind::TraceDeviation, trace_dev};
  }

  const double min_eig = detail::hermitian_eigenvalues(detail::hermitian_part(m))(0);
  if (!(min_eig >= -kStateTolerance)) {
    return StateViolation{ViolationKind::NegativeEigenvalue, min_eig};
  }
  return std::nullopt;
}

/// Immutable, always-valid single-qubit density matrix.
class QubitState {
 public:
  /// Validates and stores the Hermitian part of `m`.
  static QubitState from_matrix(const Matrix2& m) {
    if (auto violation = validate(m)) throw InvalidStateError(*violation);
    return QubitState(detail::hermitian_part(m));
  }

  static QubitState maximally_mixed() { return QubitState(0.5 * Matrix2::Identity()); }

  static QubitState diagonal(double ground, double excited) {
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = ground;
    m(1, 1) = excited;
    return from_matrix(m);
  }

  /// Projector onto the normalized `ket`.
  static QubitState pure(const Ket& ket) {
    const double norm = ket.norm();
    if (!(norm > 0.0)) throw ParameterOutOfRange("pure state from zero vector");
    const Ket unit = ket / norm;
    return from_matrix(unit * unit.adjoint());
  }

  /// rho = (I + x sx + y sy + z sz) / 2 with sz = diag(1, -1).
  static QubitState from_bloch(double x, double y, double z) {
    Matrix2 m;
    m(0, 0) = 0.5 * (1.0 + z);
    m(1, 1) = 0.5 * (1.0 - z);
    m(0, 1) = Complex(0.5 * x, -0.5 * y);
    m(1, 0) = std::conj(m(0, 1));
    return from_matrix(m);
  }

  const Matrix2& matrix() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  double ground_population() const { return m_(0, 0).real(); }
  double excited_population() const { return m_(1, 1).real(); }
  /// The <0|rho|1> element.
  Complex coherence() const { return m_(0, 1); }

  std::array<double, 3> bloch() const {
    return {2.0 * m_(0, 1).real(), -2.0 * m_(0, 1).imag(),
            (m_(0, 0) - m_(1, 1)).real()};
  }

  bool is_diagonal() const { return m_(0, 1) == Complex(0.0, 0.0); }

 private:
  explicit QubitState(const Matrix2& m) : m_(m) {}

  Matrix2 m_;
};

inline double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const QubitState& a, const QubitState& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

/// Eigenvalues clamped at zero, ascending.
inline Eigen::Vector2d eigenvalues(const QubitState& state) {
  return detail::hermitian_eigenvalues(state.matrix()).cwiseMax(0.0);
}

/// S(rho) = -tr rho ln rho, in nats.
inline double von_neumann_entropy(const QubitState& state) {
  const Eigen::Vector2d lambda = eigenvalues(state);
  return detail::entropy_term(lambda(0)) + detail::entropy_term(lambda(1));
}

/// D(rho || sigma) = tr(rho ln rho - rho ln sigma) in nats. Returns +infinity
/// when rho has weight outside the support of sigma.
inline double relative_entropy(const QubitState& rho, const QubitState& sigma) {
  Eigen::SelfAdjointEigenSolver<Matrix2> solver(sigma.matrix());
  const Eigen::Vector2d& mu = solver.eigenvalues();
  const Matrix2& vecs = solver.eigenvectors();

  double cross = 0.0;  // tr(rho ln sigma)
  for (int k = 0; k < 2; ++k) {
    const Ket v = vecs.col(k);
    const double weight = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    if (mu(k) < kSupportTolerance) {
      if (weight > kSupportTolerance) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log(mu(k));
  }
  return -von_neumann_entropy(rho) - cross;
}

/// Removes every coherence in the energy eigenbasis.
inline QubitState dephase(const QubitState& state) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = state(0, 0).real();
  m(1, 1) = state(1, 1).real();
  return QubitState::from_matrix(m);
}

/// Sum of absolute off-diagonal elements.
inline double l1_coherence(const QubitState& state) { return 2.0 * std::abs(state.coherence()); }

/// C(rho) = S(dephase(rho)) - S(rho).
inline double rel_entropy_coherence(const QubitState& state) {
  const double c = von_neumann_entropy(dephase(state)) - von_neumann_entropy(state);
  return (c < 0.0 && c > -kStateTolerance) ? 0.0 : c;
}

namespace detail {

inline Matrix2 psd_sqrt(const Matrix2& m) {
  Eigen::SelfAdjointEigenSolver<Matrix2> solver(hermitian_part(m));
  const Eigen::Vector2d roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * roots.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace detail

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, in [0, 1].
inline double fidelity(const QubitState& rho, const QubitState& sigma) {
  const Matrix2 root = detail::psd_sqrt(rho.matrix());
  const Matrix2 inner = root * sigma.matrix() * root;
  const double t = detail::psd_sqrt(inner).trace().real();
  return std::clamp(t * t, 0.0, 1.0);
}

}  // namespace qentropy

#endif  // QENTROPY_QSTATE_HPP
