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

#ifndef QENTROPY_TOMOGRAPHY_HPP
#define QENTROPY_TOMOGRAPHY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "qentropy/errors.hpp"
#include "qentropy/qstate.hpp"

namespace qentropy {

// ---------------------------------------------------------------------------
// Seeding. Every stochastic task owns a generator keyed by (seed, stream).

using Engine = std::mt19937_64;

inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64 keyed by splitmix64(seed, stream); std::binomial_distribution";

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

inline Engine make_engine(std::uint64_t seed, std::uint64_t stream) {
  return Engine(derive_seed(seed, stream));
}

// ---------------------------------------------------------------------------

/// Projective measurement bases: |H>, |V>, |R> = (|H> + i|V>)/sqrt2,
/// |D> = (|H> + |V>)/sqrt2.
enum class Basis : std::size_t { H = 0, V = 1, R = 2, D = 3 };

inline constexpr std::array<Basis, 4> kBases = {Basis::H, Basis::V, Basis::R, Basis::D};

inline Ket basis_ket(Basis b) {
  switch (b) {
    case Basis::H:
      return ket_h();
    case Basis::V:
      return ket_v();
    case Basis::R:
      return ket_r();
    case Basis::D:
      return ket_d();
  }
  return ket_h();
}

/// Per-basis value, indexed in H, V, R, D order.
using BasisArray = std::array<double, 4>;

/// <b|rho|b> for each basis.
inline BasisArray projector_probabilities(const QubitState& state) {
  BasisArray out{};
  for (Basis b : kBases) {
    const Ket k = basis_ket(b);
    const double prob = (k.adjoint() * state.matrix() * k)(0, 0).real();
    out[static_cast<std::size_t>(b)] = std::clamp(prob, 0.0, 1.0);
  }
  return out;
}

struct CountRecord {
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t shots_per_basis = 0;
  std::uint64_t seed = 0;

  void check() const {
    if (shots_per_basis == 0) throw ParameterOutOfRange("shots per basis must be positive");
    for (auto c : counts) {
      if (c > shots_per_basis) throw ParameterOutOfRange("count exceeds shots per basis");
    }
  }

  BasisArray frequencies() const {
    BasisArray f{};
    for (std::size_t i = 0; i < 4; ++i) {
      f[i] = static_cast<double>(counts[i]) / static_cast<double>(shots_per_basis);
    }
    return f;
  }
};

namespace detail {

inline std::uint64_t draw_binomial(Engine& eng, std::uint64_t shots, double prob) {
  if (prob <= 0.0) return 0;
  if (prob >= 1.0) return shots;
  std::binomial_distribution<std::uint64_t> dist(shots, prob);
  return dist(eng);
}

inline std::array<std::uint64_t, 4> draw_counts(Engine& eng, std::uint64_t shots,
                                                const BasisArray& probs) {
  std::array<std::uint64_t, 4> counts{};
  for (std::size_t i = 0; i < 4; ++i) counts[i] = draw_binomial(eng, shots, probs[i]);
  return counts;
}

}  // namespace detail

/// Independent binomial counts per basis; deterministic given `seed`.
inline CountRecord simulate_counts(const QubitState& state, std::uint64_t shots,
                                   std::uint64_t seed) {
  if (shots == 0) throw ParameterOutOfRange("shots per basis must be positive");
  Engine eng = make_engine(seed, 0);
  return CountRecord{detail::draw_counts(eng, shots, projector_probabilities(state)), shots, seed};
}

/// (I + <sx> sx + <sy> sy + <sz> sz) / 2 from basis frequencies. Unit trace
/// and Hermitian, but not necessarily positive.
inline Matrix2 linear_inversion(const BasisArray& f) {
  const double z = f[0] - f[1];
  const double y = 2.0 * f[2] - 1.0;
  const double x = 2.0 * f[3] - 1.0;
  Matrix2 m;
  m(0, 0) = 0.5 * (1.0 + z);
  m(1, 1) = 0.5 * (1.0 - z);
  m(0, 1) = Complex(0.5 * x, -0.5 * y);
  m(1, 0) = std::conj(m(0, 1));
  return m;
}

inline Matrix2 linear_inversion(const CountRecord& record) {
  record.check();
  return linear_inversion(record.frequencies());
}

/// Radial Bloch-vector projection onto the unit ball. For unit-trace Hermitian
/// 2x2 input this is the Frobenius-nearest density matrix.
inline QubitState project_to_physical(const Matrix2& m) {
  if (const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff(); herm > kStateTolerance) {
    throw InvalidStateError(StateViolation{ViolationKind::NotHermitian, herm});
  }
  if (const double dev = std::abs(m.trace() - Complex(1.0, 0.0)); dev > kStateTolerance) {
    throw InvalidStateError(StateViolation{ViolationKind::TraceDeviation, dev});
  }
  const double x = 2.0 * m(0, 1).real();
  const double y = -2.0 * m(0, 1).imag();
  const double z = (m(0, 0) - m(1, 1)).real();
  const double len = std::sqrt(x * x + y * y + z * z);
  if (len <= 1.0) return QubitState::from_matrix(m);
  return QubitState::from_bloch(x / len, y / len, z / len);
}

/// Sample standard deviations of the reconstructed matrix entries.
struct ElementErrors {
  double ground = 0.0;
  double excited = 0.0;
  double coherence_re = 0.0;
  double coherence_im = 0.0;
};

struct Reconstruction {
  QubitState state;
  CountRecord record;
  ElementErrors errors;
  std::size_t n_bootstrap = 0;
  /// Parametric bootstrap replicates, in stream order.
  std::vector<QubitState> replicates;
};

inline double sample_stddev(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

/// Sample standard deviation of `f` over the bootstrap replicates. NaN when
/// any replicate value is not finite or fewer than two replicates exist.
template <class Functional>
double bootstrap_stderr(const std::vector<QubitState>& replicates, Functional&& f) {
  const std::size_t n = replicates.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  std::vector<double> values;
  values.reserve(n);
  for (const auto& s : replicates) {
    const double v = static_cast<double>(f(s));
    if (!std::isfinite(v)) return std::numeric_limits<double>::quiet_NaN();
    values.push_back(v);
  }
  return sample_stddev(values);
}

/// Linear inversion plus physicality repair of `record`, with `n_bootstrap`
/// parametric resamples drawn at the observed frequencies. Replicate b uses
/// stream b + 1 of the record's seed.
inline Reconstruction reconstruct(const CountRecord& record, std::size_t n_bootstrap) {
  if (n_bootstrap < 2) throw ParameterOutOfRange("n_bootstrap must be at least 2");
  record.check();
  const BasisArray observed = record.frequencies();

  std::vector<QubitState> replicates;
  replicates.reserve(n_bootstrap);
  for (std::size_t b = 0; b < n_bootstrap; ++b) {
    Engine eng = make_engine(record.seed, b + 1);
    const CountRecord resampled{detail::draw_counts(eng, record.shots_per_basis, observed),
                                record.shots_per_basis, record.seed};
    replicates.push_back(project_to_physical(linear_inversion(resampled)));
  }

  ElementErrors errors;
  errors.ground = bootstrap_stderr(replicates, [](const QubitState& s) { return s(0, 0).real(); });
  errors.excited = bootstrap_stderr(replicates, [](const QubitState& s) { return s(1, 1).real(); });
  errors.coherence_re =
      bootstrap_stderr(replicates, [](const QubitState& s) { return s(0, 1).real(); });
  errors.coherence_im =
      bootstrap_stderr(replicates, [](const QubitState& s) { return s(0, 1).imag(); });

  return Reconstruction{project_to_physical(linear_inversion(record)), record, errors, n_bootstrap,
                        std::move(replicates)};
}

/// Simulated tomography of `state`: one count record, reconstruction, and
/// bootstrap error estimates. Deterministic given `seed`.
inline Reconstruction reconstruct_with_errors(const QubitState& state, std::uint64_t shots,
                                              std::uint64_t seed, std::size_t n_bootstrap) {
  return reconstruct(simulate_counts(state, shots, seed), n_bootstrap);
}

}  // namespace qentropy

#endif  // QENTROPY_TOMOGRAPHY_HPP
