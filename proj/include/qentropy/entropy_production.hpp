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

#ifndef QENTROPY_ENTROPY_PRODUCTION_HPP
#define QENTROPY_ENTROPY_PRODUCTION_HPP

#include <cmath>
#include <sstream>
#include <string>

#include "qentropy/errors.hpp"
#include "qentropy/extended_real.hpp"
#include "qentropy/gad_channel.hpp"
#include "qentropy/qstate.hpp"

namespace qentropy {

/// Noise floor for entropy-production values; anything in [-floor, 0) is zero.
inline constexpr double kProductionFloor = 1e-10;

/// Total entropy production and its population / coherence split, in nats.
struct EntropyBudget {
  ExtendedReal total;
  ExtendedReal population;
  double coherence = 0.0;
};

namespace detail {

inline void require_diagonal_reference(const QubitState& eq) {
  if (std::abs(eq.coherence()) > kStateTolerance) {
    throw ParameterOutOfRange("equilibrium reference state must be diagonal");
  }
}

inline ExtendedReal relative_entropy_drop(const QubitState& before, const QubitState& after,
                                          const QubitState& eq) {
  const ExtendedReal d_before = relative_entropy(before, eq);
  const ExtendedReal d_after = relative_entropy(after, eq);
  if (d_before.is_infinite() && d_after.is_infinite()) {
    throw IndeterminateError(
        "relative entropy to equilibrium is infinite before and after the evolution; "
        "restrict to p < 1 or r > 0");
  }
  return d_before - d_after;
}

/// Clamps [-floor, 0) to zero; anything more negative is a genuine violation.
inline ExtendedReal floor_noise(ExtendedReal x, const char* what) {
  if (x.value() >= 0.0) return x;
  if (x.value() >= -kProductionFloor) return 0.0;
  std::ostringstream os;
  os << what << " entropy production is negative (" << x << ")";
  throw ConsistencyError(os.str());
}

}  // namespace detail

/// Sigma = D(initial || eq) - D(final || eq).
inline ExtendedReal total_production(const QubitState& initial, const QubitState& final,
                                     const QubitState& eq) {
  detail::require_diagonal_reference(eq);
  return detail::relative_entropy_drop(initial, final, eq);
}

/// Sigma_pop = D(dephase(initial) || eq) - D(dephase(final) || eq).
inline ExtendedReal population_production(const QubitState& initial, const QubitState& final,
                                          const QubitState& eq) {
  detail::require_diagonal_reference(eq);
  return detail::relative_entropy_drop(dephase(initial), dephase(final), eq);
}

/// Sigma_coh = C(initial) - C(final) with C the relative entropy of coherence.
inline double coherence_production(const QubitState& initial, const QubitState& final) {
  return rel_entropy_coherence(initial) - rel_entropy_coherence(final);
}

/// Evolves `initial` through `ch` and splits the resulting entropy production.
/// The reference is always the channel's own fixed point.
inline EntropyBudget budget(const QubitState& initial, const GadChannel& ch) {
  const QubitState final = apply(ch, initial);
  const QubitState eq = equilibrium_state(ch);

  EntropyBudget b;
  b.total = detail::floor_noise(total_production(initial, final, eq), "total");
  b.population = detail::floor_noise(population_production(initial, final, eq), "population");
  b.coherence = detail::floor_noise(coherence_production(initial, final), "coherence").value();

  if (b.total.is_finite() != b.population.is_finite()) {
    throw ConsistencyError("total and population production disagree on finiteness");
  }
  if (b.total.is_finite()) {
    const double gap = std::abs(b.total.value() - b.population.value() - b.coherence);
    if (gap > kProductionFloor) {
      std::ostringstream os;
      os << "entropy budget not additive: |total - population - coherence| = " << gap;
      throw ConsistencyError(os.str());
    }
  }
  return b;
}

}  // namespace qentropy

#endif  // QENTROPY_ENTROPY_PRODUCTION_HPP
