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

#include "qentropy/entropy_production.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qentropy/sampling.hpp"
#include "qentropy/state_prep.hpp"

using namespace qentropy;

namespace {

const QubitState kDiag = QubitState::pure(ket_d());
const QubitState kEq09 = QubitState::diagonal(0.9, 0.1);

}  // namespace

TEST(ExtendedReal, arithmetic_and_indeterminate_forms) {
  const ExtendedReal inf = ExtendedReal::infinity();
  EXPECT_EQ((ExtendedReal(3.0) - 1.0).value(), 2.0);
  EXPECT_TRUE((inf - 5.0).is_infinite());
  EXPECT_GT(inf - 5.0, ExtendedReal(0.0));
  EXPECT_LT(ExtendedReal(5.0) - inf, ExtendedReal(0.0));
  EXPECT_THROW(inf - inf, IndeterminateError);
  EXPECT_THROW(inf + (-inf), IndeterminateError);
  EXPECT_NO_THROW(inf + inf);
  EXPECT_THROW(ExtendedReal(std::nan("")), IndeterminateError);
}

TEST(total_production, examples) {
  EXPECT_NEAR(total_production(kDiag, kDiag, kEq09).value(), 0.0, 1e-12);
  EXPECT_NEAR(total_production(kDiag, kEq09, kEq09).value(), frozen::kTotalD09, 1e-12);
  const QubitState mixed = QubitState::maximally_mixed();
  EXPECT_NEAR(total_production(mixed, mixed, mixed).value(), 0.0, 1e-15);
}

TEST(total_production, infinite_and_indeterminate_cases) {
  const QubitState ground = QubitState::pure(ket_h());
  // p = 1, r = 1: initial outside the support of |H><H|, final at equilibrium.
  EXPECT_TRUE(total_production(kDiag, ground, ground).is_infinite());
  // p = 1, r < 1: both relative entropies diverge.
  const QubitState partial = apply(GadChannel(1.0, 0.5), kDiag);
  EXPECT_THROW(total_production(kDiag, partial, ground), IndeterminateError);
  EXPECT_THROW(population_production(kDiag, partial, ground), IndeterminateError);
}

TEST(total_production, requires_diagonal_reference) {
  EXPECT_THROW(total_production(kDiag, kDiag, kDiag), ParameterOutOfRange);
}

TEST(population_production, examples) {
  const QubitState d = QubitState::diagonal(0.8, 0.2);
  EXPECT_NEAR(population_production(d, d, kEq09).value(), 0.0, 1e-15);
  EXPECT_NEAR(population_production(kDiag, kEq09, kEq09).value(), frozen::kPop09, 1e-12);
  // Populations already at equilibrium contribute nothing for any r.
  const QubitState start = QubitState::from_matrix(oracle::evolved(0.9, 1.0, 0.0) +
                                                   Matrix2{{0.0, 0.2}, {0.2, 0.0}});
  for (double r : {0.0, 0.3, 0.9}) {
    const QubitState final = apply(GadChannel(0.9, r), start);
    EXPECT_NEAR(population_production(start, final, kEq09).value(), 0.0, 1e-12);
  }
}

TEST(coherence_production, examples) {
  const QubitState d = QubitState::diagonal(0.6, 0.4);
  EXPECT_EQ(coherence_production(d, apply(GadChannel(0.7, 0.4), d)), 0.0);
  EXPECT_NEAR(coherence_production(kDiag, kEq09), std::numbers::ln2, 1e-12);
  EXPECT_NEAR(coherence_production(kDiag, apply(GadChannel(0.9, 0.5), kDiag)),
              frozen::kCohProd09Half, 1e-12);
}

TEST(budget, zero_at_zero_damping) {
  Engine eng = make_engine(31, 0);
  for (int i = 0; i < 50; ++i) {
    const EntropyBudget b = budget(random_state(eng), GadChannel(uniform(eng, 0.5, 0.99), 0.0));
    EXPECT_NEAR(b.total.value(), 0.0, 1e-12);
    EXPECT_NEAR(b.population.value(), 0.0, 1e-12);
    EXPECT_NEAR(b.coherence, 0.0, 1e-12);
    EXPECT_GE(b.total.value(), 0.0);
  }
}

TEST(budget, anchor_at_full_damping) {
  const EntropyBudget b = budget(kDiag, GadChannel(0.9, 1.0));
  EXPECT_NEAR(b.total.value(), frozen::kTotalD09, 1e-12);
  EXPECT_NEAR(b.population.value(), frozen::kPop09, 1e-12);
  EXPECT_NEAR(b.coherence, std::numbers::ln2, 1e-12);
}

TEST(budget, equilibrium_initial_state_gives_zero) {
  for (double r : {0.0, 0.25, 0.5, 1.0}) {
    const EntropyBudget b = budget(QubitState::maximally_mixed(), GadChannel(0.5, r));
    EXPECT_NEAR(b.total.value(), 0.0, 1e-15);
    EXPECT_NEAR(b.population.value(), 0.0, 1e-15);
    EXPECT_EQ(b.coherence, 0.0);
  }
}

TEST(budget, zero_temperature_cases) {
  // r = 1 at p = 1 is finite only for the coherence part.
  const EntropyBudget b = budget(kDiag, GadChannel(1.0, 1.0));
  EXPECT_TRUE(b.total.is_infinite());
  EXPECT_TRUE(b.population.is_infinite());
  EXPECT_NEAR(b.coherence, std::numbers::ln2, 1e-12);
  EXPECT_THROW(budget(kDiag, GadChannel(1.0, 0.5)), IndeterminateError);
  // Ground state at p = 1 stays put.
  const EntropyBudget g = budget(QubitState::pure(ket_h()), GadChannel(1.0, 0.5));
  EXPECT_EQ(g.total.value(), 0.0);
}

TEST(budget, matches_closed_form_oracle) {
  Engine eng = make_engine(32, 0);
  for (int i = 0; i < 500; ++i) {
    const double alpha = uniform(eng, 0, kMaxPrepAngle);
    const double p = uniform(eng, 0.5, 0.999), r = uniform(eng, 0, 1);
    const double c0 = std::cos(4 * alpha);
    const Matrix2 start = oracle::evolved(p, 0.0, c0);
    const Matrix2 end = oracle::evolved(p, r, c0);
    const double total = oracle::relative_entropy_to_diagonal(start, p) -
                         oracle::relative_entropy_to_diagonal(end, p);
    const double coh = (oracle::binary_entropy(start(0, 0).real()) - oracle::entropy(start)) -
                       (oracle::binary_entropy(end(0, 0).real()) - oracle::entropy(end));
    const EntropyBudget b = budget(prepare({alpha, false}), GadChannel(p, r));
    ASSERT_NEAR(b.total.value(), total, 1e-10);
    ASSERT_NEAR(b.coherence, coh, 1e-10);
  }
}

// The coherence term depends on p through the evolved populations; only the
// off-diagonal decay is temperature independent.
TEST(budget, coherence_term_spread_across_temperatures) {
  const double c09 = budget(kDiag, GadChannel(0.9, 0.5)).coherence;
  const double c075 = budget(kDiag, GadChannel(0.75, 0.5)).coherence;
  const double c06 = budget(kDiag, GadChannel(0.6, 0.5)).coherence;
  EXPECT_NEAR(c09, frozen::kCohProd09Half, 1e-12);
  EXPECT_NEAR(c075, frozen::kCohProd075Half, 1e-12);
  EXPECT_NEAR(c06, frozen::kCohProd06Half, 1e-12);
  EXPECT_NEAR(c06 - c09, 0.0217315624267312, 1e-12);
}

TEST(budget_properties, additive_and_non_negative) {
  Engine eng = make_engine(33, 0);
  for (int i = 0; i < 2000; ++i) {
    const GadChannel ch(uniform(eng, 0.5, 0.999), uniform(eng, 0, 1));
    const EntropyBudget b = budget(random_state(eng), ch);
    ASSERT_NEAR(b.total.value(), b.population.value() + b.coherence, 1e-10);
    ASSERT_GE(b.total.value(), 0.0);
    ASSERT_GE(b.population.value(), 0.0);
    ASSERT_GE(b.coherence, 0.0);
  }
}

TEST(budget_properties, total_non_decreasing_in_r) {
  Engine eng = make_engine(34, 0);
  for (int i = 0; i < 50; ++i) {
    const QubitState s = random_state(eng);
    const double p = uniform(eng, 0.5, 0.999);
    double previous = 0.0;
    for (int k = 0; k <= 40; ++k) {
      const double total = budget(s, GadChannel(p, k / 40.0)).total.value();
      ASSERT_GE(total, previous - 1e-10);
      previous = total;
    }
  }
}

TEST(budget_properties, dephased_initial_has_exactly_zero_coherence_term) {
  for (double p : {0.6, 0.75, 0.9})
    for (double r : {0.0, 0.2, 0.7, 1.0})
      EXPECT_EQ(budget(QubitState::diagonal(0.3, 0.7), GadChannel(p, r)).coherence, 0.0);
}
