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

#include "qentropy/state_prep.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qentropy/sampling.hpp"

using namespace qentropy;

TEST(prepare, angle_zero_is_diagonal_polarization) {
  EXPECT_LT(max_abs_diff(prepare({0.0, false}), QubitState::pure(ket_d())), 1e-15);
}

TEST(prepare, angle_pi_over_8_is_incoherent) {
  const QubitState s = prepare({std::numbers::pi / 8, false});
  EXPECT_LT(max_abs_diff(s, QubitState::maximally_mixed()), 1e-15);
  EXPECT_NEAR(l1_coherence(s), 0.0, 1e-15);
}

TEST(prepare, quoted_angle_gives_coherence_point_eight) {
  const QubitState s = prepare({degrees_to_radians(9.22), false});
  EXPECT_NEAR(s.coherence().real(), 0.400, 5e-4);
  EXPECT_NEAR(l1_coherence(s), 0.8, 1e-3);
}

TEST(prepare, dephased_is_maximally_mixed) {
  for (double deg : {0.0, 9.22, 13.28, 16.61, 45.0}) {
    EXPECT_EQ(prepare({degrees_to_radians(deg), true}).matrix(), QubitState::maximally_mixed().matrix());
  }
}

TEST(prepare, rejects_out_of_range_angles) {
  EXPECT_THROW(prepare({-0.01, false}), AngleOutOfRange);
  EXPECT_THROW(prepare({kMaxPrepAngle + 1e-6, false}), AngleOutOfRange);
  EXPECT_THROW(prepare({kMaxPrepAngle + 1e-6, true}), AngleOutOfRange);
  EXPECT_NO_THROW(prepare({kMaxPrepAngle, false}));
}

TEST(prepare, invariants_over_angle_range) {
  for (int i = 0; i <= 100; ++i) {
    const double alpha = kMaxPrepAngle * i / 100.0;
    const QubitState s = prepare({alpha, false});
    ASSERT_EQ(s(0, 0).real(), 0.5);
    ASSERT_EQ(s(1, 1).real(), 0.5);
    ASSERT_NEAR(l1_coherence(s), std::abs(std::cos(4 * alpha)), 1e-15);
    ASSERT_EQ(dephase(s).matrix(), prepare({alpha, true}).matrix());
  }
}

TEST(alpha_for_coherence, examples) {
  EXPECT_EQ(alpha_for_coherence(1.0), 0.0);
  EXPECT_NEAR(alpha_for_coherence(0.0), std::numbers::pi / 8, 1e-15);
  EXPECT_NEAR(radians_to_degrees(alpha_for_coherence(0.6)), 13.28, 0.01);
  EXPECT_NEAR(radians_to_degrees(alpha_for_coherence(0.8)), frozen::kAlphaDeg08, 1e-12);
  EXPECT_NEAR(radians_to_degrees(alpha_for_coherence(0.6)), frozen::kAlphaDeg06, 1e-12);
  EXPECT_NEAR(radians_to_degrees(alpha_for_coherence(0.4)), frozen::kAlphaDeg04, 1e-12);
  EXPECT_THROW(alpha_for_coherence(1.0001), CoherenceOutOfRange);
  EXPECT_THROW(alpha_for_coherence(-0.1), CoherenceOutOfRange);
}

TEST(alpha_for_coherence, round_trips_through_prepare) {
  for (int i = 0; i <= 200; ++i) {
    const double c = i / 200.0;
    ASSERT_NEAR(l1_coherence(prepare({alpha_for_coherence(c), false})), c, 1e-12);
  }
}

TEST(evolved_closed_form, examples) {
  const PrepSetting s{0.2, false};
  EXPECT_LT(max_abs_diff(evolved_closed_form(s, GadChannel(0.8, 0.0)), prepare(s)), 1e-15);
  EXPECT_LT(max_abs_diff(evolved_closed_form(s, GadChannel(0.8, 1.0)), QubitState::diagonal(0.8, 0.2)),
            1e-15);
  const QubitState anchor = evolved_closed_form({0.0, false}, GadChannel(0.9, 0.5));
  EXPECT_NEAR(anchor(0, 0).real(), 0.7, 1e-15);
  EXPECT_NEAR(anchor(1, 1).real(), 0.3, 1e-15);
  EXPECT_NEAR(anchor(0, 1).real(), 0.353553390593274, 1e-14);
  EXPECT_EQ(evolved_closed_form({0.1, true}, GadChannel(0.9, 0.5)).coherence(), Complex(0, 0));
}

TEST(evolved_closed_form, agrees_with_kraus_map_on_dense_grid) {
  for (int a = 0; a <= 16; ++a) {
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const GadChannel ch(0.5 + 0.025 * i, 0.05 * j);
        for (bool deph : {false, true}) {
          const PrepSetting s{kMaxPrepAngle * a / 16.0, deph};
          ASSERT_LT(max_abs_diff(evolved_closed_form(s, ch), apply(ch, prepare(s))), 1e-12);
        }
      }
    }
  }
}

TEST(wave_plates, examples_and_round_trip) {
  EXPECT_EQ(hwp_theta_for_p(1.0), 0.0);
  EXPECT_NEAR(hwp_phi_for_r(1.0), std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(radians_to_degrees(hwp_theta_for_p(0.9)), frozen::kThetaDeg09, 1e-12);
  for (int i = 0; i <= 100; ++i) {
    const double p = 0.5 + 0.005 * i, r = 0.01 * i;
    ASSERT_NEAR(std::pow(std::cos(2 * hwp_theta_for_p(p)), 2), p, 1e-12);
    ASSERT_NEAR(std::pow(std::sin(2 * hwp_phi_for_r(r)), 2), r, 1e-12);
  }
  EXPECT_THROW(hwp_theta_for_p(0.4), ParameterOutOfRange);
  EXPECT_THROW(hwp_phi_for_r(1.5), ParameterOutOfRange);
}
