// Copyright 2026 The sympt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sympt/evolution.hpp"
#include "sympt/hamiltonian.hpp"
#include "sympt/observables.hpp"

namespace sympt {
namespace {

BlockPair sms_blocks(double omega0, double kappa, double t) {
  return split_blocks(propagate(build_heff(preset_cross_sms(omega0, kappa)), t));
}

TEST(Moments, VanishWithoutSqueezing) {
  const BlockPair id{CMatrix::Identity(3, 3), CMatrix::Zero(3, 3)};
  const MomentReport m = vacuum_moments(id);
  EXPECT_EQ(m.mean_n, RVector::Zero(3));
  EXPECT_EQ(m.var_n, RVector::Zero(3));
  EXPECT_EQ(total_number(id), 0.0);
}

TEST(Moments, BeamSplitterConservesVacuum) {
  for (double t : {0.0, 0.5, 3.0}) {
    const BlockPair b = split_blocks(propagate(build_heff(preset_beam_splitter(1.0, 0.6, 0.4)), t));
    EXPECT_EQ(total_number(b), 0.0);
  }
}

TEST(Moments, CrossSqueezerMeanExample) {
  const RVector n = mean_occupations(sms_blocks(1.0, 0.6, 1.0));
  const double expected = 0.5625 * std::pow(std::sin(0.8), 2);
  EXPECT_NEAR(n[0], expected, 1e-12);
  EXPECT_NEAR(n[1], expected, 1e-12);
}

TEST(Moments, ExceptionalPointMeanIsSquaredKappaT) {
  const RVector n = mean_occupations(sms_blocks(1.0, 1.0, 0.5));
  EXPECT_NEAR(n[0], 0.25, 1e-12);
  EXPECT_NEAR(n[1], 0.25, 1e-12);
}

TEST(Moments, MatchClosedFormsOnGrid) {
  for (double kappa : {0.5, 1.0, 1.5}) {
    for (double t : {0.2, 1.0}) {
      const BlockPair b = sms_blocks(1.0, kappa, t);
      const MomentReport m = vacuum_moments(b);
      for (int p = 0; p < 2; ++p) {
        EXPECT_NEAR(m.mean_n[p], testing::sms_mean(1.0, kappa, t), 1e-9);
        EXPECT_NEAR(m.var_n[p], testing::sms_variance(1.0, kappa, t), 1e-9);
      }
      EXPECT_NEAR(total_number(b), 2.0 * m.mean_n[0], 1e-12);
    }
  }
}

TEST(Moments, ShortTimeFluctuationsAtExceptionalPoint) {
  for (double kt : {1e-3, 1e-2}) {
    const double var = occupation_variance(sms_blocks(1.0, 1.0, kt), 0);
    EXPECT_NEAR(var / (2.0 * kt * kt), 1.0, 5.0 * kt);
  }
}

TEST(Moments, PeriodicInSymmetricPhase) {
  // Δ = 0.8i, so the occupations return to zero after t = π/0.8.
  const double period = std::numbers::pi / 0.8;
  EXPECT_LT(mean_occupations(sms_blocks(1.0, 0.6, period))[0], 1e-9);
  EXPECT_GT(mean_occupations(sms_blocks(1.0, 0.6, 0.5 * period))[0], 0.1);
}

TEST(Moments, MonotoneInBrokenPhase) {
  double previous = -1.0;
  for (int k = 0; k <= 30; ++k) {
    const double n = mean_occupations(sms_blocks(1.0, 1.5, 0.1 * k))[0];
    EXPECT_GT(n, previous);
    previous = n;
  }
}

TEST(Moments, SuperPoissonianForRandomSpecs) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const EffectiveHamiltonian H = build_heff(random_spec(1 + trial % 5, rng));
    const MomentReport m = vacuum_moments(split_blocks(propagate(H, 0.5)));
    for (int p = 0; p < m.mean_n.size(); ++p) {
      EXPECT_GE(m.mean_n[p], 0.0);
      EXPECT_GE(m.var_n[p], m.mean_n[p] - 1e-12);
    }
  }
}

TEST(Moments, SingleModeSqueezedVacuum) {
  // F = cosh r, G = sinh r gives n = sinh²r and variance 2 sinh²r cosh²r.
  const double r = 0.7;
  const BlockPair b{CMatrix::Constant(1, 1, std::cosh(r)), CMatrix::Constant(1, 1, std::sinh(r))};
  const double s2 = std::pow(std::sinh(r), 2);
  EXPECT_NEAR(mean_occupations(b)[0], s2, 1e-14);
  EXPECT_NEAR(occupation_variance(b, 0), 2.0 * s2 * (1.0 + s2), 1e-13);
  EXPECT_NEAR(std::abs(anomalous_moments(b)[0]), std::sinh(r) * std::cosh(r), 1e-14);
}

}  // namespace
}  // namespace sympt
