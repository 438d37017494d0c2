// Copyright 2026 The nashld Authors
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

#include <gtest/gtest.h>

#include <random>

#include "nashld/equilibrium.hpp"
#include "nashld/regions.hpp"
#include "nashld/scheme.hpp"
#include "oracles.hpp"

namespace nashld {
namespace {

const ChannelParams kFig{7, 6, 4, 4, 0, 0};
const ChannelParams kFig5{7, 6, 4, 4, 5, 0};
const Rational kEta100(1, 100);
const Rational kEta8(1, 8);

SimulationReport report_with(const Rational& rate, const Rational& error) {
  SimulationReport r;
  r.rate[0] = rate;
  r.error_probability[0] = error;
  r.zero_error = error.is_zero();
  return r;
}

TEST(Utility, Examples) {
  EXPECT_EQ(utility(report_with(3, 0), 1), Rational(3));
  EXPECT_EQ(utility(report_with(3, Rational(1, 4)), 1, kEta100), Rational(0));
  EXPECT_EQ(utility(report_with(5, 0), 1, Rational(1, 1000000)), Rational(5));
  EXPECT_EQ(utility(report_with(5, Rational(1, 2000)), 1), Rational(5));
  EXPECT_THROW(utility(report_with(3, 0), 1, Rational(0)), std::invalid_argument);
  EXPECT_THROW(utility(report_with(3, 0), 1, Rational(1)), std::invalid_argument);
}

TEST(Play, FloorProfile) {
  const GameOutcome g = play(kFig, floor_scheme(kFig, 1), floor_scheme(kFig, 2), "floor", "floor");
  EXPECT_EQ(g.utility[0], Rational(3));
  EXPECT_EQ(g.utility[1], Rational(2));
  EXPECT_EQ(g.configuration[1], "floor");
}

TEST(IsNeRatePair, Examples) {
  EXPECT_TRUE(is_ne_rate_pair(kFig5, kEta100, {3, 4}));
  EXPECT_TRUE(is_ne_rate_pair(kFig5, kEta100, {5, 4}));
  EXPECT_FALSE(is_ne_rate_pair(kFig5, kEta100, {0, 0}));
  EXPECT_FALSE(is_ne_rate_pair(kFig5, kEta100, {100, 100}));
  EXPECT_FALSE(is_ne_rate_pair(kFig5, kEta8, {7, 0}));
}

TEST(DeviationCeiling, Examples) {
  EXPECT_EQ(deviation_ceiling(kFig, 1, 2, 1, Rational(6, 100)), Rational(404, 100));
  EXPECT_EQ(deviation_ceiling(kFig, 1, 0, 0, kEta8), Rational(7) + Rational(1, 12));
  EXPECT_EQ(deviation_ceiling(kFig, 2, 0, 0, kEta8), Rational(6) + Rational(1, 12));
  EXPECT_THROW(deviation_ceiling(kFig, 1, -1, 0, kEta8), std::invalid_argument);
  EXPECT_THROW(deviation_ceiling(kFig, 1, 0, 0, 0), std::invalid_argument);
}

bool substitutes(const ChannelParams& p, const Rational& eta, const RatePair& r,
                 const SplitWitness& w) {
  if (!hk_system(p).satisfied_by(w.shifted.as_vector())) return false;
  const Rational rates[2] = {r.x, r.y};
  const Rational sixth = eta / 6;
  for (int i = 1; i <= 2; ++i) {
    const int k = i - 1;
    if (w.shifted.common_rate(i) != w.common[k] - sixth) return false;
    if (w.shifted.random_rate(i) != w.random[k] - sixth) return false;
    if (w.shifted.at(i, SplitPart::kP) != w.priv[k] - sixth) return false;
    if (w.common[k] + w.priv[k] - eta / 3 != rates[k]) return false;
  }
  return true;
}

TEST(NeSplitSearch, Examples) {
  const auto w = ne_split_search(kFig5, kEta8, {3, 4});
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(kFig5, kEta8, {3, 4}, *w));
  EXPECT_TRUE(substitutes(kFig5, kEta8, {3, 4}, *w));
  EXPECT_FALSE(verify_witness(kFig5, kEta8, {5, 4}, *w));
  EXPECT_FALSE(ne_split_search(kFig5, kEta8, {7, 0}).has_value());
  EXPECT_FALSE(ne_split_search(kFig5, kEta8, {100, 100}).has_value());
}

TEST(SchemeAggregates, BuiltIns) {
  const SchemeAggregates f = scheme_aggregates(kFig, floor_scheme(kFig, 2));
  EXPECT_EQ(f.common, Rational(2));
  EXPECT_EQ(f.random, Rational(0));
  const SchemeAggregates pol = scheme_aggregates(kFig5, policed_pair(kFig5).second);
  EXPECT_EQ(pol.common, Rational(2));
  EXPECT_EQ(pol.random, Rational(2));
  EXPECT_EQ(scheme_aggregates(kFig, zero_scheme(kFig, 1)).common, Rational(0));
}

TEST(DeviationOracle, SilentOpponentLeavesAllLevels) {
  DeviationClass cls;
  cls.max_pattern_length = 1;
  cls.allow_relay = false;
  const OracleResult r = restricted_deviation_oracle(kFig, zero_scheme(kFig, 2), cls, kEta8);
  EXPECT_EQ(r.best, Rational(7));
  EXPECT_EQ(r.candidates, class_size(kFig, 1, cls));
  ASSERT_TRUE(r.best_scheme.has_value());
  EXPECT_EQ(r.best_scheme->fresh_rate, Rational(7));
  EXPECT_LE(r.best, r.ceiling);
}

TEST(DeviationOracle, FloorOpponent) {
  DeviationClass cls;
  cls.max_pattern_length = 1;
  for (int i = 1; i <= 2; ++i) {
    const Scheme fixed = floor_scheme(kFig, 3 - i);
    const OracleResult r = restricted_deviation_oracle(kFig, fixed, cls, kEta8);
    EXPECT_GE(r.best, Rational(std::max(kFig.direct(i) - kFig.cross(i), 0)));
    EXPECT_LE(r.best, r.ceiling);
    const SchemeAggregates agg = scheme_aggregates(kFig, fixed);
    EXPECT_EQ(r.ceiling, deviation_ceiling(kFig, i, agg.common, agg.random, kEta8));
  }
}

TEST(DeviationOracle, ClassSize) {
  DeviationClass one;
  one.max_pattern_length = 1;
  // Zero, fresh, and relays of feedback levels 6 and 7, which carry X_2.
  EXPECT_EQ(class_size(kFig5, 1, one), 16384);
  // No feedback level of user 2 carries X_1 here.
  EXPECT_EQ(class_size(kFig, 2, DeviationClass{}), 128 + 16384);
  one.allow_relay = false;
  EXPECT_EQ(class_size(kFig5, 1, one), 128);
}

TEST(DeviationOracle, RejectsOversizedClasses) {
  DeviationClass cls;
  cls.max_candidates = 100;
  EXPECT_THROW(restricted_deviation_oracle(kFig, floor_scheme(kFig, 2), cls, kEta8),
               std::invalid_argument);
}

TEST(EquilibriumProperty, TwoMembershipPathsAgree) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 25; ++trial) {
    const ChannelParams p = oracle::random_params(rng, 5);
    const Region2 n = ne_region(p, kEta8);
    const int q = derive_q(p);
    for (int x = 0; x <= 2 * q; ++x) {
      for (int y = 0; y <= 2 * q; ++y) {
        const RatePair r{Rational(x, 2), Rational(y, 2)};
        EXPECT_EQ(is_ne_rate_pair(p, kEta8, r), contains_point(n, r)) << p.str();
      }
    }
  }
}

// Witnesses exist exactly on the constructive region, and each one checks
// out by substitution.
TEST(EquilibriumProperty, WitnessesAreSound) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 15; ++trial) {
    const ChannelParams p = oracle::random_params(rng, 4);
    const Region2 k = ne_region_constructive(p, kEta8);
    const int q = derive_q(p);
    for (int x = 0; x <= 2 * q; ++x) {
      for (int y = 0; y <= 2 * q; ++y) {
        const RatePair r{Rational(x, 2), Rational(y, 2)};
        const auto w = ne_split_search(p, kEta8, r);
        EXPECT_EQ(w.has_value(), contains_point(k, r)) << p.str();
        if (w) {
          EXPECT_TRUE(substitutes(p, kEta8, r, *w));
          EXPECT_TRUE(is_ne_rate_pair(p, kEta8, r));
        }
      }
    }
  }
}

TEST(EquilibriumProperty, OracleBetweenFloorAndCeiling) {
  std::mt19937_64 rng(89);
  DeviationClass cls;
  cls.max_pattern_length = 1;
  cls.max_lag = 1;
  for (int trial = 0; trial < 12; ++trial) {
    const ChannelParams p = oracle::random_params(rng, 3);
    if (derive_q(p) == 0) continue;
    for (int i = 1; i <= 2; ++i) {
      const Scheme fixed = floor_scheme(p, 3 - i);
      const OracleResult r = restricted_deviation_oracle(p, fixed, cls, kEta8);
      EXPECT_GE(r.best, floor_scheme(p, i).fresh_rate) << p.str();
      EXPECT_LE(r.best, r.ceiling) << p.str();
    }
  }
}

}  // namespace
}  // namespace nashld
