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

#include "nashld/scheme.hpp"
#include "nashld/verification.hpp"
#include "oracles.hpp"

namespace nashld {
namespace {

const ChannelParams kFig{7, 6, 4, 4, 0, 0};
const ChannelParams kFig5{7, 6, 4, 4, 5, 0};

bool has_violation(const ChannelParams& p, const Scheme& s, const std::string& needle) {
  for (const auto& v : validate_scheme(p, s)) {
    if (v.find(needle) != std::string::npos) return true;
  }
  return false;
}

oracle::Levels to_levels(const BitVector& v) {
  oracle::Levels out(v.dim());
  for (int m = 1; m <= v.dim(); ++m) out[m - 1] = v.at(m);
  return out;
}

BitVector from_levels(const oracle::Levels& l) {
  BitVector v(static_cast<int>(l.size()));
  for (std::size_t m = 0; m < l.size(); ++m) v.set(static_cast<int>(m) + 1, l[m] != 0);
  return v;
}

Bits random_bits(std::mt19937_64& rng, int n) {
  Bits b(n);
  for (auto& x : b) x = rng() & 1U;
  return b;
}

TEST(FloorScheme, Rates) {
  EXPECT_EQ(floor_scheme(kFig, 1).fresh_rate, Rational(3));
  EXPECT_EQ(floor_scheme(kFig, 2).fresh_rate, Rational(2));
  EXPECT_EQ(achieved_rate(floor_scheme(kFig, 1)), Rational(3));
  const ChannelParams weak{3, 5, 4, 2, 0, 0};
  EXPECT_EQ(floor_scheme(weak, 1).fresh_rate, Rational(0));
  EXPECT_EQ(floor_scheme(weak, 2).fresh_rate, Rational(3));
  EXPECT_EQ(achieved_rate(zero_scheme(kFig, 1)), Rational(0));
}

TEST(ValidateScheme, Examples) {
  EXPECT_TRUE(validate_scheme(kFig, floor_scheme(kFig, 1)).empty());
  EXPECT_TRUE(validate_scheme(kFig, floor_scheme(kFig, 2)).empty());

  Scheme wide = floor_scheme(kFig, 1);
  wide.levels[0].push_back(LevelAssignment::zero());
  EXPECT_FALSE(validate_scheme(kFig, wide).empty());

  Scheme deep = floor_scheme(kFig, 1);
  deep.decoder.columns[0].level = 8;
  EXPECT_FALSE(validate_scheme(kFig, deep).empty());

  Scheme relay_out = zero_scheme(kFig5, 1);
  relay_out.levels[0][6] = LevelAssignment::relay(8, 1);
  EXPECT_FALSE(validate_scheme(kFig5, relay_out).empty());

  Scheme lag0 = zero_scheme(kFig5, 1);
  lag0.levels[0][6] = LevelAssignment::relay(7, 0);
  EXPECT_TRUE(has_violation(kFig5, lag0, "lag"));

  Scheme truncated = zero_scheme(kFig5, 1);
  truncated.levels[0][6] = LevelAssignment::relay(2, 1);
  EXPECT_TRUE(has_violation(kFig5, truncated, "truncated"));

  Scheme duplicate = floor_scheme(kFig, 1);
  duplicate.levels[0][1] = LevelAssignment::fresh(0);
  EXPECT_FALSE(validate_scheme(kFig, duplicate).empty());

  Scheme wrong_rate = floor_scheme(kFig, 1);
  wrong_rate.fresh_rate = Rational(4);
  EXPECT_FALSE(validate_scheme(kFig, wrong_rate).empty());
  EXPECT_THROW(require_valid(kFig, wrong_rate), std::invalid_argument);
}

TEST(AchievedRate, NineBitsOverTwoUses) {
  Scheme s = zero_scheme(kFig, 1);
  s.pattern_length = 2;
  s.levels.assign(2, std::vector<LevelAssignment>(7));
  int k = 0;
  for (int u = 0; u < 2; ++u) {
    for (int m = 0; m < (u == 0 ? 5 : 4); ++m) s.levels[u][m] = LevelAssignment::fresh(k++);
  }
  s.declare_rates();
  EXPECT_EQ(achieved_rate(s), Rational(9, 2));
}

TEST(Dsl, RoundTrip) {
  for (const char* text : {"zero", "fresh:3", "random:0", "relay:6:1", "relay:7:2"}) {
    EXPECT_EQ(LevelAssignment::parse(text).str(), text);
  }
  for (const char* text : {"y@0:0:3", "y@+1:2:7", "omega@0:1", "prev@-1:0"}) {
    EXPECT_EQ(DecoderColumn::parse(text).str(), text);
  }
  for (const char* bad : {"", "fresh", "fresh:x", "relay:1", "noise:1", "zero:1"}) {
    EXPECT_THROW(LevelAssignment::parse(bad), std::invalid_argument) << bad;
  }
  for (const char* bad : {"y@0:0", "omega@x:1", "z@0:1"}) {
    EXPECT_THROW(DecoderColumn::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RunAndVerify, FloorPair) {
  const auto r = run_and_verify(kFig, floor_scheme(kFig, 1), floor_scheme(kFig, 2), 10, true);
  EXPECT_TRUE(r.zero_error);
  EXPECT_EQ(r.mode, TrialMode::kFull);
  EXPECT_EQ(r.trials, 1 << 15);
  EXPECT_EQ(r.rate[0], Rational(3));
  EXPECT_EQ(r.rate[1], Rational(2));
}

TEST(RunAndVerify, ZeroPair) {
  const auto r = run_and_verify(kFig, zero_scheme(kFig, 1), zero_scheme(kFig, 2), 5, true);
  EXPECT_TRUE(r.zero_error);
  EXPECT_EQ(r.rate[0], Rational(0));
  EXPECT_EQ(r.rate[1], Rational(0));
}

TEST(RunAndVerify, PolicedPair) {
  const auto [s1, s2] = policed_pair(kFig5);
  EXPECT_GT(s2.random_rate, Rational(0));
  const auto r = run_and_verify(kFig5, s1, s2, 10, true);
  EXPECT_TRUE(r.zero_error);
  EXPECT_EQ(r.mode, TrialMode::kPerBlock);
  EXPECT_EQ(r.rate[0], Rational(3));
  EXPECT_EQ(r.rate[1], Rational(4));
}

TEST(RunAndVerify, CooperativePair) {
  const auto [s1, s2] = cooperative_pair(kFig5);
  EXPECT_EQ(s1.random_rate, Rational(0));
  EXPECT_EQ(s2.random_rate, Rational(0));
  const auto r = run_and_verify(kFig5, s1, s2, 10, true);
  EXPECT_TRUE(r.zero_error);
  EXPECT_EQ(r.rate[0], Rational(5));
  EXPECT_EQ(r.rate[1], Rational(4));
}

TEST(RunAndVerify, BuiltInPairsNeedTheFigureChannel) {
  EXPECT_THROW(policed_pair(kFig), std::invalid_argument);
  EXPECT_THROW(cooperative_pair({7, 6, 4, 3, 5, 0}), std::invalid_argument);
}

TEST(RunAndVerify, RejectsShortRunsAndNoTrials) {
  EXPECT_THROW(run_and_verify(kFig, floor_scheme(kFig, 1, 2), floor_scheme(kFig, 2), 1, false),
               std::invalid_argument);
  EXPECT_THROW(run_and_verify(kFig, floor_scheme(kFig, 1), floor_scheme(kFig, 2), 0, false),
               std::invalid_argument);
}

TEST(RunAndVerify, DetectsABrokenDecoder) {
  // User 1 decodes its third bit from a level that user 2's fresh bits hit.
  Scheme s1 = floor_scheme(kFig, 1);
  s1.decoder.columns[2].level = 5;
  Scheme s2 = zero_scheme(kFig, 2);
  s2.levels[0][0] = LevelAssignment::fresh(0);
  s2.declare_rates();
  s2.decoder = floor_scheme(kFig, 2).decoder;
  s2.decoder.columns.resize(1);
  s2.decoder.rows.assign(1, DynamicBits(1, 1));
  const auto r = run_and_verify(kFig, s1, s2, 10, true);
  EXPECT_FALSE(r.zero_error);
  EXPECT_GT(r.error_probability[0], Rational(0));
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->message[0], r.counterexample->decoded[0]);
}

TEST(RunAndVerify, RandomModeIsSeedDeterministic) {
  const auto [s1, s2] = policed_pair(kFig5);
  const auto a = run_and_verify(kFig5, s1, s2, 40, false, 9);
  const auto b = run_and_verify(kFig5, s1, s2, 40, false, 9);
  EXPECT_EQ(a.mode, TrialMode::kRandom);
  EXPECT_EQ(a.trials, 40);
  EXPECT_TRUE(a.zero_error);
  EXPECT_EQ(a.error_probability[0], b.error_probability[0]);
}

TEST(Simulate, RejectsBadArguments) {
  const Scheme s1 = floor_scheme(kFig, 1);
  const Scheme s2 = floor_scheme(kFig, 2);
  EXPECT_THROW(simulate(kFig, s2, s1, Bits(6), Bits(9), {}, {}), std::invalid_argument);
  EXPECT_THROW(simulate(kFig, s1, s2, Bits(8), Bits(6), {}, {}), std::invalid_argument);
  EXPECT_NO_THROW(simulate(kFig, s1, s2, Bits(9), Bits(6), {}, {}));
}

TEST(Synthesis, RecoversFloorDecoder) {
  const Scheme own = floor_scheme(kFig, 1);
  Scheme stripped = own;
  stripped.decoder = {};
  const auto res = synthesize_decoder(kFig, stripped, floor_scheme(kFig, 2));
  ASSERT_TRUE(res.decoder.has_value());
  EXPECT_TRUE(res.undecodable.empty());
  const Scheme s = with_synthesized_decoder(kFig, stripped, floor_scheme(kFig, 2));
  EXPECT_TRUE(run_and_verify(kFig, s, floor_scheme(kFig, 2), 10, true).zero_error);
}

TEST(Synthesis, ReportsBitsBuriedUnderInterference) {
  // Level 4 of X_1 lands on output level 4, where X_2's level 1 also lands.
  Scheme own = zero_scheme(kFig, 1);
  own.levels[0][3] = LevelAssignment::fresh(0);
  own.declare_rates();
  Scheme other = zero_scheme(kFig, 2);
  other.levels[0][0] = LevelAssignment::fresh(0);
  other.declare_rates();
  const auto res = synthesize_decoder(kFig, own, other);
  EXPECT_FALSE(res.decoder.has_value());
  EXPECT_EQ(res.undecodable, std::vector<int>{0});
  EXPECT_THROW(with_synthesized_decoder(kFig, own, other), std::invalid_argument);
}

// Every relay input bit equals the referenced feedback bit with the
// transmitter's own contribution removed, and that is the other user's input
// bit at the corresponding level.
TEST(SchemeProperty, RelayReplaysFeedback) {
  std::mt19937_64 rng(31);
  for (int fb22 = 0; fb22 <= 6; ++fb22) {
    const ChannelParams p{7, 6, 4, 4, 5, fb22};
    for (bool policed : {true, false}) {
      const auto [s1, s2] = policed ? policed_pair(p) : cooperative_pair(p);
      const int q = derive_q(p);
      for (int trial = 0; trial < 20; ++trial) {
        const SimTrace tr = simulate(p, s1, s2, random_bits(rng, s1.message_bits()),
                                     random_bits(rng, s2.message_bits()),
                                     random_bits(rng, s1.random_bits()),
                                     random_bits(rng, s2.random_bits()));
        int relays = 0;
        for (const Scheme* s : {&s1, &s2}) {
          const int u = s->user - 1;
          const int e = feedback_exponent(p, s->user);
          for (int n = 1; n <= s->block_length(); ++n) {
            const auto& pattern = s->levels[(n - 1) % s->pattern_length];
            for (int m = 1; m <= q; ++m) {
              const auto& a = pattern[m - 1];
              if (a.kind != AssignmentKind::kRelay || n - a.lag < 1) continue;
              ++relays;
              const int src = n - a.lag - 1;
              const int L = a.feedback_level;
              const int own_level = L - e - (q - p.direct(s->user));
              const int other_level = L - e - (q - p.cross(s->user));
              const bool own_bit = own_level >= 1 && tr.x[u][src].at(own_level);
              const bool other_bit = other_level >= 1 && tr.x[1 - u][src].at(other_level);
              EXPECT_EQ(tr.x[u][n - 1].at(m), tr.fb[u][src].at(L) != own_bit);
              EXPECT_EQ(tr.x[u][n - 1].at(m), other_bit);
            }
          }
        }
        EXPECT_GT(relays, 0);
      }
    }
  }
}

// Floor decoding against arbitrary interference, on random channels. The
// receiver output comes from the index oracle, not the library channel.
TEST(SchemeProperty, FloorIsRobustToAnyInterference) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const ChannelParams p = oracle::random_params(rng, 7);
    const int q = derive_q(p);
    if (q == 0) continue;
    for (int i = 1; i <= 2; ++i) {
      const Scheme s = floor_scheme(p, i);
      const Bits w = random_bits(rng, s.message_bits());
      std::vector<BitVector> x, y;
      for (int n = 1; n <= s.block_length(); ++n) {
        x.push_back(encode_use(p, s, n, w, {}, {}, x));
        const oracle::Levels xi = to_levels(x.back());
        const oracle::Levels xj = to_levels(BitVector::from_word(q, rng()));
        y.push_back(from_levels(i == 1 ? oracle::forward(p, xi, xj, 1)
                                       : oracle::forward(p, xj, xi, 2)));
      }
      EXPECT_EQ(decode(p, s, y, {}), w) << p.str() << " user " << i;
    }
  }
}

TEST(SchemeProperty, VerifiedSchemesAchieveDeclaredRates) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const ChannelParams p = oracle::random_params(rng, 5);
    if (derive_q(p) == 0) continue;
    const Scheme s1 = floor_scheme(p, 1), s2 = floor_scheme(p, 2);
    const auto r = run_and_verify(p, s1, s2, 16, true, trial);
    EXPECT_TRUE(r.zero_error) << p.str();
    EXPECT_EQ(r.rate[0], s1.fresh_rate);
    EXPECT_EQ(r.rate[1], s2.fresh_rate);
    EXPECT_EQ(r.error_probability[0], Rational(0));
    EXPECT_EQ(r.error_probability[1], Rational(0));
  }
}

}  // namespace
}  // namespace nashld
