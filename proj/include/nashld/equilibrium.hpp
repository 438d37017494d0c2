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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "nashld/channel.hpp"
#include "nashld/rational.hpp"
#include "nashld/regions.hpp"
#include "nashld/scheme.hpp"
#include "nashld/verification.hpp"

namespace nashld {

struct RateSplit {
  // parts[i - 1][SplitPart]
  std::array<std::array<Rational, 5>, 2> parts;

  Rational& at(int user, SplitPart part) {
    return parts[check_user(user) - 1][static_cast<int>(part)];
  }
  const Rational& at(int user, SplitPart part) const {
    return parts[check_user(user) - 1][static_cast<int>(part)];
  }
  // R_i = C1 + C2 + P
  Rational rate(int user) const;
  // C1 + C2
  Rational common_rate(int user) const;
  // R1 + R2
  Rational random_rate(int user) const;
  // In hk_system column order.
  std::vector<Rational> as_vector() const;
};

inline constexpr int kDefaultEpsilonDen = 1000;

struct GameOutcome {
  std::string configuration[2];
  Rational utility[2];
  Rational epsilon;
};

// Rate of user i if its bit error probability is below epsilon, else 0.
// Throws std::invalid_argument unless 0 < epsilon < 1.
Rational utility(const SimulationReport& report, int i,
                 const Rational& epsilon = Rational(1, kDefaultEpsilonDen));

GameOutcome play(const ChannelParams& p, const Scheme& s1, const Scheme& s2,
                 const std::string& name1, const std::string& name2,
                 const Rational& epsilon = Rational(1, kDefaultEpsilonDen),
                 std::uint64_t seed = 1);

// r in C (by LP feasibility of the split system) and inside the box.
bool is_ne_rate_pair(const ChannelParams& p, const Rational& eta, const RatePair& r);

// max(n_ii, n_ij) - (r_jC + r_jR) + 2 eta / 3
Rational deviation_ceiling(const ChannelParams& p, int i, const Rational& r_jC,
                           const Rational& r_jR, const Rational& eta);

struct SplitWitness {
  // Components of the shifted tuple; satisfies hk_system.
  RateSplit shifted;
  // Unshifted aggregates R_{i,C}, R_{i,R}, R_{i,P}.
  std::array<Rational, 2> common;
  std::array<Rational, 2> random;
  std::array<Rational, 2> priv;
};

// Checks a witness by direct substitution: the shifted split satisfies every
// row of hk_system, the aggregates match it, both equilibrium equalities
// hold and R_i = R_{i,C} + R_{i,P} - eta/3 equals r_i.
bool verify_witness(const ChannelParams& p, const Rational& eta, const RatePair& r,
                    const SplitWitness& w);

std::optional<SplitWitness> ne_split_search(const ChannelParams& p, const Rational& eta,
                                            const RatePair& r);

struct SchemeAggregates {
  // Fresh and common-random bits per use on the levels of X_j that reach
  // receiver i (levels 1..n_ij).
  Rational common;
  Rational random;
};

SchemeAggregates scheme_aggregates(const ChannelParams& p, const Scheme& s);

struct DeviationClass {
  int max_pattern_length = 2;
  bool allow_relay = true;
  int max_lag = 1;
  std::int64_t max_candidates = 1'000'000;
  std::int64_t trials = 64;

  std::string str() const;
};

struct OracleResult {
  Rational best;
  std::int64_t candidates = 0;
  std::int64_t synthesized = 0;
  std::int64_t simulated = 0;
  std::optional<Scheme> best_scheme;
  SchemeAggregates fixed_aggregates;
  Rational ceiling;
};

// Number of user-i schemes in the class.
std::int64_t class_size(const ChannelParams& p, int i, const DeviationClass& cls);

// Best utility user i reaches against `fixed` with any scheme of the class:
// every level of every use is zero, fresh, or (if allowed) a relay with lag
// 1..max_lag of a feedback level that carries part of the other input. Fresh positions are
// numbered in order of appearance. A candidate whose fresh bits are not all
// in the span of the receiver's observations gets utility 0; the others are
// simulated with run_and_verify (exhaustive). Throws std::invalid_argument
// for an invalid fixed scheme or a class above max_candidates.
OracleResult restricted_deviation_oracle(const ChannelParams& p, const Scheme& fixed,
                                         const DeviationClass& cls, const Rational& eta,
                                         const Rational& epsilon = Rational(1, kDefaultEpsilonDen),
                                         std::uint64_t seed = 1);

}  // namespace nashld
