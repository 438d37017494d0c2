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

#include "nashld/equilibrium.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "nashld/lp.hpp"

namespace nashld {
namespace {

void require_epsilon(const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) {
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon < 1");
  }
}

struct Candidate {
  std::int64_t code;
  int pattern_length;
  int fresh;
};

// Level alphabet of the deviation class for user i.
std::vector<LevelAssignment> alphabet(const ChannelParams& p, int i, const DeviationClass& cls) {
  std::vector<LevelAssignment> symbols = {LevelAssignment::zero(), LevelAssignment::fresh(0)};
  if (cls.allow_relay) {
    // Lower feedback levels hold no bit of the other input; relaying them
    // always sends 0, which duplicates the zero symbol.
    const int q = derive_q(p);
    const int first = feedback_exponent(p, i) + q - p.cross(i) + 1;
    for (int level = first; level <= q; ++level) {
      for (int lag = 1; lag <= cls.max_lag; ++lag) {
        symbols.push_back(LevelAssignment::relay(level, lag));
      }
    }
  }
  return symbols;
}

}  // namespace

Rational RateSplit::rate(int user) const {
  return at(user, SplitPart::kC1) + at(user, SplitPart::kC2) + at(user, SplitPart::kP);
}

Rational RateSplit::common_rate(int user) const {
  return at(user, SplitPart::kC1) + at(user, SplitPart::kC2);
}

Rational RateSplit::random_rate(int user) const {
  return at(user, SplitPart::kR1) + at(user, SplitPart::kR2);
}

std::vector<Rational> RateSplit::as_vector() const {
  std::vector<Rational> v;
  for (const auto& user : parts) v.insert(v.end(), user.begin(), user.end());
  return v;
}

Rational utility(const SimulationReport& report, int i, const Rational& epsilon) {
  require_epsilon(epsilon);
  const int u = check_user(i) - 1;
  return report.error_probability[u] < epsilon ? report.rate[u] : Rational(0);
}

GameOutcome play(const ChannelParams& p, const Scheme& s1, const Scheme& s2,
                 const std::string& name1, const std::string& name2, const Rational& epsilon,
                 std::uint64_t seed) {
  require_epsilon(epsilon);
  const SimulationReport report = run_and_verify(p, s1, s2, 64, true, seed);
  GameOutcome out;
  out.configuration[0] = name1;
  out.configuration[1] = name2;
  out.utility[0] = utility(report, 1, epsilon);
  out.utility[1] = utility(report, 2, epsilon);
  out.epsilon = epsilon;
  return out;
}

bool is_ne_rate_pair(const ChannelParams& p, const Rational& eta, const RatePair& r) {
  const NashBounds nb = nash_bounds(p, eta);
  const Rational rates[2] = {r.x, r.y};
  for (int i = 0; i < 2; ++i) {
    if (rates[i] < nb.lower[i] || rates[i] > nb.upper[i]) return false;
  }
  LinearSystem sys = capacity_system(p);
  sys.add_eq(unit_vector(12, 10), r.x);
  sys.add_eq(unit_vector(12, 11), r.y);
  return is_feasible(sys);
}

Rational deviation_ceiling(const ChannelParams& p, int i, const Rational& r_jC,
                           const Rational& r_jR, const Rational& eta) {
  require_positive_eta(eta);
  if (r_jC.sign() < 0 || r_jR.sign() < 0) {
    throw std::invalid_argument("aggregate rates must be nonnegative");
  }
  return Rational(std::max(p.direct(i), p.cross(i))) - (r_jC + r_jR) + eta * Rational(2, 3);
}

bool verify_witness(const ChannelParams& p, const Rational& eta, const RatePair& r,
                    const SplitWitness& w) {
  if (!hk_system(p).satisfied_by(w.shifted.as_vector())) return false;
  const Rational sixth = eta / 6;
  const Rational rates[2] = {r.x, r.y};
  for (int i = 1; i <= 2; ++i) {
    const int u = i - 1;
    const int j = other_user(i) - 1;
    if (w.shifted.common_rate(i) != w.common[u] - sixth) return false;
    if (w.shifted.random_rate(i) != w.random[u] - sixth) return false;
    if (w.shifted.at(i, SplitPart::kP) != w.priv[u] - sixth) return false;
    const Rational lhs = w.common[u] + w.priv[u] + w.common[j] + w.random[j];
    if (lhs != Rational(std::max(p.direct(i), p.cross(i))) + eta * Rational(2, 3)) return false;
    if (w.common[u] + w.priv[u] - eta / 3 != rates[u]) return false;
  }
  return true;
}

std::optional<SplitWitness> ne_split_search(const ChannelParams& p, const Rational& eta,
                                            const RatePair& r) {
  LinearSystem sys = constructive_system(p, eta);
  sys.add_eq(unit_vector(kConstructiveDim, rate_column(1)), r.x);
  sys.add_eq(unit_vector(kConstructiveDim, rate_column(2)), r.y);
  const auto x = feasible_point(sys);
  if (!x) return std::nullopt;
  SplitWitness w;
  for (int i = 1; i <= 2; ++i) {
    for (int k = 0; k < 5; ++k) {
      w.shifted.parts[i - 1][k] = (*x)[hk_column(i, static_cast<SplitPart>(k))];
    }
    w.common[i - 1] = (*x)[aggregate_column(i, 0)];
    w.random[i - 1] = (*x)[aggregate_column(i, 1)];
    w.priv[i - 1] = (*x)[aggregate_column(i, 2)];
  }
  if (!verify_witness(p, eta, r, w)) {
    throw std::logic_error("LP returned a split that fails re-verification");
  }
  return w;
}

SchemeAggregates scheme_aggregates(const ChannelParams& p, const Scheme& s) {
  const int visible = p.cross(other_user(s.user));
  int fresh = 0;
  int random = 0;
  for (const auto& use : s.levels) {
    for (int m = 1; m <= std::min<int>(visible, static_cast<int>(use.size())); ++m) {
      fresh += use[m - 1].kind == AssignmentKind::kFresh;
      random += use[m - 1].kind == AssignmentKind::kCommonRandom;
    }
  }
  return {Rational(fresh, s.pattern_length), Rational(random, s.pattern_length)};
}

std::string DeviationClass::str() const {
  return "pattern_length<=" + std::to_string(max_pattern_length) +
         (allow_relay ? ", zero/fresh/relay(lag<=" + std::to_string(max_lag) + ")"
                      : ", zero/fresh");
}

std::int64_t class_size(const ChannelParams& p, int i, const DeviationClass& cls) {
  const std::int64_t a = static_cast<std::int64_t>(alphabet(p, i, cls).size());
  const int q = derive_q(p);
  const std::int64_t cap = cls.max_candidates + 1;
  std::int64_t total = 0;
  for (int len = 1; len <= cls.max_pattern_length; ++len) {
    std::int64_t count = 1;
    for (int d = 0; d < q * len && count < cap; ++d) count *= a;
    total = std::min(cap, total + std::min(count, cap));
  }
  return total;
}

OracleResult restricted_deviation_oracle(const ChannelParams& p, const Scheme& fixed,
                                         const DeviationClass& cls, const Rational& eta,
                                         const Rational& epsilon, std::uint64_t seed) {
  require_positive_eta(eta);
  require_epsilon(epsilon);
  require_valid(p, fixed);
  if (cls.max_pattern_length < 1) throw std::invalid_argument("max_pattern_length must be >= 1");
  const int i = other_user(fixed.user);
  const int q = derive_q(p);
  const std::int64_t size = class_size(p, i, cls);
  if (size > cls.max_candidates) {
    throw std::invalid_argument("deviation class has more than " +
                                std::to_string(cls.max_candidates) + " candidates");
  }

  OracleResult result;
  result.candidates = size;
  result.fixed_aggregates = scheme_aggregates(p, fixed);
  result.ceiling =
      deviation_ceiling(p, i, result.fixed_aggregates.common, result.fixed_aggregates.random, eta);

  const auto symbols = alphabet(p, i, cls);
  const std::int64_t a = static_cast<std::int64_t>(symbols.size());
  std::vector<Candidate> all;
  all.reserve(static_cast<std::size_t>(size));
  for (int len = 1; len <= cls.max_pattern_length; ++len) {
    std::int64_t count = 1;
    for (int d = 0; d < q * len; ++d) count *= a;
    for (std::int64_t code = 0; code < count; ++code) {
      int fresh = 0;
      for (std::int64_t c = code; c > 0; c /= a) fresh += c % a == 1;
      all.push_back({code, len, fresh});
    }
  }
  // Highest declared rate first; the first success is the maximum.
  std::stable_sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) {
    return x.fresh * y.pattern_length > y.fresh * x.pattern_length;
  });

  for (const Candidate& c : all) {
    const Rational declared(c.fresh, c.pattern_length);
    if (declared <= result.best) break;
    Scheme s;
    s.user = i;
    s.pattern_length = c.pattern_length;
    s.blocks = fixed.blocks;
    s.levels.assign(c.pattern_length, std::vector<LevelAssignment>(q));
    std::int64_t code = c.code;
    int next_fresh = 0;
    for (int u = 0; u < c.pattern_length; ++u) {
      for (int m = 1; m <= q; ++m) {
        LevelAssignment sym = symbols[code % a];
        code /= a;
        if (sym.kind == AssignmentKind::kFresh) sym.index = next_fresh++;
        s.levels[u][m - 1] = sym;
      }
    }
    s.declare_rates();
    ++result.synthesized;
    auto synth = synthesize_decoder(p, s, fixed);
    if (!synth.decoder) continue;
    s.decoder = std::move(*synth.decoder);

    const int block_bits = s.fresh_per_block() + s.random_per_block() +
                           fixed.fresh_per_block() + fixed.random_per_block();
    const bool exhaustive = block_bits <= kFullEnumerationBits;
    ++result.simulated;
    const SimulationReport report = i == 1
                                        ? run_and_verify(p, s, fixed, cls.trials, exhaustive, seed)
                                        : run_and_verify(p, fixed, s, cls.trials, exhaustive, seed);
    const Rational u = utility(report, i, epsilon);
    if (u > result.best) {
      result.best = u;
      result.best_scheme = s;
    }
  }
  return result;
}

}  // namespace nashld
