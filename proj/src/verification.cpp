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

#include "nashld/verification.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace nashld {
namespace {

// The four bit strings a run consumes, in a fixed order.
struct RunBits {
  Bits w[2];
  Bits omega[2];

  std::vector<Bits*> all() { return {&w[0], &w[1], &omega[0], &omega[1]}; }
};

RunBits sized_bits(const Scheme& s1, const Scheme& s2) {
  RunBits b;
  b.w[0].assign(s1.message_bits(), 0);
  b.w[1].assign(s2.message_bits(), 0);
  b.omega[0].assign(s1.random_bits(), 0);
  b.omega[1].assign(s2.random_bits(), 0);
  return b;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::int64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(trial) >> 32)};
  return std::mt19937_64(seq);
}

void fill_random(RunBits& b, std::mt19937_64& rng) {
  for (Bits* bits : b.all()) {
    for (auto& x : *bits) x = static_cast<std::uint8_t>(rng() & 1U);
  }
}

// Positions (string, index) of the bits that belong to block `block`.
std::vector<std::pair<Bits*, std::size_t>> block_positions(RunBits& b, const Scheme* s[2],
                                                           int block) {
  std::vector<std::pair<Bits*, std::size_t>> out;
  for (int u = 0; u < 2; ++u) {
    const int f = s[u]->fresh_per_block();
    const int r = s[u]->random_per_block();
    if (block < s[u]->blocks) {
      for (int k = 0; k < f; ++k) out.emplace_back(&b.w[u], static_cast<std::size_t>(block) * f + k);
    }
    if (block < s[u]->total_blocks()) {
      for (int k = 0; k < r; ++k) {
        out.emplace_back(&b.omega[u], static_cast<std::size_t>(block) * r + k);
      }
    }
  }
  return out;
}

class Tally {
 public:
  Tally(const ChannelParams& p, const Scheme& s1, const Scheme& s2)
      : p_(p), s1_(s1), s2_(s2) {}

  void run(RunBits& b) {
    SimTrace trace = simulate(p_, s1_, s2_, b.w[0], b.w[1], b.omega[0], b.omega[1]);
    bool failed = false;
    for (int u = 0; u < 2; ++u) {
      for (std::size_t k = 0; k < b.w[u].size(); ++k) {
        if (trace.decoded[u][k] != b.w[u][k]) {
          ++errors_[u];
          failed = true;
        }
      }
      bits_[u] += static_cast<std::int64_t>(b.w[u].size());
    }
    ++trials_;
    if (failed && !counterexample_) counterexample_ = std::move(trace);
  }

  SimulationReport report(TrialMode mode) {
    SimulationReport r;
    r.trials = trials_;
    r.mode = mode;
    const Scheme* s[2] = {&s1_, &s2_};
    const int length = std::max(s1_.block_length(), s2_.block_length());
    for (int u = 0; u < 2; ++u) {
      r.rate[u] = achieved_rate(*s[u]);
      r.finite_rate[u] = Rational(s[u]->message_bits(), length);
      r.error_probability[u] = bits_[u] == 0 ? Rational(0) : Rational(errors_[u], bits_[u]);
    }
    r.zero_error = !counterexample_.has_value();
    r.counterexample = std::move(counterexample_);
    return r;
  }

 private:
  const ChannelParams& p_;
  const Scheme& s1_;
  const Scheme& s2_;
  std::int64_t trials_ = 0;
  std::int64_t errors_[2] = {0, 0};
  std::int64_t bits_[2] = {0, 0};
  std::optional<SimTrace> counterexample_;
};

}  // namespace

std::string to_string(TrialMode mode) {
  switch (mode) {
    case TrialMode::kFull:
      return "full";
    case TrialMode::kPerBlock:
      return "per-block";
    case TrialMode::kRandom:
      return "random";
  }
  return "random";
}

SimulationReport run_and_verify(const ChannelParams& p, const Scheme& s1, const Scheme& s2,
                                std::int64_t trials, bool exhaustive, std::uint64_t seed) {
  require_valid(p, s1);
  require_valid(p, s2);
  if (s1.user != 1 || s2.user != 2) {
    throw std::invalid_argument("run_and_verify expects schemes for users 1 and 2, in order");
  }
  if (s1.blocks < 3 || s2.blocks < 3) {
    throw std::invalid_argument("verification needs at least 3 blocks per scheme");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  Tally tally(p, s1, s2);
  RunBits bits = sized_bits(s1, s2);
  std::size_t total = 0;
  for (Bits* b : bits.all()) total += b->size();

  if (total <= static_cast<std::size_t>(kFullEnumerationBits)) {
    const std::uint64_t count = std::uint64_t{1} << total;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::size_t pos = 0;
      for (Bits* b : bits.all()) {
        for (auto& x : *b) x = static_cast<std::uint8_t>((v >> pos++) & 1U);
      }
      tally.run(bits);
    }
    return tally.report(TrialMode::kFull);
  }

  if (exhaustive) {
    const Scheme* s[2] = {&s1, &s2};
    const int blocks = std::max(s1.total_blocks(), s2.total_blocks());
    std::int64_t trial = 0;
    for (int block = 0; block < blocks; ++block) {
      auto positions = block_positions(bits, s, block);
      if (positions.size() > static_cast<std::size_t>(kFullEnumerationBits)) {
        throw std::invalid_argument("one block carries " + std::to_string(positions.size()) +
                                    " bits; per-block enumeration is capped at " +
                                    std::to_string(kFullEnumerationBits));
      }
      const std::uint64_t count = std::uint64_t{1} << positions.size();
      for (std::uint64_t v = 0; v < count; ++v) {
        auto rng = trial_rng(seed, trial++);
        fill_random(bits, rng);
        for (std::size_t k = 0; k < positions.size(); ++k) {
          (*positions[k].first)[positions[k].second] = static_cast<std::uint8_t>((v >> k) & 1U);
        }
        tally.run(bits);
      }
    }
    return tally.report(TrialMode::kPerBlock);
  }

  for (std::int64_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    fill_random(bits, rng);
    tally.run(bits);
  }
  return tally.report(TrialMode::kRandom);
}

}  // namespace nashld
