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

#include <cstdint>
#include <optional>
#include <string>

#include "nashld/channel.hpp"
#include "nashld/rational.hpp"
#include "nashld/scheme.hpp"

namespace nashld {

enum class TrialMode { kFull, kPerBlock, kRandom };

std::string to_string(TrialMode mode);

struct SimulationReport {
  // Steady-state fresh bits per use.
  Rational rate[2];
  // Message bits over channel uses of the whole run, termination included.
  Rational finite_rate[2];
  // Errors over all decoded bits of all trials; 0 when a user sends nothing.
  Rational error_probability[2];
  std::int64_t trials = 0;
  TrialMode mode = TrialMode::kRandom;
  bool zero_error = true;
  std::optional<SimTrace> counterexample;
};

// Up to this many message plus randomness bits the run enumerates every
// realization, whatever `exhaustive` says.
inline constexpr int kFullEnumerationBits = 20;

// Runs the pair and checks the decoded bits.
//
// Full enumeration is used when all message and randomness bits of the run
// fit in kFullEnumerationBits. Otherwise, with `exhaustive`, every bit
// pattern of each single block (both users' fresh and random bits) is tried
// with the other blocks drawn at random; without it, `trials` random runs.
// Trial k draws from a generator seeded with (seed, k).
// Throws std::invalid_argument for invalid schemes, fewer than 3 blocks or
// trials < 1.
SimulationReport run_and_verify(const ChannelParams& p, const Scheme& s1,
                                const Scheme& s2, std::int64_t trials,
                                bool exhaustive, std::uint64_t seed = 1);

}  // namespace nashld
