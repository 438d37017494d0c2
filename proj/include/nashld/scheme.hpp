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

// Deterministic bit-allocation schemes.
//
// A scheme repeats a pattern of P channel uses ("a block"). Each input level
// of each use in the pattern carries one of
//
//   zero            constant 0
//   fresh:k         message bit k of the current block
//   random:k        common-random bit k of the current block (known to the
//                   own receiver, not to the other pair)
//   relay:L:lag     the other user's part of feedback level L observed `lag`
//                   uses earlier (the transmitter strips its own known
//                   contribution from the feedback bit)
//
// The receiver recovers the fresh bits of block t with a GF(2) linear map
// over named columns:
//
//   y@o:u:m       receiver output level m at use u of block t+o
//   omega@o:k     own common-random bit k of block t+o
//   prev@o:k      already decoded fresh bit k of block t+o, o < 0
//
// A run sends T message blocks followed by L termination blocks, L being the
// largest positive offset the decoder reads. Termination blocks send zero on
// fresh levels; relays and common randomness keep running. Anything outside
// the run (before block 0 or after the last use) reads as zero.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nashld/channel.hpp"
#include "nashld/gf2.hpp"
#include "nashld/rational.hpp"

namespace nashld {

enum class AssignmentKind { kZero, kFresh, kRelay, kCommonRandom };

struct LevelAssignment {
  AssignmentKind kind = AssignmentKind::kZero;
  int index = 0;           // fresh / random position within the block
  int feedback_level = 0;  // relay only
  int lag = 0;             // relay only, in channel uses

  static LevelAssignment zero() { return {}; }
  static LevelAssignment fresh(int k) { return {AssignmentKind::kFresh, k, 0, 0}; }
  static LevelAssignment random(int k) {
    return {AssignmentKind::kCommonRandom, k, 0, 0};
  }
  static LevelAssignment relay(int level, int lag) {
    return {AssignmentKind::kRelay, 0, level, lag};
  }

  std::string str() const;
  // Throws std::invalid_argument.
  static LevelAssignment parse(std::string_view text);

  friend bool operator==(const LevelAssignment&, const LevelAssignment&) = default;
};

struct DecoderColumn {
  enum class Kind { kObservation, kOmega, kDecoded };
  Kind kind = Kind::kObservation;
  int block_offset = 0;
  int use = 0;    // observation only
  int level = 0;  // observation only, 1-based
  int index = 0;  // omega / decoded

  std::string str() const;
  // Throws std::invalid_argument.
  static DecoderColumn parse(std::string_view text);

  friend bool operator==(const DecoderColumn&, const DecoderColumn&) = default;
  friend auto operator<=>(const DecoderColumn&, const DecoderColumn&) = default;
};

struct Decoder {
  std::vector<DecoderColumn> columns;
  // rows[k] selects the columns that XOR to fresh bit k.
  std::vector<DynamicBits> rows;

  // Largest positive block offset read by any used column.
  int lookahead() const;
};

struct Scheme {
  int user = 1;
  int pattern_length = 1;
  int blocks = 3;
  // levels[u][m - 1] is the assignment of input level m at use u.
  std::vector<std::vector<LevelAssignment>> levels;
  Decoder decoder;
  Rational fresh_rate;
  Rational random_rate;

  int fresh_per_block() const;
  int random_per_block() const;
  int termination_blocks() const { return decoder.lookahead(); }
  int total_blocks() const { return blocks + termination_blocks(); }
  int block_length() const { return pattern_length * total_blocks(); }
  int message_bits() const { return fresh_per_block() * blocks; }
  int random_bits() const { return random_per_block() * total_blocks(); }

  // Sets fresh_rate and random_rate from the assignment counts.
  void declare_rates();
};

// Structural problems of `s` on channel `p`; empty means valid.
std::vector<std::string> validate_scheme(const ChannelParams& p, const Scheme& s);

// Throws std::invalid_argument listing the violations, if any.
void require_valid(const ChannelParams& p, const Scheme& s);

// Fresh bits per channel use.
Rational achieved_rate(const Scheme& s);

// (n_ii - n_ij)^+ fresh bits per use on the interference-free top levels.
Scheme floor_scheme(const ChannelParams& p, int i, int blocks = 3);

// Sends nothing.
Scheme zero_scheme(const ChannelParams& p, int i, int blocks = 3);

struct SynthesisResult {
  std::optional<Decoder> decoder;
  // Fresh positions that no linear map within the window can recover.
  std::vector<int> undecodable;
};

// Finds a decoder for `own` (its levels; its decoder is ignored) while the
// other user runs `other`, by GF(2) elimination over a symbolic steady-state
// run. Tries lookahead 0..max_lookahead and keeps the first that works.
SynthesisResult synthesize_decoder(const ChannelParams& p, const Scheme& own,
                                   const Scheme& other, int max_lookahead = 3);

// `own` with a synthesized decoder and declared rates. Throws
// std::invalid_argument when some fresh bit is not decodable.
Scheme with_synthesized_decoder(const ChannelParams& p, Scheme own,
                                const Scheme& other);

// Built-in pairs for the channel (7,6,4,4,5,n_fb_22). Both relay user 2's
// top two bits through user 1's feedback.
//   policed_pair:     rates (3,4); user 2 puts common randomness on the
//                     levels that would otherwise be free at receiver 1.
//   cooperative_pair: rates (5,4); no common randomness.
std::pair<Scheme, Scheme> policed_pair(const ChannelParams& p);
std::pair<Scheme, Scheme> cooperative_pair(const ChannelParams& p);

// Input the encoder emits at channel use n (1-based) given its message,
// common randomness and the feedback of uses 1..n-1. `own_inputs` holds its
// inputs at uses 1..n-1.
BitVector encode_use(const ChannelParams& p, const Scheme& s, int n,
                     const Bits& message, const Bits& omega,
                     std::span<const BitVector> feedback,
                     std::span<const BitVector> own_inputs);

// Applies the decoder to the receiver's outputs.
Bits decode(const ChannelParams& p, const Scheme& s,
            std::span<const BitVector> outputs, const Bits& omega);

// Runs both schemes over the channel, decodes, and records everything.
// Throws std::invalid_argument on invalid schemes or length mismatches.
SimTrace simulate(const ChannelParams& p, const Scheme& s1, const Scheme& s2,
                  const Bits& w1, const Bits& w2, const Bits& omega1,
                  const Bits& omega2);

}  // namespace nashld
