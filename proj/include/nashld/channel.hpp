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

// Two-user linear deterministic interference channel with noisy output
// feedback. Receiver i sees
//
//   Y_i = S^(q - n_ii) X_i + S^(q - n_ij) X_j
//
// and transmitter i observes S^((max(n_ii, n_ij) - nfb_ii)^+) Y_i one channel
// use later.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nashld/gf2.hpp"
#include "nashld/rational.hpp"

namespace nashld {

using Bits = std::vector<std::uint8_t>;

// Throws std::invalid_argument unless user is 1 or 2.
int check_user(int user);
inline int other_user(int user) { return 3 - check_user(user); }

struct ChannelParams {
  int n_fwd_11 = 0;
  int n_fwd_22 = 0;
  int n_12 = 0;  // transmitter 2 -> receiver 1
  int n_21 = 0;  // transmitter 1 -> receiver 2
  int n_fb_11 = 0;
  int n_fb_22 = 0;

  int direct(int i) const { return check_user(i) == 1 ? n_fwd_11 : n_fwd_22; }
  // Bit-pipes from the other transmitter into receiver i.
  int cross(int i) const { return check_user(i) == 1 ? n_12 : n_21; }
  int feedback(int i) const { return check_user(i) == 1 ? n_fb_11 : n_fb_22; }

  ChannelParams without_feedback() const;
  // n_fb_ii = max(n_ii, n_ij), the smallest value at which feedback is exact.
  ChannelParams with_perfect_feedback() const;

  std::string str() const;

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
  friend auto operator<=>(const ChannelParams&, const ChannelParams&) = default;
};

// Throws std::invalid_argument for negative counts or counts above kMaxLevels.
void validate_params(const ChannelParams& p);

int derive_q(const ChannelParams& p);

// Exponent of S applied to Y_i before it reaches transmitter i.
int feedback_exponent(const ChannelParams& p, int i);

BitVector forward_output(const ChannelParams& p, const BitVector& x1,
                         const BitVector& x2, int i);

// Feedback observed by transmitter i for forward output y_fwd. The unit
// delay is the caller's business.
BitVector feedback_output(const ChannelParams& p, const BitVector& y_fwd, int i);

// Fraction of mismatched positions. Throws on length mismatch or empty input.
Rational bit_error_probability(const Bits& sent, const Bits& decoded);

// Source of channel inputs for one transmitter during a run.
class Transmitter {
 public:
  virtual ~Transmitter() = default;
  // N_i; inputs after this use are all-zero.
  virtual int block_length() const = 0;
  // Input for channel use n (1-based). `feedback` holds the feedback
  // outputs of uses 1..n-1.
  virtual BitVector input(int n, std::span<const BitVector> feedback) = 0;
};

struct SimTrace {
  ChannelParams params;
  int block_length[2] = {0, 0};
  // Indexed [user - 1][use - 1].
  std::vector<BitVector> x[2];
  std::vector<BitVector> y[2];
  std::vector<BitVector> fb[2];
  Bits message[2];
  Bits decoded[2];

  int length() const { return static_cast<int>(x[0].size()); }
};

// Runs max(N_1, N_2) channel uses. Does not touch message/decoded fields.
// Throws DimensionError if a transmitter emits a vector of dimension != q,
// std::invalid_argument when q == 0.
SimTrace run_channel(const ChannelParams& p, Transmitter& t1, Transmitter& t2);

}  // namespace nashld
