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

#include "nashld/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace nashld {

int check_user(int user) {
  if (user != 1 && user != 2) {
    throw std::invalid_argument("user index must be 1 or 2, got " +
                                std::to_string(user));
  }
  return user;
}

ChannelParams ChannelParams::without_feedback() const {
  ChannelParams p = *this;
  p.n_fb_11 = 0;
  p.n_fb_22 = 0;
  return p;
}

ChannelParams ChannelParams::with_perfect_feedback() const {
  ChannelParams p = *this;
  p.n_fb_11 = std::max(n_fwd_11, n_12);
  p.n_fb_22 = std::max(n_fwd_22, n_21);
  return p;
}

std::string ChannelParams::str() const {
  return "(" + std::to_string(n_fwd_11) + "," + std::to_string(n_fwd_22) + "," +
         std::to_string(n_12) + "," + std::to_string(n_21) + "," +
         std::to_string(n_fb_11) + "," + std::to_string(n_fb_22) + ")";
}

void validate_params(const ChannelParams& p) {
  for (int v : {p.n_fwd_11, p.n_fwd_22, p.n_12, p.n_21, p.n_fb_11, p.n_fb_22}) {
    if (v < 0) throw std::invalid_argument("channel parameters must be >= 0");
    if (v > kMaxLevels) {
      throw std::invalid_argument("channel parameters must be <= " +
                                  std::to_string(kMaxLevels));
    }
  }
}

int derive_q(const ChannelParams& p) {
  return std::max({p.n_fwd_11, p.n_fwd_22, p.n_12, p.n_21});
}

int feedback_exponent(const ChannelParams& p, int i) {
  return std::max(std::max(p.direct(i), p.cross(i)) - p.feedback(i), 0);
}

BitVector forward_output(const ChannelParams& p, const BitVector& x1,
                         const BitVector& x2, int i) {
  const int q = derive_q(p);
  if (x1.dim() != q || x2.dim() != q) {
    throw DimensionError("forward_output: inputs must have dimension q = " +
                         std::to_string(q));
  }
  const BitVector& own = check_user(i) == 1 ? x1 : x2;
  const BitVector& interferer = i == 1 ? x2 : x1;
  return shift_down(own, q - p.direct(i)) ^ shift_down(interferer, q - p.cross(i));
}

BitVector feedback_output(const ChannelParams& p, const BitVector& y_fwd, int i) {
  const int q = derive_q(p);
  if (y_fwd.dim() != q) {
    throw DimensionError("feedback_output: output must have dimension q = " +
                         std::to_string(q));
  }
  return shift_down(y_fwd, feedback_exponent(p, i));
}

Rational bit_error_probability(const Bits& sent, const Bits& decoded) {
  if (sent.size() != decoded.size()) {
    throw std::invalid_argument("bit_error_probability: length mismatch");
  }
  if (sent.empty()) {
    throw std::invalid_argument("bit_error_probability: empty message");
  }
  std::int64_t errors = 0;
  for (std::size_t k = 0; k < sent.size(); ++k) errors += (sent[k] != 0) != (decoded[k] != 0);
  return Rational(errors, static_cast<std::int64_t>(sent.size()));
}

SimTrace run_channel(const ChannelParams& p, Transmitter& t1, Transmitter& t2) {
  validate_params(p);
  const int q = derive_q(p);
  if (q == 0) throw std::invalid_argument("simulation needs q >= 1 (all-zero channel)");

  SimTrace trace;
  trace.params = p;
  trace.block_length[0] = t1.block_length();
  trace.block_length[1] = t2.block_length();
  const int length = std::max(trace.block_length[0], trace.block_length[1]);
  Transmitter* tx[2] = {&t1, &t2};
  for (int u = 0; u < 2; ++u) {
    trace.x[u].reserve(length);
    trace.y[u].reserve(length);
    trace.fb[u].reserve(length);
  }

  for (int n = 1; n <= length; ++n) {
    for (int u = 0; u < 2; ++u) {
      if (n > trace.block_length[u]) {
        trace.x[u].emplace_back(q);
        continue;
      }
      BitVector x = tx[u]->input(n, std::span<const BitVector>(trace.fb[u]));
      if (x.dim() != q) {
        throw DimensionError("encoder of user " + std::to_string(u + 1) +
                             " produced dimension " + std::to_string(x.dim()) +
                             ", expected " + std::to_string(q));
      }
      trace.x[u].push_back(x);
    }
    for (int u = 0; u < 2; ++u) {
      BitVector y = forward_output(p, trace.x[0].back(), trace.x[1].back(), u + 1);
      trace.fb[u].push_back(feedback_output(p, y, u + 1));
      trace.y[u].push_back(std::move(y));
    }
  }
  return trace;
}

}  // namespace nashld
