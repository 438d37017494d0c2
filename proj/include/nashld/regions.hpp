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

// Rate regions of the channel: the achievable region C of the randomized
// Han-Kobayashi scheme with zero random rates, the box B_eta and the
// eta-Nash region N_eta = C n B_eta.

#pragma once

#include <array>
#include <vector>

#include "nashld/channel.hpp"
#include "nashld/linear_system.hpp"
#include "nashld/polytope.hpp"
#include "nashld/rational.hpp"

namespace nashld {

struct ThetaBounds {
  int user = 1;
  // theta[k - 1] is theta_{k,i}.
  std::array<int, 7> theta{};

  int at(int k) const { return theta.at(k - 1); }
};

ThetaBounds theta(const ChannelParams& p, int i);

using RatePair = Point2;

struct NashBounds {
  Rational lower[2];
  Rational upper[2];
  Rational eta;
};

// Column of each split component in hk_system: user i in {1, 2} occupies
// columns 5(i-1) .. 5(i-1)+4.
enum class SplitPart { kC1 = 0, kR1 = 1, kC2 = 2, kR2 = 3, kP = 4 };
inline int hk_column(int user, SplitPart part) {
  return 5 * (check_user(user) - 1) + static_cast<int>(part);
}

// The ten-variable achievable-rate system: nonnegativity plus seven
// theta rows per user.
LinearSystem hk_system(const ChannelParams& p);

// hk_system with all random rates fixed to zero and two more columns
// R_1, R_2 (10 and 11) tied to C1 + C2 + P of each user.
LinearSystem capacity_system(const ChannelParams& p);

// Projection of capacity_system onto (R_1, R_2).
Region2 capacity_region(const ChannelParams& p);

// Throws std::invalid_argument unless eta > 0.
NashBounds nash_bounds(const ChannelParams& p, const Rational& eta);
Region2 box_region(const ChannelParams& p, const Rational& eta);
Region2 ne_region(const ChannelParams& p, const Rational& eta);

// The eta/6-shifted aggregate system with both equilibrium equalities,
// projected onto (R_1, R_2). Variable layout in constructive_system.
LinearSystem constructive_system(const ChannelParams& p, const Rational& eta);
Region2 ne_region_constructive(const ChannelParams& p, const Rational& eta);

// Column layout of constructive_system: the ten split columns of hk_system
// (describing the shifted tuple), then per user the aggregates R_C, R_R,
// R_P at 10 + 3(i-1) + {0,1,2}, then R_1, R_2 at 16, 17.
inline constexpr int kConstructiveDim = 18;
inline int aggregate_column(int user, int k) { return 10 + 3 * (check_user(user) - 1) + k; }
inline int rate_column(int user) { return 15 + check_user(user); }

struct InclusionReport {
  Region2 no_feedback;
  Region2 given;
  Region2 perfect_feedback;
  bool lower_holds = false;
  bool upper_holds = false;

  bool holds() const { return lower_holds && upper_holds; }
};

// (7,6,4,4,n_fb_11,n_fb_22) for n_fb_11 in 0..7 and n_fb_22 in 0..6, in
// lexicographic order.
std::vector<ChannelParams> figure2_family();

InclusionReport inclusion_report(const ChannelParams& p, const Rational& eta);
bool inclusion_chain_check(const ChannelParams& p, const Rational& eta);

// Throws std::invalid_argument("eta must be positive") unless eta > 0.
void require_positive_eta(const Rational& eta);

}  // namespace nashld
