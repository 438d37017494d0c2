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

#include "nashld/regions.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace nashld {
namespace {

int pos(int v) { return std::max(v, 0); }

// Row with coefficient 1 on each listed column.
std::vector<Rational> ones(int dim, std::initializer_list<int> cols) {
  std::vector<Rational> a(dim);
  for (int c : cols) a.at(c) += 1;
  return a;
}

void add_hk_rows(LinearSystem& sys, const ChannelParams& p) {
  const int dim = sys.dimension;
  for (int k = 0; k < 10; ++k) sys.add_nonnegative(k);
  for (int i = 1; i <= 2; ++i) {
    const int j = other_user(i);
    const ThetaBounds t = theta(p, i);
    const int iC1 = hk_column(i, SplitPart::kC1);
    const int iC2 = hk_column(i, SplitPart::kC2);
    const int iP = hk_column(i, SplitPart::kP);
    const int jC1 = hk_column(j, SplitPart::kC1);
    const int jR1 = hk_column(j, SplitPart::kR1);
    const int jC2 = hk_column(j, SplitPart::kC2);
    const int jR2 = hk_column(j, SplitPart::kR2);
    sys.add_le(ones(dim, {jC1, jR1}), t.at(1));
    sys.add_le(ones(dim, {iC1, iC2, iP, jC1, jC2, jR1, jR2}), t.at(2));
    sys.add_le(ones(dim, {jC2, jR2}), t.at(3));
    sys.add_le(ones(dim, {iP}), t.at(4));
    sys.add_le(ones(dim, {iP, jC2, jR2}), t.at(5));
    sys.add_le(ones(dim, {iC2, iP}), t.at(6));
    sys.add_le(ones(dim, {iC2, iP, jC2, jR2}), t.at(7));
  }
}

// Conjoins 0 <= R_i <= theta_{2,i}, which every region here satisfies, so
// that vertex enumeration sees a bounded system.
void add_rate_box(LinearSystem& sys, const ChannelParams& p) {
  for (int i = 1; i <= 2; ++i) {
    sys.add_nonnegative(i - 1);
    sys.add_le(unit_vector(2, i - 1), theta(p, i).at(2));
  }
}

}  // namespace

void require_positive_eta(const Rational& eta) {
  if (eta.sign() <= 0) throw std::invalid_argument("eta must be positive");
}

ThetaBounds theta(const ChannelParams& p, int i) {
  validate_params(p);
  const int j = other_user(i);
  const int n_ii = p.direct(i);
  const int n_jj = p.direct(j);
  const int n_ij = p.cross(i);
  const int n_ji = p.cross(j);
  const int hidden_i = pos(std::max(n_ii, n_ij) - p.feedback(i));
  const int hidden_j = pos(std::max(n_jj, n_ji) - p.feedback(j));

  ThetaBounds t;
  t.user = i;
  t.theta[0] = pos(n_ij - hidden_i);
  t.theta[1] = std::max(n_ii, n_ij);
  t.theta[2] = std::min(n_ij, hidden_i);
  t.theta[3] = pos(n_ii - n_ji);
  t.theta[4] = std::max(pos(n_ii - n_ji), std::min(n_ij, hidden_i));
  t.theta[5] = std::min(n_ji, hidden_j) - std::min(pos(n_ji - n_ii), hidden_j) + pos(n_ii - n_ji);
  t.theta[6] = std::max(std::min(n_ij, hidden_i), t.theta[5]);
  return t;
}

LinearSystem hk_system(const ChannelParams& p) {
  LinearSystem sys(10);
  add_hk_rows(sys, p);
  return sys;
}

LinearSystem capacity_system(const ChannelParams& p) {
  LinearSystem sys(12);
  add_hk_rows(sys, p);
  for (int i = 1; i <= 2; ++i) {
    sys.add_eq(unit_vector(12, hk_column(i, SplitPart::kR1)), 0);
    sys.add_eq(unit_vector(12, hk_column(i, SplitPart::kR2)), 0);
    auto a = ones(12, {hk_column(i, SplitPart::kC1), hk_column(i, SplitPart::kC2),
                       hk_column(i, SplitPart::kP)});
    a[9 + i] = -1;
    sys.add_eq(std::move(a), 0);
  }
  return sys;
}

Region2 capacity_region(const ChannelParams& p) {
  // The system depends on p only through both theta vectors, which many
  // parameter tuples share; sweeps hit this cache most of the time.
  static std::mutex mu;
  static std::map<std::array<int, 14>, Region2> cache;
  std::array<int, 14> key{};
  for (int i = 1; i <= 2; ++i) {
    const ThetaBounds t = theta(p, i);
    std::copy(t.theta.begin(), t.theta.end(), key.begin() + 7 * (i - 1));
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  LinearSystem rates = project(capacity_system(p), {10, 11});
  add_rate_box(rates, p);
  Region2 r = vertices2(rates);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, r);
  return r;
}

NashBounds nash_bounds(const ChannelParams& p, const Rational& eta) {
  require_positive_eta(eta);
  validate_params(p);
  NashBounds nb;
  nb.eta = eta;
  for (int i = 1; i <= 2; ++i) {
    const int j = other_user(i);
    const int n_ii = p.direct(i);
    const int n_jj = p.direct(j);
    const int n_ij = p.cross(i);
    const int n_ji = p.cross(j);
    nb.lower[i - 1] = positive_part(Rational(pos(n_ii - n_ij)) - eta);
    const int inner = pos(std::min(pos(n_jj - n_ij), n_ji) - pos(std::max(n_jj, n_ji) - p.feedback(j)));
    const int loss = pos(std::min(pos(n_jj - n_ji), n_ij) - inner);
    nb.upper[i - 1] = Rational(std::max(n_ii, n_ij) - loss) + eta;
  }
  return nb;
}

Region2 box_region(const ChannelParams& p, const Rational& eta) {
  const NashBounds nb = nash_bounds(p, eta);
  if (nb.upper[0] < nb.lower[0] || nb.upper[1] < nb.lower[1]) return Region2();
  LinearSystem sys(2);
  for (int i = 0; i < 2; ++i) {
    sys.add_ge(unit_vector(2, i), nb.lower[i]);
    sys.add_le(unit_vector(2, i), nb.upper[i]);
  }
  return vertices2(sys);
}

Region2 ne_region(const ChannelParams& p, const Rational& eta) {
  return intersect(capacity_region(p), box_region(p, eta));
}

LinearSystem constructive_system(const ChannelParams& p, const Rational& eta) {
  require_positive_eta(eta);
  const int dim = kConstructiveDim;
  const Rational sixth = eta / 6;
  LinearSystem sys(dim);
  add_hk_rows(sys, p);
  for (int i = 1; i <= 2; ++i) {
    const int j = other_user(i);
    // Split columns describe the shifted tuple (aggregate - eta/6).
    auto c = ones(dim, {hk_column(i, SplitPart::kC1), hk_column(i, SplitPart::kC2)});
    c[aggregate_column(i, 0)] = -1;
    sys.add_eq(std::move(c), -sixth);
    auto r = ones(dim, {hk_column(i, SplitPart::kR1), hk_column(i, SplitPart::kR2)});
    r[aggregate_column(i, 1)] = -1;
    sys.add_eq(std::move(r), -sixth);
    auto pp = ones(dim, {hk_column(i, SplitPart::kP)});
    pp[aggregate_column(i, 2)] = -1;
    sys.add_eq(std::move(pp), -sixth);

    sys.add_eq(ones(dim, {aggregate_column(i, 0), aggregate_column(i, 2), aggregate_column(j, 0),
                          aggregate_column(j, 1)}),
               Rational(std::max(p.direct(i), p.cross(i))) + eta * Rational(2, 3));

    auto rate = ones(dim, {aggregate_column(i, 0), aggregate_column(i, 2)});
    rate[rate_column(i)] = -1;
    sys.add_eq(std::move(rate), eta / 3);
  }
  return sys;
}

Region2 ne_region_constructive(const ChannelParams& p, const Rational& eta) {
  LinearSystem rates = project(constructive_system(p, eta), {rate_column(1), rate_column(2)});
  if (rates.trivially_infeasible()) return Region2();
  add_rate_box(rates, p);
  return vertices2(rates);
}

std::vector<ChannelParams> figure2_family() {
  std::vector<ChannelParams> out;
  for (int fb11 = 0; fb11 <= 7; ++fb11) {
    for (int fb22 = 0; fb22 <= 6; ++fb22) out.push_back({7, 6, 4, 4, fb11, fb22});
  }
  return out;
}

InclusionReport inclusion_report(const ChannelParams& p, const Rational& eta) {
  InclusionReport r;
  r.no_feedback = ne_region(p.without_feedback(), eta);
  r.given = ne_region(p, eta);
  r.perfect_feedback = ne_region(p.with_perfect_feedback(), eta);
  r.lower_holds = contains(r.given, r.no_feedback);
  r.upper_holds = contains(r.perfect_feedback, r.given);
  return r;
}

bool inclusion_chain_check(const ChannelParams& p, const Rational& eta) {
  return inclusion_report(p, eta).holds();
}

}  // namespace nashld
