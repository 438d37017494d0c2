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

#include "nashld/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nashld/lp.hpp"

namespace nashld {
namespace {

std::vector<Rational> without(const std::vector<Rational>& a, int var) {
  std::vector<Rational> out;
  out.reserve(a.size() - 1);
  for (int k = 0; k < static_cast<int>(a.size()); ++k) {
    if (k != var) out.push_back(a[k]);
  }
  return out;
}

// a + f * b
std::vector<Rational> axpy(const std::vector<Rational>& a, const Rational& f,
                           const std::vector<Rational>& b) {
  std::vector<Rational> out = a;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!b[k].is_zero()) out[k] += f * b[k];
  }
  return out;
}

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 &&
             cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return hull;
}

bool satisfies(const LinearSystem& h, const Point2& p) {
  return h.satisfied_by({p.x, p.y});
}

}  // namespace

LinearSystem normalize(const LinearSystem& sys) {
  std::map<std::vector<Rational>, Rational> le;
  std::map<std::vector<Rational>, Rational> eq;
  for (const auto& row : sys.rows) {
    if (row.is_trivial()) {
      const bool violated = row.rel == Relation::kEqual ? !row.b.is_zero() : row.b.sign() < 0;
      if (violated) return LinearSystem::infeasible(sys.dimension);
      continue;
    }
    const auto lead = std::find_if(row.a.begin(), row.a.end(),
                                   [](const Rational& c) { return !c.is_zero(); });
    const Rational scale = row.rel == Relation::kEqual ? Rational(1) / *lead
                                                       : Rational(1) / abs(*lead);
    std::vector<Rational> a = row.a;
    for (auto& c : a) {
      if (!c.is_zero()) c *= scale;
    }
    const Rational b = row.b * scale;
    if (row.rel == Relation::kEqual) {
      const auto [it, inserted] = eq.emplace(std::move(a), b);
      if (!inserted && it->second != b) return LinearSystem::infeasible(sys.dimension);
    } else {
      const auto [it, inserted] = le.emplace(std::move(a), b);
      if (!inserted && b < it->second) it->second = b;
    }
  }
  LinearSystem out(sys.dimension);
  for (auto& [a, b] : eq) out.add_eq(a, b);
  for (auto& [a, b] : le) out.add_le(a, b);
  return out;
}

LinearSystem fm_eliminate(const LinearSystem& sys, int var) {
  if (var < 0 || var >= sys.dimension) throw std::invalid_argument("no such variable");
  const int dim = sys.dimension - 1;
  LinearSystem out(dim);

  const auto pivot = std::find_if(sys.rows.begin(), sys.rows.end(), [&](const Constraint& r) {
    return r.rel == Relation::kEqual && !r.a[var].is_zero();
  });
  if (pivot != sys.rows.end()) {
    for (auto it = sys.rows.begin(); it != sys.rows.end(); ++it) {
      if (it == pivot) continue;
      Constraint r = *it;
      if (!r.a[var].is_zero()) {
        const Rational f = -r.a[var] / pivot->a[var];
        r.a = axpy(r.a, f, pivot->a);
        r.b += f * pivot->b;
      }
      out.rows.push_back({without(r.a, var), r.b, r.rel});
    }
    return normalize(out);
  }

  std::vector<const Constraint*> pos;
  std::vector<const Constraint*> neg;
  for (const auto& r : sys.rows) {
    const int s = r.a[var].sign();
    if (s == 0) {
      out.rows.push_back({without(r.a, var), r.b, r.rel});
    } else {
      (s > 0 ? pos : neg).push_back(&r);
    }
  }
  for (const Constraint* p : pos) {
    for (const Constraint* n : neg) {
      // p / p_var + n / |n_var| cancels x_var.
      const Rational fp = Rational(1) / p->a[var];
      const Rational fn = Rational(1) / -n->a[var];
      std::vector<Rational> a(sys.dimension);
      for (int k = 0; k < sys.dimension; ++k) a[k] = fp * p->a[k] + fn * n->a[k];
      out.add_le(without(a, var), fp * p->b + fn * n->b);
    }
  }
  return normalize(out);
}

LinearSystem prune(const LinearSystem& sys) {
  LinearSystem n = normalize(sys);
  if (n.trivially_infeasible()) return n;
  if (!is_feasible(n)) return LinearSystem::infeasible(sys.dimension);

  std::vector<bool> keep(n.rows.size(), true);
  for (std::size_t k = 0; k < n.rows.size(); ++k) {
    if (n.rows[k].rel == Relation::kEqual) continue;
    LinearSystem rest(n.dimension);
    for (std::size_t r = 0; r < n.rows.size(); ++r) {
      if (r != k && keep[r]) rest.rows.push_back(n.rows[r]);
    }
    const LpResult lp = maximize(rest, n.rows[k].a);
    if (lp.status == LpStatus::kOptimal && lp.value <= n.rows[k].b) keep[k] = false;
  }
  LinearSystem out(n.dimension);
  for (std::size_t r = 0; r < n.rows.size(); ++r) {
    if (keep[r]) out.rows.push_back(n.rows[r]);
  }
  return out;
}

LinearSystem project(const LinearSystem& sys, const std::vector<int>& keep) {
  std::set<int> kept(keep.begin(), keep.end());
  if (kept.size() != keep.size()) throw std::invalid_argument("duplicate variable in keep");
  for (int k : keep) {
    if (k < 0 || k >= sys.dimension) throw std::invalid_argument("no such variable");
  }

  std::vector<int> vars(sys.dimension);
  for (int k = 0; k < sys.dimension; ++k) vars[k] = k;
  LinearSystem cur = prune(sys);
  while (vars.size() > keep.size()) {
    int best = -1;
    long best_cost = 0;
    for (int c = 0; c < static_cast<int>(vars.size()); ++c) {
      if (kept.count(vars[c])) continue;
      long pos = 0;
      long neg = 0;
      bool substitutable = false;
      for (const auto& r : cur.rows) {
        const int s = r.a[c].sign();
        if (s != 0 && r.rel == Relation::kEqual) substitutable = true;
        pos += s > 0;
        neg += s < 0;
      }
      const long cost = substitutable ? -1 : pos * neg;
      if (best < 0 || cost < best_cost) {
        best = c;
        best_cost = cost;
      }
    }
    cur = prune(fm_eliminate(cur, best));
    vars.erase(vars.begin() + best);
  }

  LinearSystem out(static_cast<int>(keep.size()));
  for (const auto& r : cur.rows) {
    std::vector<Rational> a(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) {
      const auto it = std::find(vars.begin(), vars.end(), keep[t]);
      a[t] = r.a[it - vars.begin()];
    }
    out.rows.push_back({std::move(a), r.b, r.rel});
  }
  return normalize(out);
}

Region2::Region2() : h_(LinearSystem::infeasible(2)) {}

Rational Region2::twice_area() const {
  Rational area;
  for (std::size_t k = 0; k < v_.size(); ++k) {
    const Point2& p = v_[k];
    const Point2& q = v_[(k + 1) % v_.size()];
    area += p.x * q.y - q.x * p.y;
  }
  return area;
}

Region2 vertices2(const LinearSystem& sys) {
  if (sys.dimension != 2) throw std::invalid_argument("vertices2 needs a 2-variable system");
  LinearSystem ineq(2);
  for (const auto& r : sys.rows) {
    ineq.add_le(r.a, r.b);
    if (r.rel == Relation::kEqual) ineq.add_ge(r.a, r.b);
  }
  Region2 region;
  LinearSystem h = prune(ineq);
  if (h.trivially_infeasible()) return region;

  for (const auto& c : {std::vector<Rational>{1, 0}, std::vector<Rational>{-1, 0},
                        std::vector<Rational>{0, 1}, std::vector<Rational>{0, -1}}) {
    if (maximize(h, c).status == LpStatus::kUnbounded) {
      throw std::invalid_argument("region is unbounded");
    }
  }

  std::vector<Point2> candidates;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < h.rows.size(); ++j) {
      const auto& r = h.rows[i];
      const auto& s = h.rows[j];
      const Rational det = r.a[0] * s.a[1] - r.a[1] * s.a[0];
      if (det.is_zero()) continue;
      Point2 p{(r.b * s.a[1] - s.b * r.a[1]) / det, (r.a[0] * s.b - s.a[0] * r.b) / det};
      if (satisfies(h, p)) candidates.push_back(std::move(p));
    }
  }
  std::vector<Point2> hull = convex_hull(std::move(candidates));
  if (hull.empty()) throw std::logic_error("feasible bounded region without vertices");
  const auto first = std::min_element(hull.begin(), hull.end(), [](const Point2& a, const Point2& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::rotate(hull.begin(), first, hull.end());

  for (const auto& p : hull) {
    int active = 0;
    for (const auto& r : h.rows) active += r.a[0] * p.x + r.a[1] * p.y == r.b;
    if (active < 2) throw std::logic_error("vertex with fewer than two active halfspaces");
  }
  region.h_ = std::move(h);
  region.v_ = std::move(hull);
  return region;
}

Region2 intersect(const Region2& a, const Region2& b) {
  if (a.empty() || b.empty()) return Region2();
  LinearSystem sys = a.halfspaces();
  sys.append(b.halfspaces());
  return vertices2(sys);
}

bool contains(const Region2& a, const Region2& b) {
  if (b.empty()) return true;
  if (a.empty()) return false;
  return std::all_of(b.vertices().begin(), b.vertices().end(),
                     [&](const Point2& p) { return satisfies(a.halfspaces(), p); });
}

bool equals(const Region2& a, const Region2& b) { return contains(a, b) && contains(b, a); }

bool strictly_contains(const Region2& a, const Region2& b) {
  return contains(a, b) && !contains(b, a);
}

bool contains_point(const Region2& a, const Point2& p) {
  return !a.empty() && satisfies(a.halfspaces(), p);
}

}  // namespace nashld
