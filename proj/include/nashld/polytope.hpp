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

#include <vector>

#include "nashld/linear_system.hpp"
#include "nashld/rational.hpp"

namespace nashld {

// Scales every row so its first nonzero coefficient is +1 or -1 (equalities:
// +1), drops tautologies, collapses duplicate rows and keeps only the
// tightest of parallel inequalities. Rows come back sorted. A system with a
// violated trivial row becomes LinearSystem::infeasible.
LinearSystem normalize(const LinearSystem& sys);

// Projects out x_var. An equality with a nonzero x_var coefficient is used
// for substitution; otherwise Fourier-Motzkin pairs every positive row with
// every negative row. The result has dimension - 1 variables, in order.
LinearSystem fm_eliminate(const LinearSystem& sys, int var);

// Removes duplicate and redundant rows. A row is redundant when the LP
// maximum of its left side over the remaining rows is at most its bound.
LinearSystem prune(const LinearSystem& sys);

// Eliminates all variables not in `keep`, cheapest first (fewest
// positive x negative row pairs), pruning after every step. The result's
// variables are keep[0], keep[1], ... in that order.
LinearSystem project(const LinearSystem& sys, const std::vector<int>& keep);

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

// Bounded 2D polytope in both representations.
class Region2 {
 public:
  // The empty region.
  Region2();

  // Halfspaces (inequalities only, pruned).
  const LinearSystem& halfspaces() const { return h_; }
  // Counterclockwise, starting at the lowest-then-leftmost vertex.
  const std::vector<Point2>& vertices() const { return v_; }
  bool empty() const { return v_.empty(); }
  // A segment or a single point.
  bool degenerate() const { return !v_.empty() && v_.size() < 3; }

  // Twice the signed area, counterclockwise positive.
  Rational twice_area() const;

  friend Region2 vertices2(const LinearSystem& sys);

 private:
  LinearSystem h_;
  std::vector<Point2> v_;
};

// Builds a Region2 from a 2-variable system. Throws std::invalid_argument
// when the system is unbounded or not 2-dimensional; an infeasible system
// gives the empty region.
Region2 vertices2(const LinearSystem& sys);

Region2 intersect(const Region2& a, const Region2& b);
// a contains b.
bool contains(const Region2& a, const Region2& b);
bool equals(const Region2& a, const Region2& b);
// a contains b and differs from it.
bool strictly_contains(const Region2& a, const Region2& b);
bool contains_point(const Region2& a, const Point2& p);

}  // namespace nashld
