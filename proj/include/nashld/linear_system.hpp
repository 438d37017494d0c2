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

#include <string>
#include <vector>

#include "nashld/rational.hpp"

namespace nashld {

enum class Relation { kLessEqual, kEqual };

struct Constraint {
  std::vector<Rational> a;
  Rational b;
  Relation rel = Relation::kLessEqual;

  bool satisfied_by(const std::vector<Rational>& x) const;
  // True when every coefficient is zero.
  bool is_trivial() const;
  std::string str() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Conjunction of rational linear constraints over free variables x_0..x_{n-1}.
struct LinearSystem {
  int dimension = 0;
  std::vector<Constraint> rows;

  LinearSystem() = default;
  explicit LinearSystem(int dim) : dimension(dim) {}

  // a.x <= b
  void add_le(std::vector<Rational> a, Rational b);
  // a.x >= b, stored as -a.x <= -b
  void add_ge(std::vector<Rational> a, Rational b);
  void add_eq(std::vector<Rational> a, Rational b);
  // x_k >= 0
  void add_nonnegative(int k);
  void append(const LinearSystem& other);

  bool satisfied_by(const std::vector<Rational>& x) const;
  std::size_t size() const { return rows.size(); }

  // The canonical infeasible system {0 <= -1} in `dim` variables.
  static LinearSystem infeasible(int dim);
  // True for a system containing a trivially violated row such as 0 <= -1.
  bool trivially_infeasible() const;
};

// Unit coefficient vector e_k of length n, scaled by `scale`.
std::vector<Rational> unit_vector(int n, int k, const Rational& scale = Rational(1));

}  // namespace nashld
