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

#include "nashld/linear_system.hpp"

#include <stdexcept>

namespace nashld {

bool Constraint::satisfied_by(const std::vector<Rational>& x) const {
  if (x.size() != a.size()) throw std::invalid_argument("point has wrong dimension");
  Rational lhs;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero()) lhs += a[k] * x[k];
  }
  return rel == Relation::kEqual ? lhs == b : lhs <= b;
}

bool Constraint::is_trivial() const {
  for (const auto& c : a) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string Constraint::str() const {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += a[k].str() + "*x" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + (rel == Relation::kEqual ? " = " : " <= ") + b.str();
}

void LinearSystem::add_le(std::vector<Rational> a, Rational b) {
  if (static_cast<int>(a.size()) != dimension) {
    throw std::invalid_argument("constraint has " + std::to_string(a.size()) +
                                " coefficients, system dimension is " +
                                std::to_string(dimension));
  }
  rows.push_back({std::move(a), std::move(b), Relation::kLessEqual});
}

void LinearSystem::add_ge(std::vector<Rational> a, Rational b) {
  for (auto& c : a) c = -c;
  add_le(std::move(a), -b);
}

void LinearSystem::add_eq(std::vector<Rational> a, Rational b) {
  add_le(std::move(a), std::move(b));
  rows.back().rel = Relation::kEqual;
}

void LinearSystem::add_nonnegative(int k) { add_le(unit_vector(dimension, k, Rational(-1)), 0); }

void LinearSystem::append(const LinearSystem& other) {
  if (other.dimension != dimension) throw std::invalid_argument("dimension mismatch in append");
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& x) const {
  for (const auto& r : rows) {
    if (!r.satisfied_by(x)) return false;
  }
  return true;
}

LinearSystem LinearSystem::infeasible(int dim) {
  LinearSystem s(dim);
  s.add_le(std::vector<Rational>(dim), -1);
  return s;
}

bool LinearSystem::trivially_infeasible() const {
  for (const auto& r : rows) {
    if (!r.is_trivial()) continue;
    if (r.rel == Relation::kEqual ? !r.b.is_zero() : r.b.sign() < 0) return true;
  }
  return false;
}

std::vector<Rational> unit_vector(int n, int k, const Rational& scale) {
  std::vector<Rational> v(n);
  v.at(k) = scale;
  return v;
}

}  // namespace nashld
