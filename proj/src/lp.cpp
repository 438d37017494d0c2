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

#include "nashld/lp.hpp"

#include <stdexcept>

namespace nashld {
namespace {

// Dense tableau. Column layout: structural columns, then slack/surplus,
// then artificials; the right-hand side is kept separately.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<mpq_class>(cols)), rhs_(rows), basis_(rows, 0), cost_(cols) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cost_.size(); }

  mpq_class& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  mpq_class& rhs(std::size_t r) { return rhs_[r]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }

  // Reduced costs for maximizing obj; obj has cols() entries.
  void set_objective(const std::vector<mpq_class>& obj) {
    obj_ = obj;
    cost_ = obj;
    value_ = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      const mpq_class& cb = obj[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c < cols(); ++c) {
        if (sgn(a_[r][c]) != 0) cost_[c] -= cb * a_[r][c];
      }
      value_ += cb * rhs_[r];
    }
  }

  const mpq_class& value() const { return value_; }

  // Runs to optimality over columns < limit. Returns false when unbounded.
  bool optimize(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t c = 0; c < limit; ++c) {
        if (sgn(cost_[c]) > 0) {
          enter = c;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = rows();
      mpq_class best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (sgn(a_[r][enter]) <= 0) continue;
        mpq_class ratio = rhs_[r] / a_[r][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const mpq_class inv = 1 / a_[r][c];
    for (auto& v : a_[r]) {
      if (sgn(v) != 0) v *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t k = 0; k < rows(); ++k) {
      if (k == r || sgn(a_[k][c]) == 0) continue;
      const mpq_class f = a_[k][c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(a_[r][j]) != 0) a_[k][j] -= f * a_[r][j];
      }
      rhs_[k] -= f * rhs_[r];
    }
    if (sgn(cost_[c]) != 0) {
      const mpq_class f = cost_[c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(a_[r][j]) != 0) cost_[j] -= f * a_[r][j];
      }
      value_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> cost_;
  std::vector<mpq_class> obj_;
  mpq_class value_;
};

struct Standardized {
  Tableau tableau;
  // Column of x_k^+ and, for free variables, x_k^-.
  std::vector<std::size_t> pos;
  std::vector<std::optional<std::size_t>> neg;
  std::size_t artificial_begin = 0;
};

// Rows of the form -a x_k <= 0 (a > 0) just say x_k >= 0; such variables
// need no split and the row itself is dropped.
std::vector<bool> sign_constrained(const LinearSystem& sys, std::vector<bool>& drop) {
  std::vector<bool> nonneg(sys.dimension, false);
  drop.assign(sys.rows.size(), false);
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto& row = sys.rows[r];
    if (row.rel != Relation::kLessEqual || !row.b.is_zero()) continue;
    int only = -1;
    bool single = true;
    for (int k = 0; k < sys.dimension; ++k) {
      if (row.a[k].is_zero()) continue;
      if (only >= 0) {
        single = false;
        break;
      }
      only = k;
    }
    if (single && only >= 0 && row.a[only].sign() < 0) {
      nonneg[only] = true;
      drop[r] = true;
    }
  }
  return nonneg;
}

Standardized standardize(const LinearSystem& sys) {
  std::vector<bool> drop;
  const std::vector<bool> nonneg = sign_constrained(sys, drop);

  std::vector<std::size_t> pos(sys.dimension);
  std::vector<std::optional<std::size_t>> neg(sys.dimension);
  std::size_t col = 0;
  for (int k = 0; k < sys.dimension; ++k) {
    pos[k] = col++;
    if (!nonneg[k]) neg[k] = col++;
  }
  const std::size_t structural = col;

  struct Row {
    const Constraint* c;
    bool flip;
  };
  std::vector<Row> kept;
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    if (drop[r]) continue;
    const auto& c = sys.rows[r];
    const bool flip = c.b.sign() < 0;
    kept.push_back({&c, flip});
    if (c.rel == Relation::kLessEqual) ++slacks;
    if (c.rel == Relation::kEqual || flip) ++artificials;
  }

  Standardized s{Tableau(kept.size(), structural + slacks + artificials), pos, neg,
                 structural + slacks};
  std::size_t slack_col = structural;
  std::size_t art_col = structural + slacks;
  for (std::size_t r = 0; r < kept.size(); ++r) {
    const auto& c = *kept[r].c;
    const int sign = kept[r].flip ? -1 : 1;
    for (int k = 0; k < sys.dimension; ++k) {
      if (c.a[k].is_zero()) continue;
      const mpq_class v = sign * c.a[k].raw();
      s.tableau.at(r, pos[k]) = v;
      if (neg[k]) s.tableau.at(r, *neg[k]) = -v;
    }
    s.tableau.rhs(r) = sign * c.b.raw();
    if (c.rel == Relation::kLessEqual) {
      s.tableau.at(r, slack_col) = sign;
      if (!kept[r].flip) s.tableau.basic(r) = slack_col;
      ++slack_col;
    }
    if (c.rel == Relation::kEqual || kept[r].flip) {
      s.tableau.at(r, art_col) = 1;
      s.tableau.basic(r) = art_col;
      ++art_col;
    }
  }
  return s;
}

// Phase one. Returns false if infeasible; otherwise leaves a basis free of
// artificial columns (redundant rows are removed).
bool phase_one(Standardized& s) {
  Tableau& t = s.tableau;
  const std::size_t cols = t.cols();
  if (s.artificial_begin == cols) return true;
  std::vector<mpq_class> obj(cols);
  for (std::size_t c = s.artificial_begin; c < cols; ++c) obj[c] = -1;
  t.set_objective(obj);
  t.optimize(cols);
  if (sgn(t.value()) < 0) return false;
  for (std::size_t r = t.rows(); r-- > 0;) {
    if (t.basic(r) < s.artificial_begin) continue;
    std::size_t enter = s.artificial_begin;
    for (std::size_t c = 0; c < s.artificial_begin; ++c) {
      if (sgn(t.at(r, c)) != 0) {
        enter = c;
        break;
      }
    }
    if (enter == s.artificial_begin) {
      t.erase_row(r);
    } else {
      t.pivot(r, enter);
    }
  }
  return true;
}

std::vector<Rational> extract(Standardized& s, int dimension) {
  Tableau& t = s.tableau;
  std::vector<mpq_class> column_value(t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r) column_value[t.basic(r)] = t.rhs(r);
  std::vector<Rational> x;
  x.reserve(dimension);
  for (int k = 0; k < dimension; ++k) {
    mpq_class v = column_value[s.pos[k]];
    if (s.neg[k]) v -= column_value[*s.neg[k]];
    x.push_back(Rational::from_raw(std::move(v)));
  }
  return x;
}

}  // namespace

LpResult maximize(const LinearSystem& sys, const std::vector<Rational>& c) {
  if (static_cast<int>(c.size()) != sys.dimension) {
    throw std::invalid_argument("objective has wrong dimension");
  }
  LpResult result;
  Standardized s = standardize(sys);
  if (!phase_one(s)) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  std::vector<mpq_class> obj(s.tableau.cols());
  for (int k = 0; k < sys.dimension; ++k) {
    obj[s.pos[k]] = c[k].raw();
    if (s.neg[k]) obj[*s.neg[k]] = -c[k].raw();
  }
  s.tableau.set_objective(obj);
  if (!s.tableau.optimize(s.artificial_begin)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = Rational::from_raw(s.tableau.value());
  result.x = extract(s, sys.dimension);
  return result;
}

std::optional<std::vector<Rational>> feasible_point(const LinearSystem& sys) {
  Standardized s = standardize(sys);
  if (!phase_one(s)) return std::nullopt;
  return extract(s, sys.dimension);
}

}  // namespace nashld
