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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace nashld {

// Exact signed rational in canonical form: gcd(|num|, den) = 1, den > 0.
// Every rate, bound and slack value in the library is one of these.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p/q", "p" or "-p/q" with optional surrounding whitespace.
  // Throws std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  // Always "num/den", e.g. "3/1", "-1/6".
  std::string str() const;

  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  // Lossy; only for rendering.
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }
  static Rational from_raw(mpq_class v) { return Rational(std::move(v)); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class v);
  mpq_class value_{0};
};

inline Rational positive_part(const Rational& r) {
  return r.sign() < 0 ? Rational(0) : r;
}
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace nashld
