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

#include "nashld/gf2.hpp"

#include <bit>

namespace nashld {
namespace {

std::uint64_t mask_for(int dim) {
  return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
}

void check_level(int dim, int level) {
  if (level < 1 || level > dim) {
    throw DimensionError("level " + std::to_string(level) +
                         " outside 1.." + std::to_string(dim));
  }
}

}  // namespace

BitVector::BitVector(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxLevels) {
    throw DimensionError("bit vector dimension must be in 1.." +
                         std::to_string(kMaxLevels));
  }
}

BitVector BitVector::of(std::initializer_list<int> bits) {
  BitVector v(static_cast<int>(bits.size()));
  int level = 1;
  for (int b : bits) v.set(level++, b != 0);
  return v;
}

BitVector BitVector::from_word(int dim, std::uint64_t word) {
  BitVector v(dim);
  v.word_ = word & mask_for(dim);
  return v;
}

bool BitVector::at(int level) const {
  check_level(dim_, level);
  return (word_ >> (level - 1)) & 1U;
}

void BitVector::set(int level, bool value) {
  check_level(dim_, level);
  const std::uint64_t bit = std::uint64_t{1} << (level - 1);
  word_ = value ? (word_ | bit) : (word_ & ~bit);
}

int BitVector::popcount() const { return std::popcount(word_); }

std::string BitVector::hex() const {
  // Reverse so that level 1 becomes the most significant bit.
  std::uint64_t value = 0;
  for (int m = 1; m <= dim_; ++m) value = (value << 1) | ((word_ >> (m - 1)) & 1U);
  static constexpr char kDigits[] = "0123456789abcdef";
  const int digits = (dim_ + 3) / 4;
  std::string out(digits, '0');
  for (int d = digits - 1; d >= 0; --d) {
    out[d] = kDigits[value & 0xF];
    value >>= 4;
  }
  return out;
}

std::string BitVector::bits() const {
  std::string out;
  out.reserve(dim_);
  for (int m = 1; m <= dim_; ++m) out.push_back(at(m) ? '1' : '0');
  return out;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.dim_ != dim_) {
    throw DimensionError("gf2_add: dimensions " + std::to_string(dim_) +
                         " and " + std::to_string(o.dim_));
  }
  word_ ^= o.word_;
  return *this;
}

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols) {
  if (rows < 1) throw DimensionError("bit matrix needs at least one row");
  rows_.assign(rows, BitVector(cols));
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.set(i, i, true);
  return m;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

BitMatrix shift_matrix(int q, int k) {
  if (k < 0) throw std::invalid_argument("shift exponent must be >= 0");
  BitMatrix s(q, q);
  for (int m = k + 1; m <= q; ++m) s.set(m, m - k, true);
  return s;
}

BitVector shift_down(const BitVector& v, int k) {
  if (k < 0) throw std::invalid_argument("shift exponent must be >= 0");
  if (k >= v.dim()) return BitVector(v.dim());
  return BitVector::from_word(v.dim(), v.word() << k);
}

BitVector gf2_add(const BitVector& a, const BitVector& b) {
  BitVector out = a;
  out ^= b;
  return out;
}

BitVector gf2_matvec(const BitMatrix& m, const BitVector& v) {
  if (m.cols() != v.dim()) {
    throw DimensionError("gf2_matvec: matrix has " + std::to_string(m.cols()) +
                         " columns, vector has dimension " +
                         std::to_string(v.dim()));
  }
  BitVector out(m.rows());
  for (int r = 1; r <= m.rows(); ++r) {
    out.set(r, (std::popcount(m.row(r).word() & v.word()) & 1) != 0);
  }
  return out;
}

BitMatrix gf2_matmul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("gf2_matmul: inner dimensions differ");
  BitMatrix out(a.rows(), b.cols());
  for (int r = 1; r <= a.rows(); ++r) {
    for (int c = 1; c <= b.cols(); ++c) {
      bool acc = false;
      for (int k = 1; k <= a.cols(); ++k) acc ^= a.at(r, k) && b.at(k, c);
      out.set(r, c, acc);
    }
  }
  return out;
}

Gf2Span::Gf2Span(std::size_t width, std::size_t tag_count)
    : width_(width), tag_count_(tag_count), pivot_row_(width, -1) {}

bool Gf2Span::insert(const DynamicBits& vec, std::size_t tag) {
  if (vec.size() != width_) throw DimensionError("Gf2Span: width mismatch");
  if (tag >= tag_count_) throw DimensionError("Gf2Span: tag out of range");
  Row row{vec, DynamicBits(tag_count_)};
  row.tags.set(tag);
  for (auto p = row.vec.find_first(); p != DynamicBits::npos; p = row.vec.find_first()) {
    const int idx = pivot_row_[p];
    if (idx < 0) {
      pivot_row_[p] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    row.vec ^= rows_[idx].vec;
    row.tags ^= rows_[idx].tags;
  }
  return false;
}

std::optional<DynamicBits> Gf2Span::express(const DynamicBits& target) const {
  if (target.size() != width_) throw DimensionError("Gf2Span: width mismatch");
  DynamicBits v = target;
  DynamicBits tags(tag_count_);
  for (auto p = v.find_first(); p != DynamicBits::npos; p = v.find_first()) {
    const int idx = pivot_row_[p];
    if (idx < 0) return std::nullopt;
    v ^= rows_[idx].vec;
    tags ^= rows_[idx].tags;
  }
  return tags;
}

}  // namespace nashld
