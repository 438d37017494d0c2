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

// Dense vectors and matrices over GF(2).
//
// Levels are 1-based and level 1 is the most significant position. The lower
// shift matrix S moves level m to level m + 1 and drops level q, so S^k x
// keeps the top q - k levels of x and pushes them k positions down.

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashld {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxLevels = 64;

class BitVector {
 public:
  // All-zero vector. 1 <= dim <= kMaxLevels.
  explicit BitVector(int dim);

  // Bits listed top level first, e.g. of({1, 1, 0}).
  static BitVector of(std::initializer_list<int> bits);
  // Bit m-1 of `word` is level m.
  static BitVector from_word(int dim, std::uint64_t word);

  int dim() const { return dim_; }
  bool at(int level) const;
  void set(int level, bool value);
  std::uint64_t word() const { return word_; }
  bool is_zero() const { return word_ == 0; }
  int popcount() const;

  // Hex of the dim-bit integer whose most significant bit is level 1.
  std::string hex() const;
  // "110..." top level first.
  std::string bits() const;

  BitVector& operator^=(const BitVector& o);

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  int dim_;
  std::uint64_t word_ = 0;
};

class BitMatrix {
 public:
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool at(int row, int col) const { return rows_.at(row - 1).at(col); }
  void set(int row, int col, bool value) { rows_.at(row - 1).set(col, value); }
  const BitVector& row(int r) const { return rows_.at(r - 1); }
  bool is_zero() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int cols_;
  std::vector<BitVector> rows_;
};

// S^k for the q x q lower shift matrix; zero for k >= q.
BitMatrix shift_matrix(int q, int k);

// Same as gf2_matvec(shift_matrix(v.dim(), k), v) without building S^k.
BitVector shift_down(const BitVector& v, int k);

BitVector gf2_add(const BitVector& a, const BitVector& b);
BitVector gf2_matvec(const BitMatrix& m, const BitVector& v);
BitMatrix gf2_matmul(const BitMatrix& a, const BitMatrix& b);

inline BitVector operator^(const BitVector& a, const BitVector& b) {
  return gf2_add(a, b);
}

using DynamicBits = boost::dynamic_bitset<std::uint64_t>;

// Row space of a growing set of tagged GF(2) vectors. `express` writes a
// target as a sum of inserted vectors and reports which tags were used.
class Gf2Span {
 public:
  Gf2Span(std::size_t width, std::size_t tag_count);

  // Returns false when the vector was already in the span.
  bool insert(const DynamicBits& vec, std::size_t tag);

  // Set of tags whose vectors XOR to `target`, or nullopt when the target
  // is outside the span.
  std::optional<DynamicBits> express(const DynamicBits& target) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    DynamicBits vec;
    DynamicBits tags;
  };
  std::size_t width_;
  std::size_t tag_count_;
  std::vector<Row> rows_;
  // pivot bit -> index into rows_, or -1
  std::vector<int> pivot_row_;
};

}  // namespace nashld
