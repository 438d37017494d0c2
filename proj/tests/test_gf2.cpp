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

#include <gtest/gtest.h>

#include <random>

#include "nashld/gf2.hpp"
#include "nashld/rational.hpp"

namespace nashld {
namespace {

BitVector random_vector(std::mt19937_64& rng, int q) {
  return BitVector::from_word(q, rng());
}

TEST(ShiftMatrix, Examples) {
  EXPECT_EQ(shift_matrix(3, 0), BitMatrix::identity(3));
  EXPECT_EQ(gf2_matvec(shift_matrix(3, 1), BitVector::of({1, 1, 0})), BitVector::of({0, 1, 1}));
  EXPECT_TRUE(shift_matrix(3, 3).is_zero());
  EXPECT_TRUE(shift_matrix(3, 9).is_zero());
  EXPECT_THROW(shift_matrix(3, -1), std::invalid_argument);
}

TEST(Gf2Add, Examples) {
  EXPECT_EQ(gf2_add(BitVector::of({1, 0, 1}), BitVector::of({1, 0, 1})), BitVector::of({0, 0, 0}));
  EXPECT_EQ(gf2_add(BitVector::of({1, 1, 0}), BitVector::of({0, 0, 1})), BitVector::of({1, 1, 1}));
  EXPECT_EQ(gf2_add(BitVector::of({0, 1, 1}), BitVector::of({0, 0, 1})), BitVector::of({0, 1, 0}));
  EXPECT_THROW(gf2_add(BitVector(3), BitVector(4)), DimensionError);
}

TEST(Gf2Matvec, Examples) {
  const BitVector v = BitVector::of({1, 0, 1});
  EXPECT_EQ(gf2_matvec(BitMatrix::identity(3), v), v);
  EXPECT_EQ(gf2_matvec(BitMatrix(3, 3), v), BitVector(3));
  EXPECT_EQ(gf2_matvec(shift_matrix(3, 2), v), BitVector::of({0, 0, 1}));
  EXPECT_THROW(gf2_matvec(BitMatrix(3, 4), v), DimensionError);
}

TEST(BitVector, RejectsBadDimensionsAndLevels) {
  EXPECT_THROW(BitVector(0), DimensionError);
  EXPECT_THROW(BitVector(kMaxLevels + 1), DimensionError);
  BitVector v(3);
  EXPECT_THROW(v.at(0), DimensionError);
  EXPECT_THROW(v.set(4, true), DimensionError);
}

TEST(BitVector, HexPutsLevelOneFirst) {
  EXPECT_EQ(BitVector::of({1, 0, 0, 0, 0, 0, 0}).hex(), "40");
  EXPECT_EQ(BitVector::of({0, 0, 0, 1}).hex(), "1");
  EXPECT_EQ(BitVector::of({1, 1, 0}).bits(), "110");
}

TEST(Gf2Property, ShiftComposition) {
  for (int q = 1; q <= 8; ++q) {
    for (int a = 0; a <= q + 1; ++a) {
      for (int b = 0; b <= q + 1; ++b) {
        EXPECT_EQ(gf2_matmul(shift_matrix(q, a), shift_matrix(q, b)), shift_matrix(q, a + b))
            << q << " " << a << " " << b;
      }
    }
  }
}

TEST(Gf2Property, ShiftDownMatchesShiftMatrix) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 12);
    const int k = static_cast<int>(rng() % (q + 2));
    const BitVector v = random_vector(rng, q);
    EXPECT_EQ(shift_down(v, k), gf2_matvec(shift_matrix(q, k), v));
  }
}

TEST(Gf2Property, AdditionGroupLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 64);
    const BitVector a = random_vector(rng, q);
    const BitVector b = random_vector(rng, q);
    const BitVector c = random_vector(rng, q);
    EXPECT_EQ(a ^ b, b ^ a);
    EXPECT_EQ((a ^ b) ^ c, a ^ (b ^ c));
    EXPECT_TRUE((a ^ a).is_zero());
    EXPECT_EQ(a ^ BitVector(q), a);
  }
}

TEST(Gf2Property, MatvecIsLinear) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 9);
    const int cols = 1 + static_cast<int>(rng() % 9);
    BitMatrix m(rows, cols);
    for (int r = 1; r <= rows; ++r) {
      for (int c = 1; c <= cols; ++c) m.set(r, c, rng() & 1U);
    }
    const BitVector a = random_vector(rng, cols);
    const BitVector b = random_vector(rng, cols);
    EXPECT_EQ(gf2_matvec(m, a ^ b), gf2_matvec(m, a) ^ gf2_matvec(m, b));
  }
}

TEST(Gf2Span, ExpressesOnlyVectorsInTheSpan) {
  Gf2Span span(4, 3);
  const auto bits = [](const char* s) { return DynamicBits(std::string(s)); };
  EXPECT_TRUE(span.insert(bits("0011"), 0));
  EXPECT_TRUE(span.insert(bits("0110"), 1));
  EXPECT_FALSE(span.insert(bits("0101"), 2));
  EXPECT_EQ(span.rank(), 2U);
  const auto tags = span.express(bits("0101"));
  ASSERT_TRUE(tags.has_value());
  EXPECT_TRUE(tags->test(0));
  EXPECT_TRUE(tags->test(1));
  EXPECT_FALSE(span.express(bits("1000")).has_value());
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(3).str(), "3/1");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
  EXPECT_EQ(positive_part(Rational(-1, 3)), Rational(0));
}

}  // namespace
}  // namespace nashld
