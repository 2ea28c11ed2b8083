// Copyright 2026 The Cavepoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cavepoly/checked_math.h"

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "cavepoly/errors.h"
#include "gtest/gtest.h"

namespace cavepoly {
namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

void ExpectOverflow(std::int64_t (*op)(std::int64_t, std::int64_t),
                    std::int64_t a, std::int64_t b) {
  try {
    op(a, b);
    ADD_FAILURE() << "no overflow for " << a << ", " << b;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

TEST(CheckedMathTest, InRangeResultsAreExact) {
  EXPECT_EQ(CheckedAdd(kMax - 1, 1), kMax);
  EXPECT_EQ(CheckedSub(kMin + 1, 1), kMin);
  EXPECT_EQ(CheckedMul(-3037000499LL, 3037000499LL), -9223372030926249001LL);
  EXPECT_EQ(CheckedNeg(kMax), -kMax);
}

TEST(CheckedMathTest, OverflowThrows) {
  ExpectOverflow(CheckedAdd, kMax, 1);
  ExpectOverflow(CheckedSub, kMin, 1);
  ExpectOverflow(CheckedMul, kMax / 2 + 1, 2);
  EXPECT_THROW(CheckedNeg(kMin), Error);
}

TEST(BinomialTest, MatchesPascalTriangle) {
  std::vector<std::vector<std::int64_t>> pascal(41);
  for (int n = 0; n <= 40; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) {
      pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
  }
  for (int n = 0; n <= 40; ++n) {
    for (int k = -1; k <= n + 1; ++k) {
      std::int64_t expected = (k < 0 || k > n) ? 0 : pascal[n][k];
      EXPECT_EQ(Binomial(n, k), expected) << n << " " << k;
    }
  }
}

TEST(BinomialTest, NegativeTopIsRejected) {
  EXPECT_THROW(Binomial(-1, 0), Error);
}

TEST(BinomialTest, HugeValueOverflows) {
  EXPECT_THROW(Binomial(200, 100), Error);
}

// Falling factorial divided by k!, evaluated in long double as an oracle for
// small arguments.
TEST(GeneralizedBinomialTest, AgreesWithFallingFactorial) {
  for (std::int64_t x = -12; x <= 12; ++x) {
    for (std::int64_t k = 0; k <= 8; ++k) {
      long double value = 1;
      for (std::int64_t j = 0; j < k; ++j) value = value * (x - j) / (j + 1);
      EXPECT_EQ(
          GeneralizedBinomial(x, k),
          static_cast<std::int64_t>(value < 0 ? value - 0.5 : value + 0.5))
          << x << " " << k;
    }
  }
}

TEST(GeneralizedBinomialTest, ShiftedBinomialsAtZero) {
  // C(n - 1, n) vanishes for n >= 1 and is 1 at n = 0.
  EXPECT_EQ(GeneralizedBinomial(-1, 0), 1);
  for (int n = 1; n < 6; ++n) EXPECT_EQ(GeneralizedBinomial(n - 1, n), 0);
  EXPECT_EQ(GeneralizedBinomial(-1, 3), -1);
}

TEST(RationalTest, NormalizesSignAndGcd) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.ToString(), "-3/2");
  EXPECT_EQ(Rational(4, 2).ToString(), "2");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(0, -7), Rational(0));
}

TEST(RationalTest, FieldOperations) {
  Rational a(1, 6);
  Rational b(1, 3);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(-1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(1, 2));
  EXPECT_EQ(-a, Rational(-1, 6));
  EXPECT_EQ(a.sign(), 1);
  EXPECT_EQ((-a).sign(), -1);
}

TEST(RationalTest, ZeroDenominatorAndDivisionRejected) {
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(RationalTest, RandomIdentities) {
  std::mt19937_64 rng(7);
  auto draw = [&] {
    std::int64_t num = static_cast<std::int64_t>(rng() % 41) - 20;
    std::int64_t den = static_cast<std::int64_t>(rng() % 12) + 1;
    return Rational(num, den);
  };
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

}  // namespace
}  // namespace cavepoly
