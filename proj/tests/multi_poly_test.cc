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

#include "cavepoly/multi_poly.h"

#include <map>
#include <random>
#include <string>
#include <vector>

#include "cavepoly/errors.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace cavepoly {
namespace {

using ::cavepoly::testing::Poly;

MultiPoly RandomPoly(std::mt19937_64& rng, int p, int max_terms,
                     Coord max_exp) {
  MultiPoly out(p);
  const int terms = static_cast<int>(rng() % (max_terms + 1));
  for (int k = 0; k < terms; ++k) {
    IntVector e(p);
    for (Coord& x : e) x = static_cast<Coord>(rng() % (max_exp + 1));
    out.AddTerm(e, static_cast<std::int64_t>(rng() % 9) - 4);
  }
  return out;
}

TEST(MultiPolyTest, AdditionCancelsAndMerges) {
  MultiPoly cube = Poly(2, {{{0, 3}, 1}});
  EXPECT_TRUE((cube + (-cube)).is_zero());
  MultiPoly q = Poly(2, {{{1, 2}, 1}, {{0, 2}, -1}});
  EXPECT_EQ(q + cube, Poly(2, {{{0, 3}, 1}, {{1, 2}, 1}, {{0, 2}, -1}}));
  EXPECT_EQ(MultiPoly(2) + q, q);
}

TEST(MultiPolyTest, Multiplication) {
  MultiPoly a = Poly(2, {{{1, 0}, 1}, {{0, 0}, -1}});
  MultiPoly b = Poly(2, {{{0, 1}, 1}, {{0, 0}, -1}});
  EXPECT_EQ(a * b,
            Poly(2, {{{1, 1}, 1}, {{1, 0}, -1}, {{0, 1}, -1}, {{0, 0}, 1}}));
  EXPECT_EQ(MultiPoly::Constant(2, 1) * a, a);
  MultiPoly c = Poly(2, {{{2, 0}, 1}, {{1, 0}, -1}});
  EXPECT_EQ(c * Poly(2, {{{0, 1}, 1}}), Poly(2, {{{2, 1}, 1}, {{1, 1}, -1}}));
}

TEST(MultiPolyTest, ZeroCoefficientsAreNotStored) {
  MultiPoly q(2);
  q.AddTerm({1, 1}, 3);
  q.AddTerm({1, 1}, -3);
  q.AddTerm({0, 0}, 0);
  EXPECT_TRUE(q.is_zero());
  EXPECT_TRUE(q.terms().empty());
}

TEST(MultiPolyTest, DimensionChecks) {
  MultiPoly q(2);
  EXPECT_THROW(q.AddTerm({1}, 1), Error);
  EXPECT_THROW(q += MultiPoly(3), Error);
  std::vector<std::int64_t> t = {1};
  EXPECT_THROW(q.Evaluate(t), Error);
}

TEST(MultiPolyTest, SignedExponentsCancelBeforeEvaluation) {
  MultiPoly inverse = Poly(1, {{{0}, 1}, {{-1}, -1}});
  EXPECT_TRUE(inverse.HasNegativeExponent());
  std::vector<std::int64_t> t = {2};
  try {
    inverse.Evaluate(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeExponent);
  }
  MultiPoly shifted = inverse * Poly(1, {{{1}, 1}});
  EXPECT_FALSE(shifted.HasNegativeExponent());
  EXPECT_EQ(shifted, Poly(1, {{{1}, 1}, {{0}, -1}}));
}

TEST(MultiPolyTest, Evaluation) {
  std::vector<std::int64_t> ones = {1, 1};
  EXPECT_EQ(testing::RunningExamplePolynomial().Evaluate(ones), 1);
  std::vector<std::int64_t> t = {2, 3};
  // 27 + 18 - 9 + 12 - 6.
  EXPECT_EQ(testing::RunningExamplePolynomial().Evaluate(t), 42);
  EXPECT_EQ(MultiPoly(2).Evaluate(t), 0);
}

TEST(MultiPolyTest, CanonicalStrings) {
  EXPECT_EQ(testing::RunningExamplePolynomial().ToCanonicalString(),
            "t2^3 + t1*t2^2 + t1^2*t2 - t2^2 - t1*t2");
  EXPECT_EQ(MultiPoly(2).ToCanonicalString(), "0");
  EXPECT_EQ(MultiPoly::Constant(2, -1).ToCanonicalString(), "-1");
  EXPECT_EQ(MultiPoly::Constant(1, 1).ToCanonicalString(), "1");
  EXPECT_EQ(Poly(3, {{{0, 0, 1}, -2}, {{1, 0, 0}, 3}, {{0, 0, 0}, 5}})
                .ToCanonicalString(),
            "-2*t3 + 3*t1 + 5");
  EXPECT_EQ(Poly(1, {{{1}, 1}, {{0}, -1}}).ToCanonicalString(), "t1 - 1");
}

TEST(MultiPolyTest, SortedTermsFollowCanonicalOrder) {
  auto sorted = testing::RunningExamplePolynomial().SortedTerms();
  ASSERT_EQ(sorted.size(), 5u);
  EXPECT_EQ(sorted[0].first, (IntVector{0, 3}));
  EXPECT_EQ(sorted[1].first, (IntVector{1, 2}));
  EXPECT_EQ(sorted[2].first, (IntVector{2, 1}));
  EXPECT_EQ(sorted[3].first, (IntVector{0, 2}));
  EXPECT_EQ(sorted[4].first, (IntVector{1, 1}));
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    EXPECT_TRUE(CanonicalBefore(sorted[k - 1].first, sorted[k].first));
    EXPECT_FALSE(CanonicalBefore(sorted[k].first, sorted[k - 1].first));
  }
}

TEST(MultiPolyTest, RingAxioms) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 3);
    MultiPoly a = RandomPoly(rng, p, 4, 3);
    MultiPoly b = RandomPoly(rng, p, 4, 3);
    MultiPoly c = RandomPoly(rng, p, 4, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, MultiPoly(p));
    EXPECT_EQ(a * MultiPoly::Constant(p, 1), a);
  }
}

TEST(MultiPolyTest, EvaluationIsARingHomomorphism) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 3);
    MultiPoly a = RandomPoly(rng, p, 4, 3);
    MultiPoly b = RandomPoly(rng, p, 4, 3);
    std::vector<std::int64_t> t(p);
    for (auto& x : t) x = static_cast<std::int64_t>(rng() % 9) - 4;
    EXPECT_EQ((a * b).Evaluate(t), a.Evaluate(t) * b.Evaluate(t));
    EXPECT_EQ((a + b).Evaluate(t), a.Evaluate(t) + b.Evaluate(t));
  }
}

TEST(MultiPolyTest, CanonicalStringIsInjective) {
  std::mt19937_64 rng(23);
  std::map<std::string, MultiPoly> seen;
  for (int trial = 0; trial < 3000; ++trial) {
    MultiPoly a = RandomPoly(rng, 2, 3, 2);
    auto [it, inserted] = seen.emplace(a.ToCanonicalString(), a);
    if (!inserted) {
      EXPECT_EQ(it->second, a) << it->first;
    }
  }
  EXPECT_GT(seen.size(), 500u);
}

TEST(MultiPolyTest, OverflowIsDetected) {
  MultiPoly big = MultiPoly::Constant(1, std::int64_t{1} << 62);
  EXPECT_THROW(big + big, Error);
  EXPECT_THROW(big * big, Error);
}

}  // namespace
}  // namespace cavepoly
