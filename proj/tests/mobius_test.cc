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

#include "cavepoly/mobius.h"

#include <map>
#include <vector>

#include "cavepoly/errors.h"
#include "cavepoly/geometry.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace cavepoly {
namespace {

using ::cavepoly::testing::RunningExample;
using ::cavepoly::testing::SampleInstances;

// Textbook poset Moebius function on the elements of I plus an adjoined top
// (index size()). mu[x][y] for x <= y, by the defining recurrence with no
// use of the lattice structure.
class PosetOracle {
 public:
  explicit PosetOracle(std::vector<LatticePoint> elements)
      : elements_(std::move(elements)) {
    const std::size_t n = elements_.size() + 1;
    mu_.assign(n, std::vector<std::int64_t>(n, 0));
    // Elements are sorted lexicographically, a linear extension of <=, and
    // the top comes last.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        if (!Leq(x, y)) continue;
        if (x == y) {
          mu_[x][y] = 1;
          continue;
        }
        std::int64_t sum = 0;
        for (std::size_t z = x; z < y; ++z) {
          if (Leq(x, z) && Leq(z, y)) sum += mu_[x][z];
        }
        mu_[x][y] = -sum;
      }
    }
  }

  bool Leq(std::size_t a, std::size_t b) const {
    if (b == elements_.size()) return true;
    if (a == elements_.size()) return false;
    return ComponentwiseLeq(elements_[a], elements_[b]);
  }

  std::int64_t Mu(std::size_t a, std::size_t b) const { return mu_[a][b]; }
  std::size_t top() const { return elements_.size(); }
  const std::vector<LatticePoint>& elements() const { return elements_; }

 private:
  std::vector<LatticePoint> elements_;
  std::vector<std::vector<std::int64_t>> mu_;
};

TEST(MobiusIntervalTest, ClosedFormExamples) {
  EXPECT_EQ(MobiusInterval({1, 2}, {1, 2}), 1);
  EXPECT_EQ(MobiusInterval({0, 1}, {1, 2}), 1);
  EXPECT_EQ(MobiusInterval({0, 2}, {1, 2}), -1);
  EXPECT_EQ(MobiusInterval({0, 2}, {2, 2}), 0);
  EXPECT_EQ(MobiusInterval({0, 0, 0}, {1, 1, 1}), -1);
  try {
    MobiusInterval({0, 3}, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotComparable);
  }
}

TEST(MobiusTableTest, RunningExampleValues) {
  MobiusTable table = ComputeMobiusTable(RunningExample());
  std::map<LatticePoint, std::int64_t> expected = {
      {{0, 3}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{0, 2}, -1}, {{1, 1}, -1},
      {{2, 0}, 0}, {{0, 1}, 0}, {{1, 0}, 0}, {{0, 0}, 0}};
  EXPECT_EQ(table.values(), expected);
  EXPECT_EQ(table.Value({3, 0}), 0);
  EXPECT_EQ(table.Value({5, 5}), 0);
}

TEST(MobiusTableTest, BasePointsHaveValueOne) {
  for (const Polymatroid& P : SampleInstances(5, 4, 900)) {
    MobiusTable table = ComputeMobiusTable(P);
    for (const LatticePoint& u : P.points()) EXPECT_EQ(table.Value(u), 1);
  }
}

TEST(MobiusTableTest, AgreesWithPosetOracle) {
  for (const Polymatroid& P : SampleInstances(6, 3, 1000)) {
    IndependenceSet I = IndependencePoints(P);
    PosetOracle oracle(I.points().points());
    MobiusTable table = ComputeMobiusTable(P);
    for (std::size_t x = 0; x < oracle.elements().size(); ++x) {
      EXPECT_EQ(table.Value(oracle.elements()[x]), -oracle.Mu(x, oracle.top()))
          << P.points().ToString() << " at " << oracle.elements()[x].ToString();
    }
  }
}

TEST(MobiusTableTest, SignsAlternateWithCodegree) {
  for (const Polymatroid& P : SampleInstances(6, 4, 1100)) {
    MobiusTable table = ComputeMobiusTable(P);
    for (const auto& [n, mu] : table.values()) {
      if (mu == 0) continue;
      bool odd = (P.rank() - n.Degree()) % 2 != 0;
      EXPECT_EQ(mu < 0, odd) << n.ToString();
    }
  }
}

TEST(MobiusIntervalsTest, RecurrenceMatchesClosedFormAndOracle) {
  for (const Polymatroid& P : SampleInstances(4, 3, 1200)) {
    IndependenceSet I = IndependencePoints(P);
    PosetOracle oracle(I.points().points());
    const auto& elements = oracle.elements();
    for (std::size_t x = 0; x < elements.size(); ++x) {
      auto recurrence = MobiusIntervalsByRecurrence(I, elements[x]);
      for (std::size_t y = 0; y < elements.size(); ++y) {
        if (!oracle.Leq(x, y)) {
          EXPECT_EQ(recurrence.count(elements[y]), 0u);
          continue;
        }
        EXPECT_EQ(recurrence.at(elements[y]), oracle.Mu(x, y));
        EXPECT_EQ(MobiusInterval(elements[x], elements[y]), oracle.Mu(x, y));
      }
    }
  }
}

TEST(MobiusIntervalsTest, OutsidePointGivesEmptyMap) {
  IndependenceSet I = IndependencePoints(RunningExample());
  EXPECT_TRUE(MobiusIntervalsByRecurrence(I, {3, 0}).empty());
}

TEST(MobiusPolynomialTest, Examples) {
  EXPECT_EQ(MobiusPolynomial(RunningExample()),
            testing::RunningExamplePolynomial());
  EXPECT_EQ(MobiusPolynomial(testing::Origin()), MultiPoly::Constant(1, 1));
  EXPECT_EQ(MobiusPolynomial(testing::UnitPair()).ToCanonicalString(),
            "t2 + t1 - 1");
}

}  // namespace
}  // namespace cavepoly
