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

// Polymatroids in their two equivalent forms: a finite homogeneous M-convex
// point set, and a normalized monotone submodular rank function.

#ifndef CAVEPOLY_POLYMATROID_H_
#define CAVEPOLY_POLYMATROID_H_

#include <optional>
#include <string>
#include <vector>

#include "cavepoly/lattice_point.h"
#include "cavepoly/rank_function.h"

namespace cavepoly {

// Why an exchange check failed.
struct ExchangeWitness {
  // "homogeneous", "exchange" (M-convexity), "1" or "2" (the two
  // generalized-polymatroid conditions).
  std::string condition;
  LatticePoint u;
  LatticePoint v;
  // 0-based coordinate, or -1 when the condition has none.
  int i = -1;

  std::string Describe() const;
};

struct ExchangeCheck {
  bool ok = true;
  std::optional<ExchangeWitness> witness;

  explicit operator bool() const { return ok; }
};

// Homogeneity plus the exchange property: for u, v and u_i > v_i there is j
// with u_j < v_j and u - e_i + e_j in the set. Throws kEmptyInput on an empty
// set; ragged input is rejected by PointSet with kDimensionMismatch.
ExchangeCheck IsMConvex(const PointSet& points);
ExchangeCheck IsMConvex(const std::vector<LatticePoint>& points);

// The explicit two-condition characterization of generalized polymatroids.
ExchangeCheck IsGeneralizedPolymatroid(const PointSet& points);
ExchangeCheck IsGeneralizedPolymatroid(const std::vector<LatticePoint>& points);

// n -> (n, N - |n|) with N the largest coordinate sum of the input.
PointSet Homogenize(const PointSet& points);

class Polymatroid {
 public:
  // Validates nonemptiness (kEmptyInput), homogeneity and M-convexity
  // (kNotMConvex, message carries the witness). The cage defaults to the
  // componentwise maximum of the points.
  static Polymatroid FromPoints(PointSet points,
                                std::optional<LatticePoint> cage = {});
  static Polymatroid FromPoints(const std::vector<LatticePoint>& points);

  int dim() const { return points_.dim(); }
  const PointSet& points() const { return points_; }
  Coord rank() const { return rank_; }
  const LatticePoint& cage() const { return cage_; }
  const RankFunction& rank_function() const { return rank_function_; }

  bool Contains(const LatticePoint& n) const { return points_.Contains(n); }

  friend bool operator==(const Polymatroid& a, const Polymatroid& b) {
    return a.points_ == b.points_;
  }

 private:
  friend Polymatroid PointsFromRank(const RankFunction& rk);
  Polymatroid(PointSet points, RankFunction rk);

  PointSet points_;
  Coord rank_ = 0;
  LatticePoint cage_;
  RankFunction rank_function_;
};

// Integer points n >= 0 with sum_{i in I} n_i <= rk(I) for all I and
// |n| = rk([p]). Throws kInternalInvariantFailure if the enumeration is empty
// or not M-convex.
Polymatroid PointsFromRank(const RankFunction& rk);

// rk(I) = max over points of the I-coordinate sum; the cage is the
// polymatroid's cage. Requires dim() <= kMaxRankDimension.
RankFunction RankFromPoints(const Polymatroid& polymatroid);

}  // namespace cavepoly

#endif  // CAVEPOLY_POLYMATROID_H_
