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

// Lattice points of base and independence polytopes, truncations, top
// elements and the cave predicate.

#ifndef CAVEPOLY_GEOMETRY_H_
#define CAVEPOLY_GEOMETRY_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cavepoly/lattice_point.h"
#include "cavepoly/lex_order.h"
#include "cavepoly/polymatroid.h"

namespace cavepoly {

// 1 iff n is a base point. Accepts signed vectors; anything with a negative
// entry is outside the base polytope and scores 0.
int Indicator(const Polymatroid& polymatroid, std::span<const Coord> n);
int Indicator(const Polymatroid& polymatroid, const LatticePoint& n);

// Lattice points of the independence polytope of a polymatroid. Contains the
// origin and every base point, and is closed under n -> n - e_i.
class IndependenceSet {
 public:
  int dim() const { return points_.dim(); }
  Coord rank() const { return rank_; }
  const PointSet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool Contains(const LatticePoint& n) const { return points_.Contains(n); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  friend IndependenceSet IndependencePoints(const Polymatroid&);
  IndependenceSet(PointSet points, Coord rank)
      : points_(std::move(points)), rank_(rank) {}

  PointSet points_;
  Coord rank_ = 0;
};

// All n in the box 0 <= n_i <= rk({i}) with sum_{i in I} n_i <= rk(I) for
// every I. Cross-checked against the downward closure of the base points;
// a disagreement throws kInternalInvariantFailure.
IndependenceSet IndependencePoints(const Polymatroid& polymatroid);

// {n : n <= b componentwise for some b in the set}.
PointSet DownwardClosure(const PointSet& points);

// Base points u >= n. Requires n in the independence set
// (kNotInIndependence); the result is re-validated as M-convex.
Polymatroid Truncate(const Polymatroid& polymatroid, const LatticePoint& n);

// Members of maximal coordinate sum. Throws kEmptyInput.
PointSet TopElements(const PointSet& points);

// {n in A : n >= b}. May be empty.
PointSet TruncationSet(const PointSet& points, const LatticePoint& b);

struct CaveReport {
  bool is_cave = true;
  // 1: tops are not a polymatroid; 2: the set differs from the stalactite
  // union of its tops; 3: some truncation is not a generalized polymatroid.
  int failed_condition = 0;
  std::string detail;
  LexOrder order = LexOrder::Identity(1);

  explicit operator bool() const { return is_cave; }
};

// Checks the three cave conditions with the stalactite union taken under
// `order`. Truncations at nonzero b with an empty result are accepted.
CaveReport IsCave(const PointSet& points, const LexOrder& order);
CaveReport IsCave(const PointSet& points);

// One report per lexicographic order, in LexOrder::All order.
std::vector<CaveReport> IsCaveForAllOrders(const PointSet& points);

}  // namespace cavepoly

#endif  // CAVEPOLY_GEOMETRY_H_
