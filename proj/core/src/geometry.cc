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

#include "cavepoly/geometry.h"

#include <set>

#include "cavepoly/errors.h"

namespace cavepoly {
namespace {

// Calls fn(n) for every n with 0 <= n <= upper, last coordinate fastest.
template <typename Fn>
void ForEachInBox(const IntVector& upper, Fn&& fn) {
  const int p = static_cast<int>(upper.size());
  IntVector n(p, 0);
  while (true) {
    fn(n);
    int i = p - 1;
    while (i >= 0 && n[i] == upper[i]) {
      n[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++n[i];
  }
}

}  // namespace

int Indicator(const Polymatroid& polymatroid, std::span<const Coord> n) {
  if (static_cast<int>(n.size()) != polymatroid.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "indicator query of length " + std::to_string(n.size()));
  }
  return polymatroid.points().Contains(n) ? 1 : 0;
}

int Indicator(const Polymatroid& polymatroid, const LatticePoint& n) {
  return Indicator(polymatroid, std::span<const Coord>(n.coords()));
}

PointSet DownwardClosure(const PointSet& points) {
  std::set<IntVector> seen;
  for (const LatticePoint& b : points) {
    ForEachInBox(b.coords(), [&](const IntVector& n) { seen.insert(n); });
  }
  std::vector<LatticePoint> out;
  out.reserve(seen.size());
  for (const IntVector& n : seen) out.emplace_back(n);
  return PointSet(points.dim(), std::move(out));
}

IndependenceSet IndependencePoints(const Polymatroid& polymatroid) {
  const RankFunction& rk = polymatroid.rank_function();
  const int p = polymatroid.dim();
  IntVector upper(p);
  for (int i = 0; i < p; ++i) upper[i] = rk(SubsetMask{1} << i);
  const SubsetMask count = SubsetMask{1} << p;
  std::vector<Coord> sums(count, 0);
  std::vector<LatticePoint> found;
  ForEachInBox(upper, [&](const IntVector& n) {
    for (SubsetMask s = 1; s < count; ++s) {
      sums[s] = sums[s & (s - 1)] + n[__builtin_ctz(s)];
      if (sums[s] > rk(s)) return;
    }
    found.emplace_back(n);
  });
  PointSet points(p, std::move(found));
  if (points != DownwardClosure(polymatroid.points())) {
    throw Error(ErrorCode::kInternalInvariantFailure,
                "independence points disagree with the downward closure of "
                "the base points");
  }
  return IndependenceSet(std::move(points), polymatroid.rank());
}

Polymatroid Truncate(const Polymatroid& polymatroid, const LatticePoint& n) {
  if (n.dim() != polymatroid.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "truncation point length");
  }
  std::vector<LatticePoint> kept;
  for (const LatticePoint& u : polymatroid.points()) {
    if (ComponentwiseLeq(n, u)) kept.push_back(u);
  }
  // n is independent iff it lies below some base point.
  if (kept.empty()) {
    throw Error(ErrorCode::kNotInIndependence,
                n.ToString() + " is not in the independence polytope");
  }
  try {
    return Polymatroid::FromPoints(
        PointSet(polymatroid.dim(), std::move(kept)));
  } catch (const Error& e) {
    throw Error(
        ErrorCode::kInternalInvariantFailure,
        "truncation at " + n.ToString() + " is not a polymatroid: " + e.what());
  }
}

PointSet TopElements(const PointSet& points) {
  const Coord top = points.MaxDegree();
  std::vector<LatticePoint> out;
  for (const LatticePoint& n : points) {
    if (n.Degree() == top) out.push_back(n);
  }
  return PointSet(points.dim(), std::move(out));
}

PointSet TruncationSet(const PointSet& points, const LatticePoint& b) {
  if (b.dim() != points.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "truncation point length");
  }
  std::vector<LatticePoint> out;
  for (const LatticePoint& n : points) {
    if (ComponentwiseLeq(b, n)) out.push_back(n);
  }
  return PointSet(points.dim(), std::move(out));
}

}  // namespace cavepoly
