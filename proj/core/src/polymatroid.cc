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

#include "cavepoly/polymatroid.h"

#include <algorithm>

#include "cavepoly/checked_math.h"
#include "cavepoly/errors.h"

namespace cavepoly {
namespace {

bool ContainsSigned(const PointSet& set, const IntVector& v) {
  return set.Contains(std::span<const Coord>(v));
}

IntVector Shift(const LatticePoint& n, int i, Coord di, int j, Coord dj) {
  IntVector out = n.coords();
  out[i] += di;
  if (j >= 0) out[j] += dj;
  return out;
}

std::vector<Coord> RankTableOf(const PointSet& points) {
  const int p = points.dim();
  if (p > kMaxRankDimension) {
    throw Error(
        ErrorCode::kInvalidArgument,
        "rank functions support p <= " + std::to_string(kMaxRankDimension));
  }
  std::vector<Coord> values(std::size_t{1} << p, 0);
  for (const LatticePoint& n : points) {
    // Subset sums by lowest-bit recursion.
    std::vector<Coord> sums(values.size(), 0);
    for (SubsetMask s = 1; s < values.size(); ++s) {
      int low = __builtin_ctz(s);
      sums[s] = sums[s & (s - 1)] + n[low];
      values[s] = std::max(values[s], sums[s]);
    }
  }
  return values;
}

}  // namespace

std::string ExchangeWitness::Describe() const {
  std::string s = "condition " + condition + " fails for u=" + u.ToString() +
                  " v=" + v.ToString();
  if (i >= 0) s += " i=" + std::to_string(i + 1);
  return s;
}

ExchangeCheck IsMConvex(const PointSet& points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "empty point set");
  const int p = points.dim();
  const Coord degree = points[0].Degree();
  for (const LatticePoint& u : points) {
    if (u.Degree() != degree) {
      return {false, ExchangeWitness{"homogeneous", points[0], u, -1}};
    }
  }
  for (const LatticePoint& u : points) {
    for (const LatticePoint& v : points) {
      for (int i = 0; i < p; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (int j = 0; j < p && !found; ++j) {
          found = u[j] < v[j] && ContainsSigned(points, u.Exchanged(i, j));
        }
        if (!found) return {false, ExchangeWitness{"exchange", u, v, i}};
      }
    }
  }
  return {};
}

ExchangeCheck IsMConvex(const std::vector<LatticePoint>& points) {
  return IsMConvex(PointSet::FromPoints(points));
}

ExchangeCheck IsGeneralizedPolymatroid(const PointSet& points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "empty point set");
  const int p = points.dim();
  for (const LatticePoint& u : points) {
    const Coord du = u.Degree();
    for (const LatticePoint& v : points) {
      const Coord dv = v.Degree();
      // Condition (1): every i with u_i > v_i admits (a) or (b).
      for (int i = 0; i < p; ++i) {
        if (u[i] <= v[i]) continue;
        bool ok = false;
        for (int j = 0; j < p && !ok; ++j) {
          ok = u[j] < v[j] && ContainsSigned(points, Shift(u, i, -1, j, 1)) &&
               ContainsSigned(points, Shift(v, i, 1, j, -1));
        }
        if (!ok && du > dv) {
          ok = ContainsSigned(points, Shift(u, i, -1, -1, 0)) &&
               ContainsSigned(points, Shift(v, i, 1, -1, 0));
        }
        if (!ok) return {false, ExchangeWitness{"1", u, v, i}};
      }
      // Condition (2).
      if (du > dv) {
        bool ok = false;
        for (int j = 0; j < p && !ok; ++j) {
          ok = u[j] > v[j] && ContainsSigned(points, Shift(u, j, -1, -1, 0)) &&
               ContainsSigned(points, Shift(v, j, 1, -1, 0));
        }
        if (!ok) return {false, ExchangeWitness{"2", u, v, -1}};
      }
    }
  }
  return {};
}

ExchangeCheck IsGeneralizedPolymatroid(
    const std::vector<LatticePoint>& points) {
  return IsGeneralizedPolymatroid(PointSet::FromPoints(points));
}

PointSet Homogenize(const PointSet& points) {
  const Coord top = points.MaxDegree();
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (const LatticePoint& n : points) {
    IntVector coords = n.coords();
    coords.push_back(top - n.Degree());
    out.emplace_back(std::move(coords));
  }
  return PointSet(points.dim() + 1, std::move(out));
}

Polymatroid::Polymatroid(PointSet points, RankFunction rk)
    : points_(std::move(points)),
      rank_(rk.Rank()),
      cage_(rk.cage()),
      rank_function_(std::move(rk)) {}

Polymatroid Polymatroid::FromPoints(PointSet points,
                                    std::optional<LatticePoint> cage) {
  if (points.empty()) {
    throw Error(ErrorCode::kEmptyInput, "a polymatroid has at least one point");
  }
  ExchangeCheck check = IsMConvex(points);
  if (!check) throw Error(ErrorCode::kNotMConvex, check.witness->Describe());
  std::vector<Coord> values = RankTableOf(points);
  RankFunction rk =
      ValidateRankFunction(points.dim(), std::move(values), std::move(cage));
  return Polymatroid(std::move(points), std::move(rk));
}

Polymatroid Polymatroid::FromPoints(const std::vector<LatticePoint>& points) {
  return FromPoints(PointSet::FromPoints(points));
}

Polymatroid PointsFromRank(const RankFunction& rk) {
  const int p = rk.dim();
  const Coord total = rk.Rank();
  std::vector<LatticePoint> found;
  IntVector n(p, 0);
  // Depth-first over coordinates with n_i <= rk({i}) and the running sum
  // bounded by the total; full subset constraints are checked at the leaves.
  auto satisfies_all = [&]() {
    const SubsetMask count = SubsetMask{1} << p;
    std::vector<Coord> sums(count, 0);
    for (SubsetMask s = 1; s < count; ++s) {
      int low = __builtin_ctz(s);
      sums[s] = sums[s & (s - 1)] + n[low];
      if (sums[s] > rk(s)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, int i, Coord remaining) -> void {
    if (i == p - 1) {
      if (remaining > rk(SubsetMask{1} << i)) return;
      n[i] = remaining;
      if (satisfies_all()) found.emplace_back(n);
      return;
    }
    Coord cap = std::min(remaining, rk(SubsetMask{1} << i));
    for (Coord v = 0; v <= cap; ++v) {
      n[i] = v;
      self(self, i + 1, remaining - v);
    }
    n[i] = 0;
  };
  recurse(recurse, 0, total);
  if (found.empty()) {
    throw Error(ErrorCode::kInternalInvariantFailure,
                "rank function produced no base points");
  }
  PointSet points(p, std::move(found));
  ExchangeCheck check = IsMConvex(points);
  if (!check) {
    throw Error(ErrorCode::kInternalInvariantFailure,
                "enumerated base points are not M-convex: " +
                    check.witness->Describe());
  }
  return Polymatroid(std::move(points), rk);
}

RankFunction RankFromPoints(const Polymatroid& polymatroid) {
  return ValidateRankFunction(
      polymatroid.dim(), RankTableOf(polymatroid.points()), polymatroid.cage());
}

}  // namespace cavepoly
