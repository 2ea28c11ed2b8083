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

#include "cavepoly/stalactite.h"

#include <algorithm>

#include "cavepoly/errors.h"

namespace cavepoly {
namespace {

void RequireBasePoint(const Polymatroid& polymatroid, const LatticePoint& u) {
  if (u.dim() != polymatroid.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "point length");
  }
  if (!polymatroid.Contains(u)) {
    throw Error(ErrorCode::kNotABasePoint, u.ToString());
  }
}

// Index of the coordinate where w - u = -e_l + e_j, or -1.
int RemovedDirection(const LatticePoint& u, const LatticePoint& w) {
  int removed = -1;
  int added = -1;
  for (int i = 0; i < u.dim(); ++i) {
    Coord d = w[i] - u[i];
    if (d == 0) continue;
    if (d == -1 && removed < 0) {
      removed = i;
    } else if (d == 1 && added < 0) {
      added = i;
    } else {
      return -1;
    }
  }
  return added >= 0 ? removed : -1;
}

}  // namespace

std::vector<Neighbor> Neighbors(const Polymatroid& polymatroid,
                                const LatticePoint& u) {
  RequireBasePoint(polymatroid, u);
  std::vector<Neighbor> out;
  const int p = polymatroid.dim();
  for (int l = 0; l < p; ++l) {
    if (u[l] == 0) continue;
    for (int j = 0; j < p; ++j) {
      if (j == l) continue;
      IntVector w = u.Exchanged(l, j);
      if (polymatroid.points().Contains(std::span<const Coord>(w))) {
        out.push_back({l, j, LatticePoint(std::move(w))});
      }
    }
  }
  return out;
}

Stalactite::Stalactite(LatticePoint apex, SubsetMask directions)
    : apex_(std::move(apex)), directions_(directions) {
  for (int l : SubsetElements(directions_)) {
    if (l > apex_.dim() || apex_[l - 1] < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "stalactite direction " + std::to_string(l) +
                      " outside the support of " + apex_.ToString());
    }
  }
  // Enumerate submasks of the direction set.
  SubsetMask k = directions_;
  while (true) {
    IntVector n = apex_.coords();
    for (int l : SubsetElements(k)) n[l - 1] -= 1;
    members_.emplace_back(std::move(n));
    if (k == 0) break;
    k = (k - 1) & directions_;
  }
  std::sort(members_.begin(), members_.end());
}

bool Stalactite::Contains(const LatticePoint& n) const {
  return std::binary_search(members_.begin(), members_.end(), n);
}

Stalactite MakeStalactite(const LatticePoint& u,
                          std::span<const LatticePoint> earlier,
                          const Polymatroid& polymatroid) {
  RequireBasePoint(polymatroid, u);
  SubsetMask directions = 0;
  for (const LatticePoint& w : earlier) {
    RequireBasePoint(polymatroid, w);
    int l = RemovedDirection(u, w);
    if (l >= 0) directions |= SubsetMask{1} << l;
  }
  return Stalactite(u, directions);
}

PointSet StalactiteDecomposition::CaveSet(int p) const {
  std::vector<LatticePoint> all;
  for (const Stalactite& s : stalactites) {
    all.insert(all.end(), s.members().begin(), s.members().end());
  }
  return PointSet(p, std::move(all));
}

StalactiteDecomposition DecomposeIntoStalactites(const Polymatroid& polymatroid,
                                                 const LexOrder& order) {
  const int p = polymatroid.dim();
  if (order.dim() != p) {
    throw Error(ErrorCode::kDimensionMismatch, "lex order dimension");
  }
  std::vector<LatticePoint> sorted = polymatroid.points().points();
  std::sort(sorted.begin(), sorted.end(),
            [&](const LatticePoint& a, const LatticePoint& b) {
              return order.Less(a, b);
            });
  StalactiteDecomposition out{order, {}};
  out.stalactites.reserve(sorted.size());
  for (const LatticePoint& u : sorted) {
    // Earlier base points are exactly the neighbors that precede u.
    SubsetMask directions = 0;
    for (int l = 0; l < p; ++l) {
      if (u[l] == 0) continue;
      for (int j = 0; j < p && !(directions >> l & 1); ++j) {
        if (j == l) continue;
        IntVector w = u.Exchanged(l, j);
        if (polymatroid.points().Contains(std::span<const Coord>(w)) &&
            order.Less(w, u)) {
          directions |= SubsetMask{1} << l;
        }
      }
    }
    out.stalactites.emplace_back(u, directions);
  }
  return out;
}

std::map<LatticePoint, std::int64_t> StalactiteCounts(
    const Polymatroid& polymatroid, const LexOrder& order) {
  std::map<LatticePoint, std::int64_t> counts;
  for (const Stalactite& s :
       DecomposeIntoStalactites(polymatroid, order).stalactites) {
    for (const LatticePoint& n : s.members()) ++counts[n];
  }
  return counts;
}

MultiPoly StalactitePolynomial(const Polymatroid& polymatroid,
                               const LexOrder& order) {
  MultiPoly out(polymatroid.dim());
  for (const auto& [n, count] : StalactiteCounts(polymatroid, order)) {
    bool odd = (polymatroid.rank() - n.Degree()) % 2 != 0;
    out.AddTerm(n.coords(), odd ? -count : count);
  }
  return out;
}

MultiPoly StalactitePolynomial(const Polymatroid& polymatroid) {
  return StalactitePolynomial(polymatroid,
                              LexOrder::Identity(polymatroid.dim()));
}

}  // namespace cavepoly
