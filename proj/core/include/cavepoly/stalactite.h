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

// Neighbors, stalactites and the stalactite decomposition of a polymatroid.
//
// A stalactite St(u; J) = {u - e_K : K subset of J} hangs below the base
// point u in the directions J. Sorting the base points a_1 < ... < a_r by a
// lexicographic order and taking J_k as the directions l in which a_k has a
// neighbor a_k - e_l + e_j among a_1..a_{k-1} decomposes the cave of the
// polymatroid. The signed count of stalactites through each point is
// independent of the order.

#ifndef CAVEPOLY_STALACTITE_H_
#define CAVEPOLY_STALACTITE_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cavepoly/lattice_point.h"
#include "cavepoly/lex_order.h"
#include "cavepoly/multi_poly.h"
#include "cavepoly/polymatroid.h"
#include "cavepoly/rank_function.h"

namespace cavepoly {

// w = u - e_removed + e_added, a base point. Indices are 0-based.
struct Neighbor {
  int removed;
  int added;
  LatticePoint point;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// All neighbors of the base point u, ordered by (removed, added). Throws
// kNotABasePoint.
std::vector<Neighbor> Neighbors(const Polymatroid& polymatroid,
                                const LatticePoint& u);

class Stalactite {
 public:
  // Throws kInvalidArgument if apex_l = 0 for a direction l.
  Stalactite(LatticePoint apex, SubsetMask directions);

  const LatticePoint& apex() const { return apex_; }
  SubsetMask directions() const { return directions_; }
  // apex - e_K for every K within the directions; 2^|directions| points.
  const std::vector<LatticePoint>& members() const { return members_; }
  bool Contains(const LatticePoint& n) const;

 private:
  LatticePoint apex_;
  SubsetMask directions_;
  std::vector<LatticePoint> members_;
};

// St(u; V): directions are the l for which some w in V equals
// u - e_l + e_j. Throws kNotABasePoint unless u and all of V are base points.
Stalactite MakeStalactite(const LatticePoint& u,
                          std::span<const LatticePoint> earlier,
                          const Polymatroid& polymatroid);

struct StalactiteDecomposition {
  LexOrder order;
  // Base points in increasing order; stalactites[k] hangs from the k-th.
  std::vector<Stalactite> stalactites;

  // Union of all members.
  PointSet CaveSet(int p) const;
};

StalactiteDecomposition DecomposeIntoStalactites(const Polymatroid& polymatroid,
                                                 const LexOrder& order);

// c_n: number of stalactites containing n, over points with c_n > 0.
std::map<LatticePoint, std::int64_t> StalactiteCounts(
    const Polymatroid& polymatroid, const LexOrder& order);

// sum_n (-1)^(rk - |n|) c_n t^n.
MultiPoly StalactitePolynomial(const Polymatroid& polymatroid,
                               const LexOrder& order);
MultiPoly StalactitePolynomial(const Polymatroid& polymatroid);

}  // namespace cavepoly

#endif  // CAVEPOLY_STALACTITE_H_
