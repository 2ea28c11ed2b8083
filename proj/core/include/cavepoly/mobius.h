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

// The Möbius function of the poset of independence points (componentwise
// order) with a maximum adjoined.

#ifndef CAVEPOLY_MOBIUS_H_
#define CAVEPOLY_MOBIUS_H_

#include <cstdint>
#include <map>
#include <vector>

#include "cavepoly/geometry.h"
#include "cavepoly/lattice_point.h"
#include "cavepoly/multi_poly.h"
#include "cavepoly/polymatroid.h"

namespace cavepoly {

// Closed form on an interval [m, n] below the adjoined maximum: (-1)^j when
// n - m is a 0/1 vector with j ones, 0 otherwise. Throws kNotComparable
// unless m <= n.
int MobiusInterval(const LatticePoint& m, const LatticePoint& n);

// mu(m, a) for every independence point a >= m, computed from the defining
// recurrence mu(m, a) = -sum_{m <= b < a} mu(m, b) over the poset. Entries
// for a not above m are omitted.
std::map<LatticePoint, std::int64_t> MobiusIntervalsByRecurrence(
    const IndependenceSet& independence, const LatticePoint& m);

// n -> -mu(n, top) over the independence points.
class MobiusTable {
 public:
  // 0 for points outside the independence set.
  std::int64_t Value(const LatticePoint& n) const;
  const std::map<LatticePoint, std::int64_t>& values() const { return values_; }

 private:
  friend MobiusTable ComputeMobiusTable(const Polymatroid&);
  explicit MobiusTable(std::map<LatticePoint, std::int64_t> values)
      : values_(std::move(values)) {}

  std::map<LatticePoint, std::int64_t> values_;
};

// 1 on base points, 1 - sum_{m > n} value(m) on the rest of the independence
// set, filled in order of decreasing |n|.
MobiusTable ComputeMobiusTable(const Polymatroid& polymatroid);

// sum over independence points of value(n) t^n.
MultiPoly MobiusPolynomial(const Polymatroid& polymatroid);

}  // namespace cavepoly

#endif  // CAVEPOLY_MOBIUS_H_
