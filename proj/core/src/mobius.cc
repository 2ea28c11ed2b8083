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

#include <algorithm>

#include "cavepoly/checked_math.h"
#include "cavepoly/errors.h"

namespace cavepoly {

int MobiusInterval(const LatticePoint& m, const LatticePoint& n) {
  if (!ComponentwiseLeq(m, n)) {
    throw Error(ErrorCode::kNotComparable,
                m.ToString() + " is not below " + n.ToString());
  }
  int ones = 0;
  for (int i = 0; i < m.dim(); ++i) {
    Coord d = n[i] - m[i];
    if (d > 1) return 0;
    ones += static_cast<int>(d);
  }
  return ones % 2 == 0 ? 1 : -1;
}

std::map<LatticePoint, std::int64_t> MobiusIntervalsByRecurrence(
    const IndependenceSet& independence, const LatticePoint& m) {
  std::map<LatticePoint, std::int64_t> mu;
  if (!independence.Contains(m)) return mu;
  const int p = independence.dim();
  // Dense table over the box [m, upper]. The independence set is downward
  // closed, so every interval [m, a] lies inside it.
  IntVector upper(p, 0);
  for (const LatticePoint& a : independence) {
    for (int i = 0; i < p; ++i) upper[i] = std::max(upper[i], a[i]);
  }
  IntVector extent(p);
  std::size_t volume = 1;
  for (int i = 0; i < p; ++i) {
    extent[i] = upper[i] - m[i] + 1;
    volume *= static_cast<std::size_t>(extent[i]);
  }
  std::vector<std::int64_t> table(volume, 0);
  auto offset = [&](const IntVector& b) {
    std::size_t off = 0;
    for (int i = 0; i < p; ++i) {
      off = off * static_cast<std::size_t>(extent[i]) +
            static_cast<std::size_t>(b[i] - m[i]);
    }
    return off;
  };
  // PointSet order is lexicographic, a linear extension of the componentwise
  // order, so every b < a is finished before a.
  IntVector b(p);
  for (const LatticePoint& a : independence) {
    if (!ComponentwiseLeq(m, a)) continue;
    std::int64_t value = 1;
    if (a != m) {
      std::int64_t sum = 0;
      b = m.coords();
      while (true) {
        if (b != a.coords()) sum = CheckedAdd(sum, table[offset(b)]);
        int i = p - 1;
        while (i >= 0 && b[i] == a[i]) {
          b[i] = m[i];
          --i;
        }
        if (i < 0) break;
        ++b[i];
      }
      value = CheckedNeg(sum);
    }
    table[offset(a.coords())] = value;
    mu.emplace(a, value);
  }
  return mu;
}

std::int64_t MobiusTable::Value(const LatticePoint& n) const {
  auto it = values_.find(n);
  return it == values_.end() ? 0 : it->second;
}

MobiusTable ComputeMobiusTable(const Polymatroid& polymatroid) {
  IndependenceSet independence = IndependencePoints(polymatroid);
  std::vector<LatticePoint> order = independence.points().points();
  std::stable_sort(order.begin(), order.end(),
                   [](const LatticePoint& a, const LatticePoint& b) {
                     return a.Degree() > b.Degree();
                   });
  std::map<LatticePoint, std::int64_t> values;
  std::vector<std::pair<const LatticePoint*, std::int64_t>> done;
  done.reserve(order.size());
  for (const LatticePoint& n : order) {
    std::int64_t value = 1;
    if (!polymatroid.Contains(n)) {
      // Everything strictly above n has larger degree and is already done.
      for (const auto& [m, mu] : done) {
        if (ComponentwiseLeq(n, *m)) value = CheckedSub(value, mu);
      }
    }
    values.emplace(n, value);
    done.emplace_back(&n, value);
  }
  return MobiusTable(std::move(values));
}

MultiPoly MobiusPolynomial(const Polymatroid& polymatroid) {
  MultiPoly out(polymatroid.dim());
  MobiusTable table = ComputeMobiusTable(polymatroid);
  for (const auto& [n, mu] : table.values()) {
    out.AddTerm(n.coords(), mu);
  }
  return out;
}

}  // namespace cavepoly
