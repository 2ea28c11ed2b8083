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

#ifndef CAVEPOLY_LATTICE_POINT_H_
#define CAVEPOLY_LATTICE_POINT_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cavepoly {

using Coord = std::int64_t;

// A signed integer vector. Used for shifted points n - e_i + e_j that may
// leave the nonnegative orthant, and for transient exponent vectors.
using IntVector = std::vector<Coord>;

// A point of N^p. Coordinates are 0-indexed internally; user-facing text uses
// 1-based names (t1..tp).
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(IntVector coords);
  LatticePoint(std::initializer_list<Coord> coords);

  static LatticePoint Zero(int p);
  // nullopt when some entry is negative.
  static std::optional<LatticePoint> FromSigned(std::span<const Coord> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  Coord operator[](int i) const { return coords_[i]; }
  const IntVector& coords() const { return coords_; }

  // |n|, the coordinate sum.
  Coord Degree() const;

  // n + delta * e_i as a signed vector.
  IntVector Plus(int i, Coord delta = 1) const;
  // n - e_minus + e_plus as a signed vector.
  IntVector Exchanged(int minus, int plus) const;

  std::string ToString() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  IntVector coords_;
};

// a <= b in every coordinate. Dimensions must agree.
bool ComponentwiseLeq(const LatticePoint& a, const LatticePoint& b);

// A finite set of equal-length lattice points, stored sorted (standard
// lexicographic order) with constant-time membership for compact sets.
class PointSet {
 public:
  PointSet() = default;
  // Throws kDimensionMismatch when a point's length differs from p.
  PointSet(int p, std::vector<LatticePoint> points);
  // Infers p from the first point; throws kEmptyInput on an empty list.
  static PointSet FromPoints(std::vector<LatticePoint> points);

  int dim() const { return p_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

  bool Contains(const LatticePoint& n) const;
  // Signed query: vectors with a negative entry are never members.
  bool Contains(std::span<const Coord> n) const;

  // Largest coordinate sum; requires a nonempty set.
  Coord MaxDegree() const;

  // "{(0,3),(1,2)}".
  std::string ToString() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.p_ == b.p_ && a.points_ == b.points_;
  }

 private:
  void BuildIndex();
  std::optional<std::size_t> DenseOffset(std::span<const Coord> n) const;

  int p_ = 0;
  std::vector<LatticePoint> points_;
  // Dense membership bitmap over the bounding box [0, upper_].
  IntVector upper_;
  std::vector<bool> dense_;
};

}  // namespace cavepoly

#endif  // CAVEPOLY_LATTICE_POINT_H_
