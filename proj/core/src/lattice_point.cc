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

#include "cavepoly/lattice_point.h"

#include <algorithm>

#include "cavepoly/checked_math.h"
#include "cavepoly/errors.h"

namespace cavepoly {
namespace {

constexpr std::size_t kMaxDenseVolume = std::size_t{1} << 22;

}  // namespace

LatticePoint::LatticePoint(IntVector coords) : coords_(std::move(coords)) {
  for (Coord c : coords_) {
    if (c < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lattice point has a negative coordinate");
    }
  }
}

LatticePoint::LatticePoint(std::initializer_list<Coord> coords)
    : LatticePoint(IntVector(coords)) {}

LatticePoint LatticePoint::Zero(int p) { return LatticePoint(IntVector(p, 0)); }

std::optional<LatticePoint> LatticePoint::FromSigned(
    std::span<const Coord> coords) {
  for (Coord c : coords) {
    if (c < 0) return std::nullopt;
  }
  return LatticePoint(IntVector(coords.begin(), coords.end()));
}

Coord LatticePoint::Degree() const {
  Coord sum = 0;
  for (Coord c : coords_) sum = CheckedAdd(sum, c);
  return sum;
}

IntVector LatticePoint::Plus(int i, Coord delta) const {
  IntVector out = coords_;
  out[i] = CheckedAdd(out[i], delta);
  return out;
}

IntVector LatticePoint::Exchanged(int minus, int plus) const {
  IntVector out = coords_;
  out[minus] -= 1;
  out[plus] = CheckedAdd(out[plus], 1);
  return out;
}

std::string LatticePoint::ToString() const {
  std::string s = "(";
  for (int i = 0; i < dim(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

bool ComponentwiseLeq(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                a.ToString() + " vs " + b.ToString());
  }
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

PointSet::PointSet(int p, std::vector<LatticePoint> points)
    : p_(p), points_(std::move(points)) {
  if (p_ < 1)
    throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  for (const LatticePoint& n : points_) {
    if (n.dim() != p_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "point " + n.ToString() + " has length " +
                      std::to_string(n.dim()) + ", expected " +
                      std::to_string(p_));
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  BuildIndex();
}

PointSet PointSet::FromPoints(std::vector<LatticePoint> points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "empty point set");
  int p = points.front().dim();
  return PointSet(p, std::move(points));
}

void PointSet::BuildIndex() {
  if (points_.empty()) return;
  upper_.assign(p_, 0);
  for (const LatticePoint& n : points_) {
    for (int i = 0; i < p_; ++i) upper_[i] = std::max(upper_[i], n[i]);
  }
  std::size_t volume = 1;
  for (Coord u : upper_) {
    volume *= static_cast<std::size_t>(u) + 1;
    if (volume > kMaxDenseVolume) {
      upper_.clear();
      return;
    }
  }
  dense_.assign(volume, false);
  for (const LatticePoint& n : points_) dense_[*DenseOffset(n.coords())] = true;
}

std::optional<std::size_t> PointSet::DenseOffset(
    std::span<const Coord> n) const {
  std::size_t offset = 0;
  for (int i = 0; i < p_; ++i) {
    if (n[i] < 0 || n[i] > upper_[i]) return std::nullopt;
    offset = offset * (static_cast<std::size_t>(upper_[i]) + 1) +
             static_cast<std::size_t>(n[i]);
  }
  return offset;
}

bool PointSet::Contains(const LatticePoint& n) const {
  return Contains(std::span<const Coord>(n.coords()));
}

bool PointSet::Contains(std::span<const Coord> n) const {
  if (static_cast<int>(n.size()) != p_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "query of length " + std::to_string(n.size()) +
                    " against a set of dimension " + std::to_string(p_));
  }
  if (points_.empty()) return false;
  if (!dense_.empty()) {
    auto offset = DenseOffset(n);
    return offset && dense_[*offset];
  }
  auto as_point = LatticePoint::FromSigned(n);
  return as_point &&
         std::binary_search(points_.begin(), points_.end(), *as_point);
}

Coord PointSet::MaxDegree() const {
  if (points_.empty()) throw Error(ErrorCode::kEmptyInput, "empty point set");
  Coord best = 0;
  for (const LatticePoint& n : points_) best = std::max(best, n.Degree());
  return best;
}

std::string PointSet::ToString() const {
  std::string out = "{";
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (k > 0) out += ",";
    out += points_[k].ToString();
  }
  return out + "}";
}

}  // namespace cavepoly
