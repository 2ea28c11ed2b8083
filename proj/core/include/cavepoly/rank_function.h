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

#ifndef CAVEPOLY_RANK_FUNCTION_H_
#define CAVEPOLY_RANK_FUNCTION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cavepoly/lattice_point.h"

namespace cavepoly {

// Subsets of [p] as bitmasks; bit i stands for element i+1.
using SubsetMask = std::uint32_t;

// Rank-function tables have 2^p entries.
inline constexpr int kMaxRankDimension = 16;

inline SubsetMask FullMask(int p) { return (SubsetMask{1} << p) - 1; }

// "{1,3}" style rendering, 1-based.
std::string SubsetToString(SubsetMask s);
// Sorted 1-based element list.
std::vector<int> SubsetElements(SubsetMask s);

enum class Axiom { kNormalized, kCageBound, kMonotone, kSubmodular };

std::string_view AxiomName(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  // Witness subsets. For kNormalized both are the empty set; for kCageBound
  // both are the offending singleton; for kMonotone first is a subset of
  // second; for kSubmodular the pair (I1, I2).
  SubsetMask first = 0;
  SubsetMask second = 0;

  std::string Describe() const;
  friend bool operator==(const AxiomViolation&,
                         const AxiomViolation&) = default;
};

// A validated polymatroid rank function on subsets of [p].
class RankFunction {
 public:
  int dim() const { return p_; }
  Coord operator()(SubsetMask s) const { return values_[s]; }
  // rk([p]).
  Coord Rank() const { return values_.back(); }
  const LatticePoint& cage() const { return cage_; }
  const std::vector<Coord>& values() const { return values_; }

  friend bool operator==(const RankFunction&, const RankFunction&) = default;

 private:
  friend RankFunction ValidateRankFunction(int, std::vector<Coord>,
                                           std::optional<LatticePoint>);
  RankFunction(int p, std::vector<Coord> values, LatticePoint cage)
      : p_(p), values_(std::move(values)), cage_(std::move(cage)) {}

  int p_ = 0;
  std::vector<Coord> values_;
  LatticePoint cage_;
};

// Every axiom failure, each with a witnessing subset pair. Monotonicity and
// submodularity are checked through their local forms (single-element
// extensions), which are equivalent to the pairwise statements and keep the
// scan at O(2^p p^2).
std::vector<AxiomViolation> FindAxiomViolations(int p,
                                                std::span<const Coord> values,
                                                const LatticePoint& cage);

// Throws kDimensionMismatch when the table or cage has the wrong size and
// kAxiomViolation listing every violation otherwise. A missing cage defaults
// to the singleton ranks.
RankFunction ValidateRankFunction(int p, std::vector<Coord> values,
                                  std::optional<LatticePoint> cage = {});

}  // namespace cavepoly

#endif  // CAVEPOLY_RANK_FUNCTION_H_
