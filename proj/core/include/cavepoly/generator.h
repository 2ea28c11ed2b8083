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

#ifndef CAVEPOLY_GENERATOR_H_
#define CAVEPOLY_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cavepoly/lattice_point.h"
#include "cavepoly/polymatroid.h"
#include "cavepoly/rank_function.h"

namespace cavepoly {

enum class Strategy {
  // Minimum of a few random modular caps, resampled until submodular.
  kSubmodularRejection,
  // rk(I) = min(r, sum_{i in I} m_i).
  kUniformFamily,
  // A uniform family with a few random +-1 edits, resampled until valid.
  kLatticePath,
};

std::string_view StrategyName(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view name);

inline constexpr int kMaxGenerationAttempts = 10000;

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int p = 3;
  int max_rank = 6;
  int max_cage_entry = 5;
  Strategy strategy = Strategy::kUniformFamily;

  // Throws kInvalidArgument unless 1 <= p <= kMaxRankDimension and the
  // bounds are positive.
  void Validate() const;
  std::string ToString() const;
};

// Deterministic in the config. The result has rank <= max_rank and cage
// entries <= max_cage_entry. Throws kGenerationExhausted after
// kMaxGenerationAttempts rejected draws.
RankFunction RandomRankFunction(const GeneratorConfig& config);
Polymatroid RandomPolymatroid(const GeneratorConfig& config);

// rk(I) = min(r, sum_{i in I} m_i) with cage m.
Polymatroid UniformPolymatroid(Coord rank, const LatticePoint& cage);

struct FamilyParams {
  int p = 0;
  std::optional<Coord> rank;
  std::vector<Coord> cage;
};

// "uniform" (rank, cage), "free" (cage; the single point m), "rank-zero" (p),
// "running-example" (no parameters). Throws kUnknownFamily or
// kInvalidArgument for missing parameters.
Polymatroid NamedFamily(std::string_view name, const FamilyParams& params);

std::vector<std::string_view> FamilyNames();

}  // namespace cavepoly

#endif  // CAVEPOLY_GENERATOR_H_
