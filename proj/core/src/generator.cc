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

#include "cavepoly/generator.h"

#include <algorithm>
#include <limits>
#include <random>

#include "cavepoly/errors.h"

namespace cavepoly {
namespace {

// Bounded draws from std::mt19937_64 without std distributions.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi] up to negligible modulo bias.
  Coord Between(Coord lo, Coord hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Coord>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<Coord> UniformTable(int p, Coord rank, const IntVector& cage) {
  std::vector<Coord> values(std::size_t{1} << p, 0);
  for (SubsetMask s = 1; s < values.size(); ++s) {
    values[s] = values[s & (s - 1)] + cage[__builtin_ctz(s)];
  }
  for (Coord& v : values) v = std::min(v, rank);
  return values;
}

bool WithinBounds(const GeneratorConfig& config,
                  const std::vector<Coord>& values) {
  if (values.back() > config.max_rank) return false;
  for (int i = 0; i < config.p; ++i) {
    if (values[SubsetMask{1} << i] > config.max_cage_entry) return false;
  }
  return true;
}

struct UniformDraw {
  IntVector cage;
  Coord rank;
};

UniformDraw DrawUniform(const GeneratorConfig& config, Draws& draws) {
  UniformDraw out;
  out.cage.resize(config.p);
  Coord total = 0;
  for (int i = 0; i < config.p; ++i) {
    out.cage[i] = draws.Between(0, config.max_cage_entry);
    total += out.cage[i];
  }
  out.rank = draws.Between(0, std::min<Coord>(config.max_rank, total));
  return out;
}

std::optional<RankFunction> TryValidate(int p, std::vector<Coord> values,
                                        std::optional<LatticePoint> cage) {
  try {
    return ValidateRankFunction(p, std::move(values), std::move(cage));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kAxiomViolation) return std::nullopt;
    throw;
  }
}

std::optional<RankFunction> DrawSubmodular(const GeneratorConfig& config,
                                           Draws& draws) {
  const int p = config.p;
  const int caps = static_cast<int>(draws.Between(1, 3));
  const Coord ceiling = draws.Between(0, config.max_rank);
  std::vector<Coord> offsets(caps);
  std::vector<IntVector> weights(caps, IntVector(p));
  for (int j = 0; j < caps; ++j) {
    offsets[j] = draws.Between(0, config.max_rank / 2);
    for (int i = 0; i < p; ++i) {
      weights[j][i] = draws.Between(0, config.max_cage_entry);
    }
  }
  std::vector<Coord> values(std::size_t{1} << p, 0);
  for (SubsetMask s = 1; s < values.size(); ++s) {
    Coord best = ceiling;
    for (int j = 0; j < caps; ++j) {
      Coord modular = offsets[j];
      for (int i = 0; i < p; ++i) {
        if (s >> i & 1) modular += weights[j][i];
      }
      best = std::min(best, modular);
    }
    values[s] = best;
  }
  if (!WithinBounds(config, values)) return std::nullopt;
  return TryValidate(p, std::move(values), std::nullopt);
}

std::optional<RankFunction> DrawLatticePath(const GeneratorConfig& config,
                                            Draws& draws) {
  const int p = config.p;
  UniformDraw base = DrawUniform(config, draws);
  std::vector<Coord> values = UniformTable(p, base.rank, base.cage);
  const SubsetMask full = FullMask(p);
  const int edits = static_cast<int>(draws.Between(1, 3));
  for (int k = 0; k < edits; ++k) {
    auto s = static_cast<SubsetMask>(draws.Between(1, full));
    Coord delta = draws.Between(0, 1) == 0 ? -1 : 1;
    values[s] += delta;
  }
  for (Coord v : values) {
    if (v < 0) return std::nullopt;
  }
  if (!WithinBounds(config, values)) return std::nullopt;
  return TryValidate(p, std::move(values), std::nullopt);
}

}  // namespace

std::string_view StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kSubmodularRejection:
      return "submodular-rejection";
    case Strategy::kUniformFamily:
      return "uniform-family";
    case Strategy::kLatticePath:
      return "lattice-path";
  }
  return "unknown";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : {Strategy::kSubmodularRejection, Strategy::kUniformFamily,
                     Strategy::kLatticePath}) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

void GeneratorConfig::Validate() const {
  if (p < 1 || p > kMaxRankDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator dimension out of range: " + std::to_string(p));
  }
  if (max_rank < 1 || max_cage_entry < 1) {
    throw Error(ErrorCode::kInvalidArgument, "generator bounds must be >= 1");
  }
}

std::string GeneratorConfig::ToString() const {
  return "seed=" + std::to_string(seed) + " p=" + std::to_string(p) +
         " max_rank=" + std::to_string(max_rank) +
         " max_cage_entry=" + std::to_string(max_cage_entry) +
         " strategy=" + std::string(StrategyName(strategy));
}

RankFunction RandomRankFunction(const GeneratorConfig& config) {
  config.Validate();
  Draws draws(config.seed);
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    std::optional<RankFunction> rk;
    switch (config.strategy) {
      case Strategy::kUniformFamily: {
        UniformDraw u = DrawUniform(config, draws);
        rk = TryValidate(config.p, UniformTable(config.p, u.rank, u.cage),
                         LatticePoint(u.cage));
        break;
      }
      case Strategy::kSubmodularRejection:
        rk = DrawSubmodular(config, draws);
        break;
      case Strategy::kLatticePath:
        rk = DrawLatticePath(config, draws);
        break;
    }
    if (rk) return *std::move(rk);
  }
  throw Error(ErrorCode::kGenerationExhausted,
              "no valid rank function after " +
                  std::to_string(kMaxGenerationAttempts) + " draws (" +
                  config.ToString() + ")");
}

Polymatroid RandomPolymatroid(const GeneratorConfig& config) {
  return PointsFromRank(RandomRankFunction(config));
}

Polymatroid UniformPolymatroid(Coord rank, const LatticePoint& cage) {
  if (rank < 0) throw Error(ErrorCode::kInvalidArgument, "negative rank");
  const int p = cage.dim();
  return PointsFromRank(
      ValidateRankFunction(p, UniformTable(p, rank, cage.coords()), cage));
}

Polymatroid NamedFamily(std::string_view name, const FamilyParams& params) {
  if (name == "running-example") {
    return Polymatroid::FromPoints(
        std::vector<LatticePoint>{{0, 3}, {1, 2}, {2, 1}});
  }
  if (name == "rank-zero") {
    if (params.p < 1) {
      throw Error(ErrorCode::kInvalidArgument, "rank-zero needs p >= 1");
    }
    return Polymatroid::FromPoints(
        std::vector<LatticePoint>{LatticePoint::Zero(params.p)});
  }
  if (name == "free" || name == "uniform") {
    if (params.cage.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " needs a cage");
    }
    LatticePoint cage(params.cage);
    if (name == "free") {
      return UniformPolymatroid(std::numeric_limits<Coord>::max() / 4, cage);
    }
    if (!params.rank) {
      throw Error(ErrorCode::kInvalidArgument, "uniform needs a rank");
    }
    return UniformPolymatroid(*params.rank, cage);
  }
  throw Error(ErrorCode::kUnknownFamily, std::string(name));
}

std::vector<std::string_view> FamilyNames() {
  return {"uniform", "free", "rank-zero", "running-example"};
}

}  // namespace cavepoly
