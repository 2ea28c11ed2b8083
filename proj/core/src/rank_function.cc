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

#include "cavepoly/rank_function.h"

#include <sstream>

#include "cavepoly/checked_math.h"
#include "cavepoly/errors.h"

namespace cavepoly {

std::vector<int> SubsetElements(SubsetMask s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1) out.push_back(i + 1);
  }
  return out;
}

std::string SubsetToString(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int e : SubsetElements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string_view AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kNormalized:
      return "normalized";
    case Axiom::kCageBound:
      return "cage-bound";
    case Axiom::kMonotone:
      return "monotone";
    case Axiom::kSubmodular:
      return "submodular";
  }
  return "unknown";
}

std::string AxiomViolation::Describe() const {
  std::ostringstream os;
  os << AxiomName(axiom);
  switch (axiom) {
    case Axiom::kNormalized:
      os << ": rk({}) != 0";
      break;
    case Axiom::kCageBound:
      os << ": rk(" << SubsetToString(first) << ") exceeds the cage";
      break;
    case Axiom::kMonotone:
      os << ": rk(" << SubsetToString(first) << ") > rk("
         << SubsetToString(second) << ")";
      break;
    case Axiom::kSubmodular:
      os << ": I1=" << SubsetToString(first)
         << " I2=" << SubsetToString(second);
      break;
  }
  return os.str();
}

std::vector<AxiomViolation> FindAxiomViolations(int p,
                                                std::span<const Coord> values,
                                                const LatticePoint& cage) {
  std::vector<AxiomViolation> out;
  const SubsetMask count = SubsetMask{1} << p;
  if (values[0] != 0) out.push_back({Axiom::kNormalized, 0, 0});
  for (int i = 0; i < p; ++i) {
    SubsetMask single = SubsetMask{1} << i;
    if (values[single] > cage[i]) {
      out.push_back({Axiom::kCageBound, single, single});
    }
  }
  for (SubsetMask s = 0; s < count; ++s) {
    for (int i = 0; i < p; ++i) {
      SubsetMask bit_i = SubsetMask{1} << i;
      if (s & bit_i) continue;
      if (values[s] > values[s | bit_i]) {
        out.push_back({Axiom::kMonotone, s, s | bit_i});
      }
      for (int j = i + 1; j < p; ++j) {
        SubsetMask bit_j = SubsetMask{1} << j;
        if (s & bit_j) continue;
        // rk(S+i) + rk(S+j) >= rk(S+i+j) + rk(S)
        Coord lhs = CheckedAdd(values[s | bit_i], values[s | bit_j]);
        Coord rhs = CheckedAdd(values[s | bit_i | bit_j], values[s]);
        if (lhs < rhs) {
          out.push_back({Axiom::kSubmodular, s | bit_i, s | bit_j});
        }
      }
    }
  }
  return out;
}

RankFunction ValidateRankFunction(int p, std::vector<Coord> values,
                                  std::optional<LatticePoint> cage) {
  if (p < 1 || p > kMaxRankDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "rank functions support 1 <= p <= " +
                    std::to_string(kMaxRankDimension) + ", got " +
                    std::to_string(p));
  }
  if (values.size() != (std::size_t{1} << p)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "rank table has " + std::to_string(values.size()) +
                    " entries, expected 2^" + std::to_string(p));
  }
  if (!cage) {
    IntVector singles(p);
    for (int i = 0; i < p; ++i) {
      singles[i] = std::max<Coord>(0, values[SubsetMask{1} << i]);
    }
    cage = LatticePoint(std::move(singles));
  }
  if (cage->dim() != p) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cage has length " + std::to_string(cage->dim()) +
                    ", expected " + std::to_string(p));
  }
  std::vector<AxiomViolation> violations =
      FindAxiomViolations(p, values, *cage);
  if (!violations.empty()) {
    std::string message;
    constexpr std::size_t kMaxListed = 8;
    for (std::size_t k = 0; k < violations.size() && k < kMaxListed; ++k) {
      if (k > 0) message += "; ";
      message += violations[k].Describe();
    }
    if (violations.size() > kMaxListed) {
      message +=
          "; and " + std::to_string(violations.size() - kMaxListed) + " more";
    }
    throw Error(ErrorCode::kAxiomViolation, message);
  }
  return RankFunction(p, std::move(values), std::move(*cage));
}

}  // namespace cavepoly
