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

#include "cavepoly/errors.h"
#include "cavepoly/geometry.h"
#include "cavepoly/stalactite.h"

namespace cavepoly {
namespace {

std::string FirstDifference(const PointSet& actual, const PointSet& expected) {
  for (const LatticePoint& n : expected) {
    if (!actual.Contains(n)) return "missing " + n.ToString();
  }
  for (const LatticePoint& n : actual) {
    if (!expected.Contains(n)) return "unexpected " + n.ToString();
  }
  return "sets differ";
}

}  // namespace

CaveReport IsCave(const PointSet& points, const LexOrder& order) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "empty point set");
  if (order.dim() != points.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "lex order dimension");
  }
  CaveReport report;
  report.order = order;

  PointSet tops = TopElements(points);
  ExchangeCheck tops_check = IsMConvex(tops);
  if (!tops_check) {
    report.is_cave = false;
    report.failed_condition = 1;
    report.detail =
        "top elements are not a polymatroid: " + tops_check.witness->Describe();
    return report;
  }

  Polymatroid top_polymatroid = Polymatroid::FromPoints(tops);
  PointSet stalactite_union =
      DecomposeIntoStalactites(top_polymatroid, order).CaveSet(points.dim());
  if (stalactite_union != points) {
    report.is_cave = false;
    report.failed_condition = 2;
    report.detail = "not the stalactite union of its top elements: " +
                    FirstDifference(points, stalactite_union);
    return report;
  }

  // Nonempty truncations occur exactly at the nonzero b below some member.
  for (const LatticePoint& b : DownwardClosure(points)) {
    if (b.Degree() == 0) continue;
    PointSet truncated = TruncationSet(points, b);
    ExchangeCheck check = IsGeneralizedPolymatroid(truncated);
    if (!check) {
      report.is_cave = false;
      report.failed_condition = 3;
      report.detail =
          "truncation at " + b.ToString() +
          " is not a generalized polymatroid: " + check.witness->Describe();
      return report;
    }
  }
  return report;
}

CaveReport IsCave(const PointSet& points) {
  return IsCave(points, LexOrder::Identity(points.dim()));
}

std::vector<CaveReport> IsCaveForAllOrders(const PointSet& points) {
  std::vector<CaveReport> out;
  for (const LexOrder& order : LexOrder::All(points.dim())) {
    out.push_back(IsCave(points, order));
  }
  return out;
}

}  // namespace cavepoly
