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

// JSON documents for instances, polynomials and reports.
//
// Instance documents carry exactly one of
//   {"points": [[0,3],[1,2],[2,1]]}
//   {"rank": {"p": 2, "cage": [2,3],
//             "values": {"[]": 0, "[1]": 2, "[2]": 3, "[1,2]": 3}}}
// Subsets are sorted 1-based index lists. "cage" may be omitted, in which
// case the singleton ranks are used.
//
// All emitters produce a single line terminated by '\n'.

#ifndef CAVEPOLY_INSTANCE_IO_H_
#define CAVEPOLY_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "cavepoly/binomial_poly.h"
#include "cavepoly/lattice_point.h"
#include "cavepoly/mobius.h"
#include "cavepoly/multi_poly.h"
#include "cavepoly/polymatroid.h"
#include "cavepoly/rational_poly.h"
#include "cavepoly/verify.h"

namespace cavepoly {

// Throws kParseError (with a byte offset or a JSON path), kAxiomViolation or
// kNotMConvex.
Polymatroid ParseInstance(std::string_view text);

// Reads a "points" document without validating it as a polymatroid. A
// "rank" document is validated and converted. Throws kParseError.
PointSet ParsePointSet(std::string_view text);

enum class InstanceForm { kPoints, kRank };

std::string SerializeInstance(const Polymatroid& polymatroid,
                              InstanceForm form = InstanceForm::kPoints);
std::string SerializePointSet(const PointSet& points);

// {"basis", "terms": [{"exponents", "coefficient"}], "canonical"}; terms in
// canonical order. Binomial documents also record "shift". Non-integer
// rational coefficients are written as "p/q" strings.
std::string PolynomialDocument(const MultiPoly& poly);
std::string PolynomialDocument(const BinomialBasisPoly& poly);
std::string PolynomialDocument(const RationalPoly& poly);

// {"mobius": [{"point": [...], "value": mu}, ...]} in point order.
std::string MobiusTableDocument(const MobiusTable& table);

std::string ReportDocument(const VerificationReport& report);
std::string ReportDocument(const CampaignReport& report);

}  // namespace cavepoly

#endif  // CAVEPOLY_INSTANCE_IO_H_
