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

#include "cavepoly/instance_io.h"

#include <limits>
#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "cavepoly/errors.h"
#include "cavepoly/rank_function.h"

namespace cavepoly {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    ParseFail("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

Coord ReadInteger(const json& value, const std::string& where) {
  if (!value.is_number_integer()) ParseFail(where, "expected an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<Coord>::max())) {
    ParseFail(where, "integer out of range");
  }
  return value.get<Coord>();
}

Coord ReadNonNegative(const json& value, const std::string& where) {
  Coord v = ReadInteger(value, where);
  if (v < 0) ParseFail(where, "expected a nonnegative integer");
  return v;
}

IntVector ReadVector(const json& value, const std::string& where) {
  if (!value.is_array()) ParseFail(where, "expected an array");
  IntVector out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ReadNonNegative(value[i], where + "/" + std::to_string(i)));
  }
  return out;
}

const json& OnlyKey(const json& doc, const char* key) {
  if (!doc.is_object()) ParseFail("/", "expected an object");
  const bool has_points = doc.contains("points");
  const bool has_rank = doc.contains("rank");
  if (has_points == has_rank) {
    ParseFail("/", "expected exactly one of \"points\" or \"rank\"");
  }
  if (!doc.contains(key))
    ParseFail("/", std::string("missing \"") + key + "\"");
  return doc.at(key);
}

PointSet ReadPoints(const json& list) {
  const std::string where = "/points";
  if (!list.is_array()) ParseFail(where, "expected an array of points");
  if (list.empty()) ParseFail(where, "empty point list");
  std::vector<LatticePoint> points;
  std::size_t p = 0;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    IntVector v = ReadVector(list[k], at);
    if (v.empty()) ParseFail(at, "zero-length point");
    if (k == 0) p = v.size();
    if (v.size() != p) {
      ParseFail(at, "length " + std::to_string(v.size()) + ", expected " +
                        std::to_string(p));
    }
    points.emplace_back(std::move(v));
  }
  return PointSet(static_cast<int>(p), std::move(points));
}

SubsetMask ReadSubsetKey(const std::string& key, int p,
                         const std::string& where) {
  json parsed;
  try {
    parsed = json::parse(key);
  } catch (const json::parse_error&) {
    ParseFail(where, "subset key is not a JSON list");
  }
  if (!parsed.is_array()) ParseFail(where, "subset key is not a JSON list");
  SubsetMask mask = 0;
  Coord previous = 0;
  for (const json& e : parsed) {
    Coord i = ReadInteger(e, where);
    if (i < 1 || i > p)
      ParseFail(where, "index out of range 1.." + std::to_string(p));
    if (i <= previous) ParseFail(where, "subset indices must be increasing");
    previous = i;
    mask |= SubsetMask{1} << (i - 1);
  }
  return mask;
}

RankFunction ReadRank(const json& rank) {
  const std::string where = "/rank";
  if (!rank.is_object()) ParseFail(where, "expected an object");
  if (!rank.contains("p")) ParseFail(where, "missing \"p\"");
  Coord p = ReadInteger(rank.at("p"), where + "/p");
  if (p < 1 || p > kMaxRankDimension) {
    ParseFail(where + "/p",
              "dimension must be in 1.." + std::to_string(kMaxRankDimension));
  }
  std::optional<LatticePoint> cage;
  if (rank.contains("cage")) {
    IntVector c = ReadVector(rank.at("cage"), where + "/cage");
    if (static_cast<Coord>(c.size()) != p) {
      ParseFail(where + "/cage", "expected " + std::to_string(p) + " entries");
    }
    cage = LatticePoint(std::move(c));
  }
  if (!rank.contains("values") || !rank.at("values").is_object()) {
    ParseFail(where + "/values", "expected an object");
  }
  const int dim = static_cast<int>(p);
  std::vector<Coord> values(std::size_t{1} << dim, 0);
  std::vector<bool> seen(values.size(), false);
  for (const auto& [key, value] : rank.at("values").items()) {
    const std::string at = where + "/values/" + key;
    SubsetMask s = ReadSubsetKey(key, dim, at);
    if (seen[s]) ParseFail(at, "duplicate subset");
    seen[s] = true;
    values[s] = ReadInteger(value, at);
  }
  for (SubsetMask s = 0; s < values.size(); ++s) {
    if (!seen[s]) {
      std::vector<int> elems = SubsetElements(s);
      ParseFail(where + "/values", "missing subset " + json(elems).dump());
    }
  }
  return ValidateRankFunction(dim, std::move(values), std::move(cage));
}

json VectorJson(const IntVector& v) { return json(v); }

json PointsJson(const PointSet& points) {
  json list = json::array();
  for (const LatticePoint& n : points) list.push_back(VectorJson(n.coords()));
  return list;
}

std::string Emit(const json& doc) { return doc.dump() + "\n"; }

json ChecksJson(const std::vector<CheckOutcome>& checks) {
  json out = json::array();
  for (const CheckOutcome& c : checks) {
    json entry = {{"name", c.name},
                  {"status", c.skipped  ? "skip"
                             : c.passed ? "pass"
                                        : "fail"}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    out.push_back(std::move(entry));
  }
  return out;
}

json ReportJson(const VerificationReport& report) {
  json out = {{"instance", report.instance}, {"valid", report.valid_instance}};
  if (report.seed) out["seed"] = *report.seed;
  if (!report.valid_instance) out["invalid_reason"] = report.invalid_reason;
  out["checks"] = ChecksJson(report.checks);
  out["passed"] = report.AllPassed();
  return out;
}

}  // namespace

Polymatroid ParseInstance(std::string_view text) {
  json doc = ParseJson(text);
  if (doc.is_object() && doc.contains("rank")) {
    return PointsFromRank(ReadRank(OnlyKey(doc, "rank")));
  }
  return Polymatroid::FromPoints(ReadPoints(OnlyKey(doc, "points")));
}

PointSet ParsePointSet(std::string_view text) {
  json doc = ParseJson(text);
  if (doc.is_object() && doc.contains("rank")) {
    return PointsFromRank(ReadRank(OnlyKey(doc, "rank"))).points();
  }
  return ReadPoints(OnlyKey(doc, "points"));
}

std::string SerializePointSet(const PointSet& points) {
  return Emit(json{{"points", PointsJson(points)}});
}

std::string SerializeInstance(const Polymatroid& polymatroid,
                              InstanceForm form) {
  if (form == InstanceForm::kPoints) {
    return SerializePointSet(polymatroid.points());
  }
  const RankFunction& rk = polymatroid.rank_function();
  // Subsets in mask order.
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (SubsetMask s = 0; s < rk.values().size(); ++s) {
    values[json(SubsetElements(s)).dump()] = rk(s);
  }
  nlohmann::ordered_json rank = {{"p", rk.dim()},
                                 {"cage", rk.cage().coords()},
                                 {"values", std::move(values)}};
  nlohmann::ordered_json doc = {{"rank", std::move(rank)}};
  return doc.dump() + "\n";
}

std::string PolynomialDocument(const MultiPoly& poly) {
  json terms = json::array();
  for (const auto& [exps, c] : poly.SortedTerms()) {
    terms.push_back({{"exponents", exps}, {"coefficient", c}});
  }
  return Emit({{"basis", "monomial"},
               {"terms", std::move(terms)},
               {"canonical", poly.ToCanonicalString()}});
}

std::string PolynomialDocument(const BinomialBasisPoly& poly) {
  json terms = json::array();
  for (const auto& [exps, c] : poly.SortedTerms()) {
    terms.push_back({{"exponents", exps}, {"coefficient", c}});
  }
  return Emit({{"basis", "binomial"},
               {"shift", poly.shift()},
               {"terms", std::move(terms)},
               {"canonical", poly.ToCanonicalString()}});
}

std::string PolynomialDocument(const RationalPoly& poly) {
  json terms = json::array();
  for (const auto& [exps, c] : poly.SortedTerms()) {
    json coefficient = c.is_integer() ? json(c.num()) : json(c.ToString());
    terms.push_back({{"exponents", exps}, {"coefficient", coefficient}});
  }
  return Emit({{"basis", "monomial"},
               {"terms", std::move(terms)},
               {"canonical", poly.ToCanonicalString()}});
}

std::string MobiusTableDocument(const MobiusTable& table) {
  json entries = json::array();
  for (const auto& [n, mu] : table.values()) {
    entries.push_back({{"point", n.coords()}, {"value", mu}});
  }
  return Emit({{"mobius", std::move(entries)}});
}

std::string ReportDocument(const VerificationReport& report) {
  return Emit(ReportJson(report));
}

std::string ReportDocument(const CampaignReport& report) {
  json failures = json::array();
  for (const CampaignFailure& f : report.failures) {
    json entry = {{"seed", f.seed}, {"report", ReportJson(f.report)}};
    if (f.shrunk) entry["shrunk"] = f.shrunk_points;
    failures.push_back(std::move(entry));
  }
  json config = {{"seed", report.config.seed},
                 {"p", report.config.p},
                 {"max_rank", report.config.max_rank},
                 {"max_cage_entry", report.config.max_cage_entry},
                 {"strategy", StrategyName(report.config.strategy)}};
  return Emit({{"config", std::move(config)},
               {"count", report.count},
               {"passed", report.passed},
               {"failures", std::move(failures)},
               {"ok", report.ok()}});
}

}  // namespace cavepoly
