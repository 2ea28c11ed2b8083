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

#include "cavepoly/verify.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <utility>

#include "cavepoly/binomial_poly.h"
#include "cavepoly/errors.h"
#include "cavepoly/geometry.h"
#include "cavepoly/lex_order.h"
#include "cavepoly/mobius.h"
#include "cavepoly/polynomials.h"
#include "cavepoly/rational_poly.h"
#include "cavepoly/stalactite.h"

namespace cavepoly {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CheckOutcome Pass(std::string name) {
  return {std::move(name), true, false, ""};
}

CheckOutcome Fail(std::string name, std::string counterexample) {
  return {std::move(name), false, false, std::move(counterexample)};
}

std::string Diff(const char* lhs, const MultiPoly& a, const char* rhs,
                 const MultiPoly& b) {
  return std::string(lhs) + " - " + rhs + " = " + (a - b).ToCanonicalString();
}

bool SignMatches(Coord rank, const LatticePoint& n, std::int64_t value) {
  if (value == 0) return true;
  bool odd = (rank - n.Degree()) % 2 != 0;
  return (value < 0) == odd;
}

std::map<LatticePoint, std::int64_t> SignedCounts(const Polymatroid& P) {
  auto counts = StalactiteCounts(P, LexOrder::Identity(P.dim()));
  for (auto& [n, c] : counts) {
    if ((P.rank() - n.Degree()) % 2 != 0) c = -c;
  }
  return counts;
}

std::int64_t Lookup(const std::map<LatticePoint, std::int64_t>& m,
                    const LatticePoint& n) {
  auto it = m.find(n);
  return it == m.end() ? 0 : it->second;
}

CheckOutcome FourWayEquality(const Polymatroid& P) {
  const char* kName = "four-way-equality";
  MultiPoly cave = CavePolynomial(P);
  MultiPoly stal = StalactitePolynomial(P);
  if (stal != cave) return Fail(kName, Diff("stalactite", stal, "cave", cave));
  MultiPoly box = BoxPolynomial(P);
  if (box != cave) return Fail(kName, Diff("box", box, "cave", cave));
  MultiPoly mob = MobiusPolynomial(P);
  if (mob != cave) return Fail(kName, Diff("mobius", mob, "cave", cave));
  return Pass(kName);
}

CheckOutcome OrderInvariance(const Polymatroid& P, int max_exhaustive_dim) {
  const char* kName = "order-invariance";
  const int p = P.dim();
  std::vector<LexOrder> orders;
  if (p <= max_exhaustive_dim) {
    orders = LexOrder::All(p);
  } else {
    std::vector<int> reversed(p);
    for (int i = 0; i < p; ++i) reversed[i] = p - 1 - i;
    orders = {LexOrder::Identity(p), LexOrder::FromPriority(reversed)};
  }
  MultiPoly reference = StalactitePolynomial(P);
  for (const LexOrder& order : orders) {
    MultiPoly poly = StalactitePolynomial(P, order);
    if (poly != reference) {
      return Fail(kName, "order " + order.ToString() + ": " +
                             Diff("permuted", poly, "identity", reference));
    }
  }
  return Pass(kName);
}

CheckOutcome MobiusClosedForm(const Polymatroid& P) {
  const char* kName = "mobius-closed-form";
  IndependenceSet independence = IndependencePoints(P);
  for (const LatticePoint& m : independence) {
    for (const auto& [n, value] :
         MobiusIntervalsByRecurrence(independence, m)) {
      int closed = MobiusInterval(m, n);
      if (closed != value) {
        return Fail(kName, "mu(" + m.ToString() + "," + n.ToString() +
                               "): closed form " + std::to_string(closed) +
                               ", recurrence " + std::to_string(value));
      }
    }
  }
  return Pass(kName);
}

CheckOutcome StalactiteMobius(const Polymatroid& P) {
  const char* kName = "stalactite-mobius";
  auto signed_counts = SignedCounts(P);
  MobiusTable table = ComputeMobiusTable(P);
  std::set<LatticePoint> keys;
  for (const auto& [n, c] : signed_counts) keys.insert(n);
  for (const auto& [n, mu] : table.values()) keys.insert(n);
  for (const LatticePoint& n : keys) {
    std::int64_t c = Lookup(signed_counts, n);
    if (c != table.Value(n)) {
      return Fail(kName, "at " + n.ToString() + ": signed count " +
                             std::to_string(c) + ", mu " +
                             std::to_string(table.Value(n)));
    }
  }
  return Pass(kName);
}

CheckOutcome TruncationPolymatroid(const Polymatroid& P) {
  const char* kName = "truncation-polymatroid";
  for (const LatticePoint& n : IndependencePoints(P)) {
    std::vector<LatticePoint> kept;
    for (const LatticePoint& u : P.points()) {
      if (ComponentwiseLeq(n, u)) kept.push_back(u);
    }
    ExchangeCheck check = IsMConvex(PointSet(P.dim(), std::move(kept)));
    if (!check) {
      return Fail(kName, "at " + n.ToString() + ": " +
                             (check.witness ? check.witness->Describe()
                                            : std::string("no witness")));
    }
  }
  return Pass(kName);
}

CheckOutcome TruncationCounts(const Polymatroid& P) {
  const char* kName = "truncation-counts";
  auto counts = SignedCounts(P);
  IndependenceSet independence = IndependencePoints(P);
  for (const LatticePoint& n : independence) {
    Polymatroid truncated = Truncate(P, n);
    auto truncated_counts = SignedCounts(truncated);
    for (const LatticePoint& m : independence) {
      if (!ComponentwiseLeq(n, m)) continue;
      std::int64_t a = Lookup(counts, m);
      std::int64_t b = Lookup(truncated_counts, m);
      if (a != b) {
        return Fail(kName, "truncation at " + n.ToString() + ", point " +
                               m.ToString() + ": " + std::to_string(a) +
                               " vs " + std::to_string(b));
      }
    }
  }
  return Pass(kName);
}

CheckOutcome CoefficientSum(const Polymatroid& P) {
  const char* kName = "coefficient-sum";
  std::vector<std::int64_t> ones(P.dim(), 1);
  std::int64_t sum = CavePolynomial(P).Evaluate(ones);
  if (sum != 1) return Fail(kName, "sum " + std::to_string(sum));
  return Pass(kName);
}

CheckOutcome CancellationFree(const Polymatroid& P) {
  const char* kName = "cancellation-free";
  MultiPoly cave_poly = CavePolynomial(P);
  for (const auto& [exps, c] : cave_poly.terms()) {
    LatticePoint n(exps);
    if (!SignMatches(P.rank(), n, c)) {
      return Fail(kName,
                  "coefficient " + std::to_string(c) + " at " + n.ToString());
    }
  }
  return Pass(kName);
}

CheckOutcome SnapperRoutes(const Polymatroid& P) {
  const char* kName = "snapper-routes";
  BinomialBasisPoly from_cave = SnapperFromCave(P);
  BinomialBasisPoly eur_larson = SnapperEurLarson(P);
  RationalPoly a = ExpandBinomial(from_cave);
  RationalPoly b = ExpandBinomial(eur_larson);
  if (a != b) {
    return Fail(kName, "from cave " + a.ToCanonicalString() +
                           " vs Eur-Larson " + b.ToCanonicalString());
  }
  std::vector<std::int64_t> zero(P.dim(), 0);
  std::int64_t va = from_cave.Evaluate(zero);
  std::int64_t vb = eur_larson.Evaluate(zero);
  if (va != 1 || vb != 1) {
    return Fail(kName, "values at 0: " + std::to_string(va) + ", " +
                           std::to_string(vb));
  }
  return Pass(kName);
}

PointSet CaveSetOf(const Polymatroid& P) {
  return DecomposeIntoStalactites(P, LexOrder::Identity(P.dim()))
      .CaveSet(P.dim());
}

CheckOutcome CaveSupport(const Polymatroid& P) {
  const char* kName = "cave-support";
  std::vector<LatticePoint> support;
  MultiPoly cave_poly = CavePolynomial(P);
  for (const auto& [exps, c] : cave_poly.terms()) {
    support.emplace_back(exps);
  }
  PointSet from_poly(P.dim(), std::move(support));
  PointSet cave = CaveSetOf(P);
  if (!(from_poly == cave)) {
    return Fail(kName, "support " + from_poly.ToString() + " vs cave set " +
                           cave.ToString());
  }
  return Pass(kName);
}

CheckOutcome CavePredicate(const Polymatroid& P) {
  const char* kName = "cave-predicate";
  CaveReport report = IsCave(CaveSetOf(P));
  if (!report) {
    return Fail(kName, "condition " + std::to_string(report.failed_condition) +
                           ": " + report.detail);
  }
  return Pass(kName);
}

CheckOutcome RunGuarded(const NamedCheck& check, const Polymatroid& P) {
  try {
    CheckOutcome out = check.run(P);
    out.name = check.name;
    return out;
  } catch (const std::exception& e) {
    return Fail(check.name, std::string("exception: ") + e.what());
  }
}

std::optional<Polymatroid> Revalidate(int p, std::vector<Coord> values) {
  try {
    return PointsFromRank(
        ValidateRankFunction(p, std::move(values), std::nullopt));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Restriction to [p] minus coordinate i.
std::vector<Coord> DropCoordinate(const RankFunction& rk, int i) {
  const int p = rk.dim();
  std::vector<Coord> values(std::size_t{1} << (p - 1));
  const SubsetMask low = (SubsetMask{1} << i) - 1;
  for (SubsetMask s = 0; s < values.size(); ++s) {
    SubsetMask old = (s & low) | ((s & ~low) << 1);
    values[s] = rk(old);
  }
  return values;
}

// Intersection with the half-space n_i <= cage_i - 1.
std::vector<Coord> LowerCage(const RankFunction& rk, int i) {
  std::vector<Coord> values = rk.values();
  const SubsetMask bit = SubsetMask{1} << i;
  const Coord cap = rk.cage()[i] - 1;
  for (SubsetMask s = 0; s < values.size(); ++s) {
    if (s & bit) values[s] = std::min(values[s], rk(s & ~bit) + cap);
  }
  return values;
}

std::vector<Coord> LowerRank(const RankFunction& rk) {
  std::vector<Coord> values = rk.values();
  for (Coord& v : values) v = std::min(v, rk.Rank() - 1);
  return values;
}

}  // namespace

std::vector<NamedCheck> StandardChecks() {
  return {
      {"four-way-equality", FourWayEquality},
      {"order-invariance",
       [](const Polymatroid& P) { return OrderInvariance(P, 5); }},
      {"mobius-closed-form", MobiusClosedForm},
      {"stalactite-mobius", StalactiteMobius},
      {"truncation-polymatroid", TruncationPolymatroid},
      {"truncation-counts", TruncationCounts},
      {"coefficient-sum", CoefficientSum},
      {"cancellation-free", CancellationFree},
      {"snapper-routes", SnapperRoutes},
      {"cave-support", CaveSupport},
      {"cave-predicate", CavePredicate},
  };
}

bool VerificationReport::AllPassed() const {
  return valid_instance && FirstFailure() == nullptr;
}

const CheckOutcome* VerificationReport::FirstFailure() const {
  for (const CheckOutcome& c : checks) {
    if (!c.passed && !c.skipped) return &c;
  }
  return nullptr;
}

std::string VerificationReport::ToText() const {
  std::string out = "instance " + instance + "\n";
  if (seed) out += "seed " + std::to_string(*seed) + "\n";
  if (!valid_instance) {
    return out + "InvalidInstance: " + invalid_reason + "\nresult FAIL\n";
  }
  for (const CheckOutcome& c : checks) {
    out += c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.passed) out += ": " + c.counterexample;
    out += "\n";
  }
  out += AllPassed() ? "result PASS\n" : "result FAIL\n";
  return out;
}

VerificationReport VerifyInstance(const Polymatroid& polymatroid,
                                  const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.instance = polymatroid.points().ToString();
  std::vector<NamedCheck> checks = options.checks;
  if (checks.empty()) {
    checks = StandardChecks();
    const int dim = options.max_exhaustive_order_dim;
    for (NamedCheck& c : checks) {
      if (c.name == "order-invariance") {
        c.run = [dim](const Polymatroid& P) { return OrderInvariance(P, dim); };
      }
    }
  }
  for (const NamedCheck& check : checks) {
    report.checks.push_back(RunGuarded(check, polymatroid));
  }
  report.seconds = SecondsSince(start);
  return report;
}

VerificationReport VerifyPointSet(const PointSet& points,
                                  const VerifyOptions& options) {
  try {
    return VerifyInstance(Polymatroid::FromPoints(points), options);
  } catch (const Error& e) {
    VerificationReport report;
    report.instance = points.ToString();
    report.valid_instance = false;
    report.invalid_reason = e.what();
    return report;
  }
}

RankFunction ShrinkCounterexample(
    const RankFunction& rk,
    const std::function<bool(const Polymatroid&)>& still_fails) {
  RankFunction current = rk;
  auto accept = [&](int p, std::vector<Coord> values) {
    std::optional<Polymatroid> candidate = Revalidate(p, std::move(values));
    if (!candidate || !still_fails(*candidate)) return false;
    current = candidate->rank_function();
    return true;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; current.dim() > 1 && i < current.dim(); ++i) {
      if (accept(current.dim() - 1, DropCoordinate(current, i))) {
        progress = true;
        --i;
      }
    }
    if (progress) continue;
    for (int i = 0; i < current.dim(); ++i) {
      while (current.cage()[i] > 0 &&
             accept(current.dim(), LowerCage(current, i))) {
        progress = true;
      }
    }
    if (progress) continue;
    while (current.Rank() > 0 && accept(current.dim(), LowerRank(current))) {
      progress = true;
    }
  }
  return current;
}

std::string CampaignReport::ToText() const {
  std::string out = "campaign " + config.ToString() +
                    " count=" + std::to_string(count) + "\n";
  out +=
      "passed " + std::to_string(passed) + "/" + std::to_string(count) + "\n";
  for (const CampaignFailure& f : failures) {
    const CheckOutcome* first = f.report.FirstFailure();
    out += "FAIL seed=" + std::to_string(f.seed) + " instance " +
           f.report.instance;
    if (first) out += " check " + first->name + ": " + first->counterexample;
    out += "\n";
    if (f.shrunk) out += "  shrunk " + f.shrunk_points + "\n";
  }
  out += ok() ? "result PASS\n" : "result FAIL\n";
  return out;
}

CampaignReport VerifyCampaign(const GeneratorConfig& config, int count,
                              const CampaignOptions& options) {
  if (count < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "campaign count must be >= 1, got " + std::to_string(count));
  }
  config.Validate();
  const auto start = Clock::now();
  CampaignReport out;
  out.config = config;
  out.count = count;
  for (int k = 0; k < count; ++k) {
    GeneratorConfig instance_config = config;
    instance_config.seed = config.seed + static_cast<std::uint64_t>(k);
    RankFunction rk = RandomRankFunction(instance_config);
    Polymatroid P = PointsFromRank(rk);
    VerificationReport report = VerifyInstance(P, options.verify);
    report.seed = instance_config.seed;
    if (report.AllPassed()) {
      ++out.passed;
      continue;
    }
    CampaignFailure failure{instance_config.seed, report, std::nullopt, ""};
    const CheckOutcome* first = report.FirstFailure();
    if (options.shrink && first != nullptr) {
      std::vector<NamedCheck> checks = options.verify.checks.empty()
                                           ? StandardChecks()
                                           : options.verify.checks;
      auto it = std::find_if(
          checks.begin(), checks.end(),
          [&](const NamedCheck& c) { return c.name == first->name; });
      if (it != checks.end()) {
        NamedCheck target = *it;
        RankFunction shrunk =
            ShrinkCounterexample(rk, [&](const Polymatroid& candidate) {
              return !RunGuarded(target, candidate).passed;
            });
        failure.shrunk_points = PointsFromRank(shrunk).points().ToString();
        failure.shrunk = std::move(shrunk);
      }
    }
    out.failures.push_back(std::move(failure));
  }
  std::sort(out.failures.begin(), out.failures.end(),
            [](const CampaignFailure& a, const CampaignFailure& b) {
              return a.seed < b.seed;
            });
  out.seconds = SecondsSince(start);
  return out;
}

}  // namespace cavepoly
