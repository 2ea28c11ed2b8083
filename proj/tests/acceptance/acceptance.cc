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

// Acceptance run for the library and the command-line tool. Prints one
// PASS/FAIL line per criterion and exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cavepoly/binomial_poly.h"
#include "cavepoly/errors.h"
#include "cavepoly/generator.h"
#include "cavepoly/geometry.h"
#include "cavepoly/lex_order.h"
#include "cavepoly/mobius.h"
#include "cavepoly/multi_poly.h"
#include "cavepoly/polymatroid.h"
#include "cavepoly/polynomials.h"
#include "cavepoly/stalactite.h"
#include "cli.h"

namespace cavepoly {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kGoldenSecondsLimit = 1e-3;
constexpr double kSuiteSecondsLimit = 60.0;
constexpr std::size_t kMinSuiteInstances = 500;
constexpr std::size_t kMinOracleInstances = 50;
constexpr int kMaxP = 4;
constexpr int kMaxRank = 6;
constexpr int kMaxCage = 5;
constexpr int kSeedsPerCell = 42;
constexpr std::uint64_t kBaseSeed = 2026;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Tally {
 public:
  void Report(int id, bool passed, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", passed ? "PASS" : "FAIL", id,
                detail.c_str());
    std::fflush(stdout);
    if (!passed) ++failed_;
  }
  int failed() const { return failed_; }

 private:
  int failed_ = 0;
};

// Runs `body`, turning an escaped exception into a failure line.
void Criterion(Tally& tally, int id,
               const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [passed, detail] = body();
    tally.Report(id, passed, detail);
  } catch (const std::exception& e) {
    tally.Report(id, false, std::string("exception: ") + e.what());
  }
}

Polymatroid RunningExample() {
  return Polymatroid::FromPoints(
      std::vector<LatticePoint>{{0, 3}, {1, 2}, {2, 1}});
}

MultiPoly Poly2(std::vector<std::pair<IntVector, std::int64_t>> terms) {
  MultiPoly out(2);
  for (const auto& [e, c] : terms) out.AddTerm(e, c);
  return out;
}

// t2^3 + t1*t2^2 - t2^2 + t1^2*t2 - t1*t2.
MultiPoly GoldenPolynomial() {
  return Poly2(
      {{{0, 3}, 1}, {{1, 2}, 1}, {{0, 2}, -1}, {{2, 1}, 1}, {{1, 1}, -1}});
}

struct Instance {
  GeneratorConfig config;
  Polymatroid polymatroid;
};

std::vector<Instance> SuiteInstances() {
  std::vector<Instance> out;
  for (Strategy s : {Strategy::kUniformFamily, Strategy::kSubmodularRejection,
                     Strategy::kLatticePath}) {
    for (int p = 1; p <= kMaxP; ++p) {
      for (int k = 0; k < kSeedsPerCell; ++k) {
        GeneratorConfig config;
        config.seed = kBaseSeed + static_cast<std::uint64_t>(k);
        config.p = p;
        config.max_rank = kMaxRank;
        config.max_cage_entry = kMaxCage;
        config.strategy = s;
        out.push_back({config, RandomPolymatroid(config)});
      }
    }
  }
  return out;
}

std::string Where(const Instance& instance) {
  return instance.config.ToString() + " " +
         instance.polymatroid.points().ToString();
}

// Generic Möbius recurrence over the independence points: mu(m, m) = 1 and
// mu(m, a) = -sum_{m <= b < a} mu(m, b).
std::map<LatticePoint, std::int64_t> BruteForceIntervals(
    const std::vector<LatticePoint>& points, const LatticePoint& m) {
  std::vector<LatticePoint> above;
  for (const LatticePoint& a : points) {
    if (ComponentwiseLeq(m, a)) above.push_back(a);
  }
  std::stable_sort(above.begin(), above.end(),
                   [](const LatticePoint& a, const LatticePoint& b) {
                     return a.Degree() < b.Degree();
                   });
  std::map<LatticePoint, std::int64_t> mu;
  for (const LatticePoint& a : above) {
    if (a == m) {
      mu[a] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& [b, value] : mu) {
      if (b != a && ComponentwiseLeq(b, a)) sum += value;
    }
    mu[a] = -sum;
  }
  return mu;
}

std::int64_t Sign(Coord exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Signed stalactite count (-1)^(rk - |n|) c_n at every point of `points`.
std::map<LatticePoint, std::int64_t> SignedCounts(const Polymatroid& P) {
  std::map<LatticePoint, std::int64_t> out;
  for (const auto& [n, c] : StalactiteCounts(P, LexOrder::Identity(P.dim()))) {
    out[n] = Sign(P.rank() - n.Degree()) * c;
  }
  return out;
}

std::int64_t Lookup(const std::map<LatticePoint, std::int64_t>& table,
                    const LatticePoint& n) {
  auto it = table.find(n);
  return it == table.end() ? 0 : it->second;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult Cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::RunCommand(args, in, out, err);
  return {code, out.str()};
}

int Run() {
  Tally tally;
  const Polymatroid running = RunningExample();
  const MultiPoly golden = GoldenPolynomial();

  Criterion(tally, 1, [&] {
    Clock::time_point start = Clock::now();
    MultiPoly cave = CavePolynomial(running);
    MultiPoly stal = StalactitePolynomial(running);
    const double seconds = SecondsSince(start);
    const bool ok =
        cave == golden && stal == golden && seconds < kGoldenSecondsLimit;
    return std::make_pair(ok, "cave = " + cave.ToCanonicalString() +
                                  ", stal = " + stal.ToCanonicalString() +
                                  ", " + std::to_string(seconds * 1e3) +
                                  " ms (limit 1 ms)");
  });

  Criterion(tally, 2, [&] {
    const std::map<LatticePoint, std::int64_t> expected = {
        {{0, 3}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{0, 2}, -1}, {{1, 1}, -1},
        {{2, 0}, 0}, {{0, 1}, 0}, {{1, 0}, 0}, {{0, 0}, 0}};
    Clock::time_point start = Clock::now();
    MobiusTable table = ComputeMobiusTable(running);
    MultiPoly mob = MobiusPolynomial(running);
    const double seconds = SecondsSince(start);
    const bool ok = table.values() == expected && mob == golden &&
                    seconds < kGoldenSecondsLimit;
    return std::make_pair(
        ok, "nine values " +
                std::string(table.values() == expected ? "match" : "differ") +
                ", Mob = " + mob.ToCanonicalString() + ", " +
                std::to_string(seconds * 1e3) + " ms (limit 1 ms)");
  });

  Criterion(tally, 3, [&] {
    // The nine factor products as written out for the running example.
    MultiPoly one = MultiPoly::Constant(2, 1);
    auto t1 = [](Coord e) { return MultiPoly::Term({e, 0}); };
    auto t2 = [](Coord e) { return MultiPoly::Term({0, e}); };
    const std::vector<MultiPoly> written = {one * (t2(3) - t2(2)),
                                            (t1(1) - one) * (t2(2) - t2(1)),
                                            (t1(2) - t1(1)) * (t2(1) - one),
                                            one * (t2(2) - t2(1)),
                                            (t1(1) - one) * (t2(1) - one),
                                            (t1(2) - t1(1)) * one,
                                            one * (t2(1) - one),
                                            (t1(1) - one) * one,
                                            one * one};
    std::multiset<std::string> want;
    for (const MultiPoly& f : written) want.insert(f.ToCanonicalString());
    std::multiset<std::string> got;
    for (const BoxSummand& s : BoxSummands(running)) {
      got.insert(s.product.ToCanonicalString());
    }
    MultiPoly box = BoxPolynomial(running);
    const bool ok = got == want && box == golden;
    return std::make_pair(ok, std::to_string(got.size()) + " summands " +
                                  (got == want ? "match" : "differ") +
                                  ", Box = " + box.ToCanonicalString());
  });

  const std::vector<Instance> suite = SuiteInstances();

  Criterion(tally, 4, [&] {
    Clock::time_point start = Clock::now();
    std::size_t equal = 0;
    std::string first_bad;
    for (const Instance& in : suite) {
      const Polymatroid& P = in.polymatroid;
      MultiPoly cave = CavePolynomial(P);
      bool same = StalactitePolynomial(P) == cave && BoxPolynomial(P) == cave &&
                  MobiusPolynomial(P) == cave;
      if (same) {
        ++equal;
      } else if (first_bad.empty()) {
        first_bad = Where(in);
      }
    }
    const double seconds = SecondsSince(start);
    const bool ok = suite.size() >= kMinSuiteInstances &&
                    equal == suite.size() && seconds < kSuiteSecondsLimit;
    std::string detail = std::to_string(equal) + "/" +
                         std::to_string(suite.size()) +
                         " instances with four equal polynomials, " +
                         std::to_string(seconds) + " s (limit 60 s)";
    if (!first_bad.empty()) detail += "; first mismatch " + first_bad;
    return std::make_pair(ok, detail);
  });

  Criterion(tally, 5, [&] {
    std::size_t instances = 0;
    std::size_t pairs = 0;
    std::string first_bad;
    for (std::size_t k = 0; k < suite.size(); k += 8) {
      const Polymatroid& P = suite[k].polymatroid;
      IndependenceSet independence = IndependencePoints(P);
      const std::vector<LatticePoint>& points = independence.points().points();
      for (const LatticePoint& m : points) {
        for (const auto& [n, mu] : BruteForceIntervals(points, m)) {
          ++pairs;
          if (MobiusInterval(m, n) != mu && first_bad.empty()) {
            first_bad =
                Where(suite[k]) + " at " + m.ToString() + ".." + n.ToString();
          }
        }
      }
      ++instances;
    }
    const bool ok = instances >= kMinOracleInstances && first_bad.empty();
    std::string detail = std::to_string(pairs) + " intervals over " +
                         std::to_string(instances) +
                         " instances against the brute-force recurrence";
    if (!first_bad.empty()) detail += "; first mismatch " + first_bad;
    return std::make_pair(ok, detail);
  });

  Criterion(tally, 6, [&] {
    std::size_t points = 0;
    std::string first_bad;
    for (const Instance& in : suite) {
      const Polymatroid& P = in.polymatroid;
      std::map<LatticePoint, std::int64_t> signed_counts = SignedCounts(P);
      MobiusTable table = ComputeMobiusTable(P);
      for (const LatticePoint& n : IndependencePoints(P)) {
        ++points;
        if (Lookup(signed_counts, n) != table.Value(n) && first_bad.empty()) {
          first_bad = Where(in) + " at " + n.ToString();
        }
      }
    }
    std::string detail = std::to_string(points) + " independence points over " +
                         std::to_string(suite.size()) + " instances";
    if (!first_bad.empty()) detail += "; first mismatch " + first_bad;
    return std::make_pair(first_bad.empty(), detail);
  });

  Criterion(tally, 7, [&] {
    std::size_t instances = 0;
    std::size_t orders = 0;
    std::string first_bad;
    for (const Instance& in : suite) {
      const Polymatroid& P = in.polymatroid;
      if (P.dim() > 3) continue;
      ++instances;
      MultiPoly reference =
          StalactitePolynomial(P, LexOrder::Identity(P.dim()));
      for (const LexOrder& order : LexOrder::All(P.dim())) {
        ++orders;
        if (StalactitePolynomial(P, order) != reference && first_bad.empty()) {
          first_bad = Where(in);
        }
      }
    }
    std::string detail = std::to_string(instances) +
                         " instances with p <= 3, " + std::to_string(orders) +
                         " orders";
    if (!first_bad.empty()) detail += "; first mismatch " + first_bad;
    return std::make_pair(instances > 0 && first_bad.empty(), detail);
  });

  Criterion(tally, 8, [&] {
    std::size_t instances = 0;
    std::size_t truncations = 0;
    std::string first_bad;
    for (std::size_t k = 0; k < suite.size(); k += 4) {
      const Polymatroid& P = suite[k].polymatroid;
      ++instances;
      std::map<LatticePoint, std::int64_t> full = SignedCounts(P);
      IndependenceSet independence = IndependencePoints(P);
      for (const LatticePoint& n : independence) {
        ++truncations;
        Polymatroid T = Truncate(P, n);
        if (!IsMConvex(T.points()) && first_bad.empty()) {
          first_bad = Where(suite[k]) + " truncation at " + n.ToString() +
                      " is not M-convex";
        }
        std::map<LatticePoint, std::int64_t> part = SignedCounts(T);
        for (const LatticePoint& m : independence) {
          if (!ComponentwiseLeq(n, m)) continue;
          if (Lookup(full, m) != Lookup(part, m) && first_bad.empty()) {
            first_bad = Where(suite[k]) + " counts differ at " + m.ToString() +
                        " for truncation at " + n.ToString();
          }
        }
      }
    }
    const bool ok = instances >= kMinOracleInstances && first_bad.empty();
    std::string detail = std::to_string(truncations) + " truncations over " +
                         std::to_string(instances) + " instances";
    if (!first_bad.empty()) detail += "; " + first_bad;
    return std::make_pair(ok, detail);
  });

  Criterion(tally, 9, [&] {
    std::string first_bad;
    for (const Instance& in : suite) {
      const Polymatroid& P = in.polymatroid;
      std::vector<std::int64_t> ones(P.dim(), 1);
      if (CavePolynomial(P).Evaluate(ones) != 1 && first_bad.empty()) {
        first_bad = Where(in);
      }
    }
    std::string detail =
        "value 1 at all-ones on " + std::to_string(suite.size()) + " instances";
    if (!first_bad.empty()) detail += "; fails on " + first_bad;
    return std::make_pair(first_bad.empty(), detail);
  });

  Criterion(tally, 10, [&] {
    std::string first_bad;
    for (const Instance& in : suite) {
      const Polymatroid& P = in.polymatroid;
      BinomialBasisPoly from_cave = SnapperFromCave(P);
      BinomialBasisPoly eur_larson = SnapperEurLarson(P);
      std::vector<std::int64_t> zero(P.dim(), 0);
      const bool ok = ExpandBinomial(from_cave) == ExpandBinomial(eur_larson) &&
                      from_cave.Evaluate(zero) == 1 &&
                      eur_larson.Evaluate(zero) == 1;
      if (!ok && first_bad.empty()) first_bad = Where(in);
    }
    std::string detail = "expansions agree and value 1 at zero on " +
                         std::to_string(suite.size()) + " instances";
    if (!first_bad.empty()) detail += "; fails on " + first_bad;
    return std::make_pair(first_bad.empty(), detail);
  });

  Criterion(tally, 11, [&] {
    std::string first_bad;
    std::size_t negatives = 0;
    std::size_t rejected = 0;
    auto negative = [&](const PointSet& points, const std::string& label) {
      ++negatives;
      if (!IsCave(points)) {
        ++rejected;
      } else if (first_bad.empty()) {
        first_bad = "accepted " + label + " " + points.ToString();
      }
    };
    for (const Instance& in : suite) {
      const Polymatroid& P = in.polymatroid;
      PointSet cave_set =
          DecomposeIntoStalactites(P, LexOrder::Identity(P.dim()))
              .CaveSet(P.dim());
      if (!IsCave(cave_set) && first_bad.empty()) {
        first_bad = "rejected stalactite union of " + Where(in);
      }
      if (!(cave_set == P.points())) negative(P.points(), "tops only");
    }
    negative(running.points(), "tops only");
    negative(PointSet(2, {{0, 3}, {1, 2}, {2, 1}, {0, 2}}),
             "partial stalactite union");
    negative(PointSet(2, {{0, 3}, {1, 2}, {2, 1}, {0, 2}, {1, 1}, {0, 0}}),
             "union plus origin");
    negative(PointSet(2, {{2, 0}, {0, 2}}), "non-polymatroid tops");
    const bool ok = first_bad.empty() && negatives > 4;
    std::string detail = "stalactite unions accepted on " +
                         std::to_string(suite.size()) + " instances, " +
                         std::to_string(rejected) + "/" +
                         std::to_string(negatives) + " negatives rejected";
    if (!first_bad.empty()) detail += "; " + first_bad;
    return std::make_pair(ok, detail);
  });

  Criterion(tally, 12, [&] {
    const std::string golden_json = R"({"points":[[0,3],[1,2],[2,1]]})";
    std::vector<std::string> failures;
    auto expect = [&](bool cond, const std::string& what) {
      if (!cond) failures.push_back(what);
    };
    CliResult equal = Cli({"equal"}, golden_json);
    expect(equal.code == cli::kExitOk && equal.out.ends_with("EQUAL\n") &&
               equal.out.find("NOT") == std::string::npos,
           "equal on the golden example");
    expect(Cli({"cave"}, golden_json).out ==
               "t2^3 + t1*t2^2 + t1^2*t2 - t2^2 - t1*t2\n",
           "cave output");
    for (int p = 1; p <= kMaxP; ++p) {
      const std::string seed = std::to_string(40 + p);
      CliResult points =
          Cli({"random", "--seed", seed, "--p", std::to_string(p)}, "");
      CliResult rank = Cli(
          {"random", "--seed", seed, "--p", std::to_string(p), "--rank-form"},
          "");
      expect(Cli({"points", "--json"}, points.out).out == points.out,
             "points round trip p=" + std::to_string(p));
      expect(Cli({"points", "--json"}, rank.out).out == points.out,
             "rank form round trip p=" + std::to_string(p));
      expect(Cli({"validate", "--json"}, rank.out).out == rank.out,
             "rank form survives validate p=" + std::to_string(p));
      expect(
          Cli({"random", "--seed", seed, "--p", std::to_string(p)}, "").out ==
              points.out,
          "random determinism p=" + std::to_string(p));
    }
    const std::vector<std::string> campaign = {"verify", "--count", "25",
                                               "--seed", "7",       "--json"};
    CliResult first = Cli(campaign, "");
    expect(first.code == cli::kExitOk, "verify campaign exit 0");
    expect(Cli(campaign, "").out == first.out, "verify determinism");
    expect(Cli({"is-cave"}, golden_json).code == cli::kExitFalse,
           "is-cave on tops exits 1");
    expect(Cli({"is-cave"}, R"({"points":[[0,3],[1,2],[2,1],[0,2],[1,1]]})")
                   .code == cli::kExitOk,
           "is-cave on the cave exits 0");
    expect(Cli({"cave"}, R"({"points":[[0,3],)").code == cli::kExitInputError,
           "malformed JSON exits 2");
    expect(Cli({"cave"}, R"({"points":[[2,0],[0,2]]})").code ==
               cli::kExitInputError,
           "non-M-convex input exits 2");
    expect(Cli({"no-such-command"}, "").code == cli::kExitInputError,
           "unknown subcommand exits 2");
    expect(Cli({"verify"}, R"({"points":[[0,3],[2,1]]})").code ==
               cli::kExitInputError,
           "verify on an invalid instance exits 2");
    std::string detail = failures.empty()
                             ? "round-trip, determinism and exit fixtures hold"
                             : "failed: " + failures.front();
    return std::make_pair(failures.empty(), detail);
  });

  return tally.failed() == 0 ? 0 : 1;
}

}  // namespace
}  // namespace cavepoly

int main() { return cavepoly::Run(); }
