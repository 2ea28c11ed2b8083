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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "cavepoly/errors.h"
#include "cavepoly/generator.h"
#include "cavepoly/geometry.h"
#include "cavepoly/instance_io.h"
#include "cavepoly/lex_order.h"
#include "cavepoly/polynomials.h"
#include "cavepoly/verify.h"

namespace cavepoly::cli {
namespace {

// Thrown for malformed flag values; reported like input errors.
struct UsageError {
  std::string message;
};

std::vector<std::int64_t> ParseIntList(const std::string& text,
                                       const char* flag) {
  std::vector<std::int64_t> out;
  std::string_view rest = text;
  while (true) {
    std::size_t comma = rest.find(',');
    std::string_view piece = rest.substr(0, comma);
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() ||
        ptr != piece.data() + piece.size()) {
      throw UsageError{std::string(flag) + ": expected comma-separated " +
                       "integers, got \"" + text + "\""};
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string ReadAll(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError{"cannot open " + path};
  buffer << file.rdbuf();
  return buffer.str();
}

void CheckDim(int expected, std::size_t got, const char* flag) {
  if (static_cast<int>(got) != expected) {
    throw UsageError{std::string(flag) + ": expected " +
                     std::to_string(expected) + " entries, got " +
                     std::to_string(got)};
  }
}

LexOrder OrderFlag(const std::string& text, int p) {
  if (text.empty()) return LexOrder::Identity(p);
  std::vector<std::int64_t> raw = ParseIntList(text, "--order");
  CheckDim(p, raw.size(), "--order");
  std::vector<int> priority(raw.begin(), raw.end());
  return LexOrder::FromOneBased(priority);
}

void EmitPoints(const PointSet& points, bool json, std::ostream& out) {
  if (json) {
    out << SerializePointSet(points);
    return;
  }
  for (const LatticePoint& n : points) out << n.ToString() << "\n";
}

void EmitPoly(const MultiPoly& poly, bool json, std::ostream& out) {
  if (json) {
    out << PolynomialDocument(poly);
  } else {
    out << poly.ToCanonicalString() << "\n";
  }
}

struct Options {
  std::string file;
  bool json = false;
  std::string order;
  std::string at;
  std::string eval;
  bool expand = false;
  bool eur_larson = false;
  bool table = false;
  bool rank_form = false;
  bool no_shrink = false;
  bool timing = false;
  std::uint64_t seed = 0;
  int p = 3;
  int max_rank = 6;
  int max_cage = 5;
  std::string strategy = "uniform-family";
  std::optional<int> count;
};

GeneratorConfig ConfigFrom(const Options& o) {
  GeneratorConfig config;
  config.seed = o.seed;
  config.p = o.p;
  config.max_rank = o.max_rank;
  config.max_cage_entry = o.max_cage;
  std::optional<Strategy> strategy = ParseStrategy(o.strategy);
  if (!strategy) throw UsageError{"unknown strategy " + o.strategy};
  config.strategy = *strategy;
  return config;
}

int Dispatch(const std::string& command, const Options& o, std::istream& in,
             std::ostream& out, std::ostream& err) {
  if (command == "random") {
    Polymatroid P = RandomPolymatroid(ConfigFrom(o));
    out << SerializeInstance(
        P, o.rank_form ? InstanceForm::kRank : InstanceForm::kPoints);
    return kExitOk;
  }
  if (command == "verify" && o.count) {
    CampaignOptions options;
    options.shrink = !o.no_shrink;
    CampaignReport report = VerifyCampaign(ConfigFrom(o), *o.count, options);
    out << (o.json ? ReportDocument(report) : report.ToText());
    if (o.timing) err << "elapsed " << report.seconds << " s\n";
    return report.ok() ? kExitOk : kExitFalse;
  }

  const std::string text = ReadAll(o.file, in);
  if (command == "is-cave") {
    PointSet points = ParsePointSet(text);
    CaveReport report = IsCave(points, OrderFlag(o.order, points.dim()));
    if (report) {
      out << "CAVE\n";
      return kExitOk;
    }
    out << "NOT A CAVE: condition " << report.failed_condition << ": "
        << report.detail << "\n";
    return kExitFalse;
  }
  if (command == "verify") {
    VerificationReport report = VerifyPointSet(ParsePointSet(text));
    out << (o.json ? ReportDocument(report) : report.ToText());
    if (o.timing) err << "elapsed " << report.seconds << " s\n";
    if (!report.valid_instance) return kExitInputError;
    return report.AllPassed() ? kExitOk : kExitFalse;
  }

  Polymatroid P = ParseInstance(text);
  const int p = P.dim();
  if (command == "validate") {
    if (o.json) {
      out << SerializeInstance(P, InstanceForm::kRank);
    } else {
      out << "valid polymatroid: p=" << p << " rank=" << P.rank()
          << " cage=" << P.cage().ToString()
          << " base_points=" << P.points().size() << "\n";
    }
    return kExitOk;
  }
  if (command == "points") {
    EmitPoints(P.points(), o.json, out);
  } else if (command == "independence") {
    EmitPoints(IndependencePoints(P).points(), o.json, out);
  } else if (command == "cave") {
    EmitPoly(CavePolynomial(P), o.json, out);
  } else if (command == "stal") {
    EmitPoly(StalactitePolynomial(P, OrderFlag(o.order, p)), o.json, out);
  } else if (command == "box") {
    EmitPoly(BoxPolynomial(P), o.json, out);
  } else if (command == "mobius") {
    if (!o.table) {
      EmitPoly(MobiusPolynomial(P), o.json, out);
    } else if (o.json) {
      out << MobiusTableDocument(ComputeMobiusTable(P));
    } else {
      MobiusTable table = ComputeMobiusTable(P);
      for (const auto& [n, mu] : table.values()) {
        out << n.ToString() << " " << mu << "\n";
      }
    }
  } else if (command == "snapper") {
    BinomialBasisPoly snapper =
        o.eur_larson ? SnapperEurLarson(P) : SnapperFromCave(P);
    if (!o.eval.empty()) {
      std::vector<std::int64_t> t = ParseIntList(o.eval, "--eval");
      CheckDim(p, t.size(), "--eval");
      out << snapper.Evaluate(t) << "\n";
    } else if (o.expand) {
      RationalPoly expanded = ExpandBinomial(snapper);
      out << (o.json ? PolynomialDocument(expanded)
                     : expanded.ToCanonicalString() + "\n");
    } else {
      out << (o.json ? PolynomialDocument(snapper)
                     : snapper.ToCanonicalString() + "\n");
    }
  } else if (command == "equal") {
    const std::pair<const char*, MultiPoly> polys[] = {
        {"cave", CavePolynomial(P)},
        {"stalactite", StalactitePolynomial(P)},
        {"box", BoxPolynomial(P)},
        {"mobius", MobiusPolynomial(P)},
    };
    bool all = true;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        bool same = polys[a].second == polys[b].second;
        all = all && same;
        out << polys[a].first << " " << (same ? "==" : "!=") << " "
            << polys[b].first << "\n";
      }
    }
    out << (all ? "EQUAL" : "NOT EQUAL") << "\n";
    return all ? kExitOk : kExitFalse;
  } else if (command == "truncate") {
    if (o.at.empty()) throw UsageError{"truncate requires --at"};
    std::vector<std::int64_t> raw = ParseIntList(o.at, "--at");
    CheckDim(p, raw.size(), "--at");
    std::optional<LatticePoint> n = LatticePoint::FromSigned(raw);
    if (!n) throw UsageError{"--at: entries must be nonnegative"};
    out << SerializeInstance(Truncate(P, *n));
  }
  return kExitOk;
}

}  // namespace

int RunCommand(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Cave, stalactite, box and Moebius polynomials of polymatroids",
               "cavepoly"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Instance JSON (default: stdin)");
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit JSON");
  };
  auto add_generator = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Generator seed");
    sub->add_option("--p", o.p, "Dimension")->check(CLI::Range(1, 16));
    sub->add_option("--max-rank", o.max_rank, "Largest rank")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-cage", o.max_cage, "Largest cage entry")
        ->check(CLI::PositiveNumber);
    sub->add_option("--strategy", o.strategy,
                    "submodular-rejection | uniform-family | lattice-path");
  };

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec plain[] = {
      {"validate", "Parse and validate an instance"},
      {"points", "List base points"},
      {"independence", "List lattice points of the independence polytope"},
      {"cave", "Cave polynomial"},
      {"box", "Box polynomial"},
      {"equal", "Compare the four polynomials"},
  };
  for (const Spec& s : plain) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_input(sub);
    add_json(sub);
  }

  CLI::App* stal = app.add_subcommand("stal", "Stalactite polynomial");
  add_input(stal);
  add_json(stal);
  stal->add_option("--order", o.order, "Coordinate priority, e.g. 2,1");

  CLI::App* mobius = app.add_subcommand("mobius", "Moebius polynomial");
  add_input(mobius);
  add_json(mobius);
  mobius->add_flag("--table", o.table, "List the Moebius values");

  CLI::App* snapper = app.add_subcommand("snapper", "Snapper polynomial");
  add_input(snapper);
  add_json(snapper);
  snapper->add_flag("--expand", o.expand, "Expand into monomials");
  snapper->add_option("--eval", o.eval, "Evaluate at t1,...,tp");
  snapper->add_flag("--eur-larson", o.eur_larson,
                    "Use the sum over independence points");

  CLI::App* truncate = app.add_subcommand("truncate", "Truncation at a point");
  add_input(truncate);
  truncate->add_option("--at", o.at, "Point n1,...,np")->required();

  CLI::App* is_cave = app.add_subcommand("is-cave", "Check a raw point set");
  add_input(is_cave);
  is_cave->add_option("--order", o.order, "Coordinate priority, e.g. 2,1");

  CLI::App* random = app.add_subcommand("random", "Random polymatroid");
  add_generator(random);
  random->add_flag("--rank-form", o.rank_form, "Emit the rank function");

  CLI::App* verify = app.add_subcommand("verify", "Differential verification");
  add_input(verify);
  add_json(verify);
  add_generator(verify);
  verify->add_option("--count", o.count, "Number of random instances");
  verify->add_flag("--no-shrink", o.no_shrink, "Skip counterexample shrinking");
  verify->add_flag("--timing", o.timing, "Report elapsed time on stderr");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return Dispatch(command, o, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace cavepoly::cli
