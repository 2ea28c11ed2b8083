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

// Differential verification: every identity relating the cave, stalactite,
// box and Möbius constructions is evaluated on an instance and recorded as
// data. Failures never throw.

#ifndef CAVEPOLY_VERIFY_H_
#define CAVEPOLY_VERIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cavepoly/generator.h"
#include "cavepoly/lattice_point.h"
#include "cavepoly/polymatroid.h"
#include "cavepoly/rank_function.h"

namespace cavepoly {

struct CheckOutcome {
  std::string name;
  bool passed = true;
  bool skipped = false;
  // First counterexample: a polynomial diff or a witness point.
  std::string counterexample;
};

using CheckFn = std::function<CheckOutcome(const Polymatroid&)>;

struct NamedCheck {
  std::string name;
  CheckFn run;
};

// The standard battery, in report order:
//   four-way-equality      cave = stalactite = box = Möbius
//   order-invariance       stalactite polynomial identical for all orders
//   mobius-closed-form     closed form vs. the interval recurrence
//   stalactite-mobius      signed stalactite counts = Möbius values
//   truncation-polymatroid every truncation at n in I is M-convex
//   truncation-counts      signed counts agree between P and each truncation
//   coefficient-sum        cave polynomial at all-ones is 1
//   cancellation-free      coefficient signs are (-1)^(rk - |n|)
//   snapper-routes         both Snapper expansions agree, value 1 at 0
//   cave-support           support of the cave polynomial = stalactite union
//   cave-predicate         the stalactite union passes IsCave
std::vector<NamedCheck> StandardChecks();

struct VerifyOptions {
  // Orders are enumerated exhaustively up to this dimension; above it only
  // the identity and the reversed order are compared.
  int max_exhaustive_order_dim = 5;
  // Replaces the standard battery when nonempty.
  std::vector<NamedCheck> checks;
};

struct VerificationReport {
  std::string instance;
  std::optional<std::uint64_t> seed;
  bool valid_instance = true;
  std::string invalid_reason;
  std::vector<CheckOutcome> checks;
  double seconds = 0.0;

  bool AllPassed() const;
  // First failing check, if any.
  const CheckOutcome* FirstFailure() const;
  // Deterministic text form; timing is left out.
  std::string ToText() const;
};

VerificationReport VerifyInstance(const Polymatroid& polymatroid,
                                  const VerifyOptions& options = {});

// Validates first; an invalid set is reported as InvalidInstance with the
// exchange witness and no checks run.
VerificationReport VerifyPointSet(const PointSet& points,
                                  const VerifyOptions& options = {});

// Greedy reduction of a failing rank function: drop coordinates, then lower
// cage entries, then lower the rank, keeping each step only while
// `still_fails` holds on the revalidated polymatroid.
RankFunction ShrinkCounterexample(
    const RankFunction& rk,
    const std::function<bool(const Polymatroid&)>& still_fails);

struct CampaignOptions {
  bool shrink = true;
  VerifyOptions verify;
};

struct CampaignFailure {
  std::uint64_t seed;
  VerificationReport report;
  // Present when shrinking is enabled.
  std::optional<RankFunction> shrunk;
  std::string shrunk_points;
};

struct CampaignReport {
  GeneratorConfig config;
  int count = 0;
  int passed = 0;
  // Sorted by seed.
  std::vector<CampaignFailure> failures;
  double seconds = 0.0;

  bool ok() const { return failures.empty(); }
  std::string ToText() const;
};

// Instance k is generated with seed config.seed + k. Throws
// kInvalidArgument when count < 1; kGenerationExhausted propagates.
CampaignReport VerifyCampaign(const GeneratorConfig& config, int count,
                              const CampaignOptions& options = {});

}  // namespace cavepoly

#endif  // CAVEPOLY_VERIFY_H_
