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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "cavepoly/generator.h"
#include "cavepoly/mobius.h"
#include "cavepoly/polymatroid.h"
#include "cavepoly/polynomials.h"
#include "cavepoly/stalactite.h"
#include "cavepoly/verify.h"

namespace cavepoly {
namespace {

// A fixed batch of generated instances of dimension `p`.
std::vector<Polymatroid> Batch(int p) {
  std::vector<Polymatroid> out;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    GeneratorConfig config;
    config.seed = seed;
    config.p = p;
    config.strategy = Strategy::kSubmodularRejection;
    out.push_back(RandomPolymatroid(config));
  }
  return out;
}

template <MultiPoly (*F)(const Polymatroid&)>
void BM_Polynomial(benchmark::State& state) {
  const std::vector<Polymatroid> batch =
      Batch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Polymatroid& P : batch) benchmark::DoNotOptimize(F(P));
  }
  state.SetItemsProcessed(state.iterations() * batch.size());
}

MultiPoly Stal(const Polymatroid& P) { return StalactitePolynomial(P); }

BENCHMARK(BM_Polynomial<CavePolynomial>)->Name("Cave")->DenseRange(1, 4);
BENCHMARK(BM_Polynomial<Stal>)->Name("Stalactite")->DenseRange(1, 4);
BENCHMARK(BM_Polynomial<BoxPolynomial>)->Name("Box")->DenseRange(1, 4);
BENCHMARK(BM_Polynomial<MobiusPolynomial>)->Name("Mobius")->DenseRange(1, 4);

void BM_MobiusTable(benchmark::State& state) {
  const std::vector<Polymatroid> batch =
      Batch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Polymatroid& P : batch) {
      MobiusTable table = ComputeMobiusTable(P);
      benchmark::DoNotOptimize(table);
    }
  }
  state.SetItemsProcessed(state.iterations() * batch.size());
}
BENCHMARK(BM_MobiusTable)->DenseRange(1, 4);

void BM_SnapperRoutes(benchmark::State& state) {
  const std::vector<Polymatroid> batch =
      Batch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Polymatroid& P : batch) {
      benchmark::DoNotOptimize(ExpandBinomial(SnapperFromCave(P)));
      benchmark::DoNotOptimize(ExpandBinomial(SnapperEurLarson(P)));
    }
  }
}
BENCHMARK(BM_SnapperRoutes)->DenseRange(1, 4);

void BM_Campaign(benchmark::State& state) {
  GeneratorConfig config;
  config.p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerifyCampaign(config, 20));
  }
  state.SetItemsProcessed(state.iterations() * 20);
}
BENCHMARK(BM_Campaign)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cavepoly

BENCHMARK_MAIN();
