// Copyright 2026 The RepairForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <vector>

#include "repairforge/engines/repair.h"
#include "repairforge/engines/synthesis.h"
#include "repairforge/exec/test_runner.h"
#include "repairforge/faultloc/spectrum.h"
#include "repairforge/harness/bundle.h"

namespace repairforge {
namespace {

const std::filesystem::path kCorpus =
    std::filesystem::path(REPAIRFORGE_SOURCE_DIR) / "corpus";

void BM_RunSuite(benchmark::State& state) {
  const BugBundle bundle = LoadBundle(kCorpus / "M8B");
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunSuite(bundle.program, bundle.tests));
  }
}
BENCHMARK(BM_RunSuite);

void BM_Rank(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> count(0, 50);
  std::vector<SpectrumRow> rows;
  for (int i = 0; i < state.range(0); ++i) {
    rows.push_back({StatementId(i), count(rng), count(rng), count(rng),
                    count(rng)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Rank(rows, MetricKind::kOchiai));
  }
}
BENCHMARK(BM_Rank)->Range(64, 4096);

// x in [lo, hi) over a sweep of x, with y as a distractor.
SynthesisInstance WindowInstance() {
  std::vector<SynthesisRow> rows;
  for (int x = -2; x <= 8; ++x) {
    Snapshot s{{"x", {false, x}}, {"y", {false, 7 - x}}, {"f", {true, 0}}};
    rows.push_back({s, 1 < x && x < 5});
  }
  return MakeInstance(std::move(rows), {0, 1, 5});
}

void BM_Synthesize(benchmark::State& state) {
  const SynthesisInstance instance = WindowInstance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SynthesizeCondition(instance, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Synthesize)->Arg(3)->Arg(7)->Arg(9);

void BM_Repair(benchmark::State& state) {
  const BugBundle bundle = LoadBundle(kCorpus / "L55A");
  const auto engine = static_cast<EngineKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Repair(bundle, engine, RepairConfig{}));
  }
  state.SetLabel(std::string(EngineName(engine)));
}
BENCHMARK(BM_Repair)
    ->Arg(static_cast<int>(EngineKind::kKali))
    ->Arg(static_cast<int>(EngineKind::kNopol))
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace repairforge

BENCHMARK_MAIN();
