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

#ifndef REPAIRFORGE_ENGINES_CONFIG_H_
#define REPAIRFORGE_ENGINES_CONFIG_H_

#include <chrono>
#include <cstdint>
#include <vector>

#include "repairforge/exec/angelic.h"
#include "repairforge/exec/test_runner.h"
#include "repairforge/faultloc/spectrum.h"

namespace repairforge {

struct GenProgConfig {
  int population = 40;
  int tournament = 2;
  double crossover_prob = 0.5;
  int max_edits_per_variant = 3;
  // The search gives up after this many generations without a patch.
  int max_generations = 20;
};

struct NopolConfig {
  ForcingPolicy forcing = ForcingPolicy::Uniform();
  int max_expr_size = 5;
  std::vector<std::int64_t> constant_pool_extra;
};

struct KaliConfig {
  bool enable_force_true = true;
  bool enable_force_false = true;
  bool enable_early_return = true;
};

inline constexpr std::chrono::milliseconds kDefaultAttemptTimeout{60'000};

struct RepairConfig {
  std::uint64_t seed = 0;
  std::chrono::milliseconds timeout = kDefaultAttemptTimeout;
  MetricKind metric = MetricKind::kOchiai;
  std::int64_t step_budget = kDefaultStepBudget;
  // Suite repetitions used by the flaky-test check before searching.
  int flaky_repetitions = 3;
  GenProgConfig genprog;
  NopolConfig nopol;
  KaliConfig kali;

  // Throws std::invalid_argument when a field is out of range.
  void Validate() const;
};

// GenProg fitness weights for originally failing / passing tests.
inline constexpr std::int64_t kNegativeTestWeight = 10;
inline constexpr std::int64_t kPositiveTestWeight = 1;

}  // namespace repairforge

#endif  // REPAIRFORGE_ENGINES_CONFIG_H_
