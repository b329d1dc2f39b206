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

#ifndef REPAIRFORGE_ENGINES_REPAIR_H_
#define REPAIRFORGE_ENGINES_REPAIR_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repairforge/engines/config.h"
#include "repairforge/exec/test_runner.h"
#include "repairforge/harness/bundle.h"
#include "repairforge/lang/patch.h"

namespace repairforge {

enum class OutcomeStatus { kPatchFound, kNoPatch, kTimeout, kError, kFlakyAbort };

std::string_view OutcomeStatusName(OutcomeStatus status);
std::optional<OutcomeStatus> ParseOutcomeStatus(std::string_view name);

struct RepairOutcome {
  OutcomeStatus status = OutcomeStatus::kNoPatch;
  // Present iff status == kPatchFound.
  std::optional<Patch> patch;
  // Diagnostic for kError.
  std::string message;
  // Offending tests for kFlakyAbort.
  std::vector<std::string> flaky_tests;
  std::chrono::milliseconds attempt_wall_time{0};
  std::int64_t variants_evaluated = 0;
};

// Full pipeline for one attempt: run the suite, check the declared failing
// tests fail, abort on flaky tests, localize, then search with the chosen
// engine until the first patch that passes the whole suite.
//
// Elapsed time is accounted in whole milliseconds rounded up, and the
// deadline is checked before every candidate evaluation.
RepairOutcome Repair(const BugBundle& bundle, EngineKind engine,
                     const RepairConfig& config);

// Engine searches. Each expects the preconditions Repair establishes.
RepairOutcome KaliSearch(const BugBundle& bundle, const RepairConfig& config);
RepairOutcome GenProgSearch(const BugBundle& bundle, const RepairConfig& config);
RepairOutcome NopolSearch(const BugBundle& bundle, const RepairConfig& config);

// Weighted count of passing tests: kNegativeTestWeight per passing test that
// originally failed, kPositiveTestWeight per passing test that originally
// passed.
std::int64_t GenProgFitness(std::span<const TestResult> results,
                            const std::set<std::string>& originally_failing);

// Re-applies the patch to a fresh copy of the bundle program and runs the
// whole suite.
bool Revalidate(const BugBundle& bundle, const Patch& patch,
                std::int64_t budget = kDefaultStepBudget);

}  // namespace repairforge

#endif  // REPAIRFORGE_ENGINES_REPAIR_H_
