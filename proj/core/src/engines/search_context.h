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

#ifndef REPAIRFORGE_SRC_ENGINES_SEARCH_CONTEXT_H_
#define REPAIRFORGE_SRC_ENGINES_SEARCH_CONTEXT_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "repairforge/engines/config.h"
#include "repairforge/engines/repair.h"
#include "repairforge/faultloc/spectrum.h"
#include "repairforge/harness/bundle.h"

namespace repairforge::internal {

// State shared by the engine searches: original results, the ranking, and
// the attempt deadline.
class SearchContext {
 public:
  using Clock = std::chrono::steady_clock;

  SearchContext(const BugBundle& bundle, const RepairConfig& config,
                Clock::time_point start,
                std::vector<TestResult> original_results);

  const BugBundle& bundle() const { return bundle_; }
  const RepairConfig& config() const { return config_; }
  const Program& program() const { return bundle_.program; }
  const std::vector<TestResult>& original_results() const {
    return original_results_;
  }
  const std::set<std::string>& originally_failing() const {
    return originally_failing_;
  }
  const Ranking& ranking() const { return ranking_; }

  // Ranked statements executed by at least one failing test.
  std::vector<StatementId> Suspicious() const;

  // Whole milliseconds since the attempt started, rounded up.
  std::chrono::milliseconds Elapsed() const;
  bool Expired() const { return Elapsed() >= config_.timeout; }

  // Runs the suite against `candidate`, originally failing tests first, and
  // stops at the first failure.
  bool PassesAll(const Program& candidate) const;

  std::int64_t variants_evaluated = 0;

  // Builds the terminal outcome and stamps timing.
  RepairOutcome Finish(OutcomeStatus status) const;
  RepairOutcome Found(std::vector<Edit> edits, EngineKind engine) const;

 private:
  const BugBundle& bundle_;
  const RepairConfig& config_;
  Clock::time_point start_;
  std::vector<TestResult> original_results_;
  std::set<std::string> originally_failing_;
  std::vector<SpectrumRow> spectrum_;
  Ranking ranking_;
  // Suite order with originally failing tests moved to the front.
  std::vector<const TestCase*> validation_order_;
};

RepairOutcome RunKali(SearchContext& context);
RepairOutcome RunGenProg(SearchContext& context);
RepairOutcome RunNopol(SearchContext& context);

// Elapsed time since `start`, in whole milliseconds rounded up.
std::chrono::milliseconds CeilElapsed(SearchContext::Clock::time_point start);

}  // namespace repairforge::internal

#endif  // REPAIRFORGE_SRC_ENGINES_SEARCH_CONTEXT_H_
