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

#include "repairforge/engines/repair.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <utility>

#include "repairforge/errors.h"
#include "search_context.h"

namespace repairforge {

namespace internal {

std::chrono::milliseconds CeilElapsed(SearchContext::Clock::time_point start) {
  const auto elapsed = SearchContext::Clock::now() - start;
  return std::chrono::ceil<std::chrono::milliseconds>(elapsed);
}

SearchContext::SearchContext(const BugBundle& bundle,
                             const RepairConfig& config,
                             Clock::time_point start,
                             std::vector<TestResult> original_results)
    : bundle_(bundle),
      config_(config),
      start_(start),
      original_results_(std::move(original_results)) {
  for (const auto& r : original_results_) {
    if (!r.passed()) originally_failing_.insert(r.test);
  }
  spectrum_ = BuildSpectrum(original_results_, bundle_.program);
  ranking_ = Rank(spectrum_, config_.metric);
  for (const auto& t : bundle_.tests) {
    if (originally_failing_.contains(t.name)) validation_order_.push_back(&t);
  }
  for (const auto& t : bundle_.tests) {
    if (!originally_failing_.contains(t.name)) validation_order_.push_back(&t);
  }
}

std::vector<StatementId> SearchContext::Suspicious() const {
  std::map<StatementId, int> ef;
  for (const auto& row : spectrum_) ef[row.statement] = row.ef;
  std::vector<StatementId> out;
  for (const auto& ranked : ranking_) {
    if (ef[ranked.statement] > 0) out.push_back(ranked.statement);
  }
  return out;
}

std::chrono::milliseconds SearchContext::Elapsed() const {
  return CeilElapsed(start_);
}

bool SearchContext::PassesAll(const Program& candidate) const {
  for (const TestCase* t : validation_order_) {
    if (!RunTest(candidate, *t, config_.step_budget).passed()) return false;
  }
  return true;
}

RepairOutcome SearchContext::Finish(OutcomeStatus status) const {
  RepairOutcome outcome;
  outcome.status = status;
  outcome.variants_evaluated = variants_evaluated;
  outcome.attempt_wall_time = Elapsed();
  return outcome;
}

RepairOutcome SearchContext::Found(std::vector<Edit> edits,
                                   EngineKind engine) const {
  RepairOutcome outcome = Finish(OutcomeStatus::kPatchFound);
  Patch patch;
  patch.edits = std::move(edits);
  patch.engine = engine;
  patch.seed = config_.seed;
  patch.search_wall_time = outcome.attempt_wall_time;
  outcome.patch = std::move(patch);
  return outcome;
}

}  // namespace internal

namespace {

using internal::SearchContext;

RepairOutcome ErrorOutcome(std::string message,
                           SearchContext::Clock::time_point start) {
  RepairOutcome outcome;
  outcome.status = OutcomeStatus::kError;
  outcome.message = std::move(message);
  outcome.attempt_wall_time = internal::CeilElapsed(start);
  return outcome;
}

RepairOutcome Dispatch(SearchContext& context, EngineKind engine) {
  switch (engine) {
    case EngineKind::kGenProg:
      return internal::RunGenProg(context);
    case EngineKind::kKali:
      return internal::RunKali(context);
    case EngineKind::kNopol:
      return internal::RunNopol(context);
  }
  throw std::logic_error("unknown engine");
}

RepairOutcome DirectSearch(const BugBundle& bundle, const RepairConfig& config,
                           EngineKind engine) {
  const auto start = SearchContext::Clock::now();
  config.Validate();
  SearchContext context(bundle, config, start,
                        RunSuite(bundle.program, bundle.tests,
                                 config.step_budget));
  return Dispatch(context, engine);
}

}  // namespace

void RepairConfig::Validate() const {
  if (timeout.count() <= 0) throw std::invalid_argument("timeout must be > 0");
  if (step_budget <= 0) {
    throw std::invalid_argument("step_budget must be > 0");
  }
  if (flaky_repetitions < 1) {
    throw std::invalid_argument("flaky_repetitions must be >= 1");
  }
  if (genprog.population < 2) {
    throw std::invalid_argument("genprog.population must be >= 2");
  }
  if (genprog.tournament < 1) {
    throw std::invalid_argument("genprog.tournament must be >= 1");
  }
  if (!(genprog.crossover_prob >= 0.0 && genprog.crossover_prob <= 1.0)) {
    throw std::invalid_argument("genprog.crossover_prob must be in [0, 1]");
  }
  if (genprog.max_edits_per_variant < 1) {
    throw std::invalid_argument("genprog.max_edits_per_variant must be >= 1");
  }
  if (genprog.max_generations < 0) {
    throw std::invalid_argument("genprog.max_generations must be >= 0");
  }
  if (nopol.max_expr_size < 1) {
    throw std::invalid_argument("nopol.max_expr_size must be >= 1");
  }
  if (nopol.forcing.kind == ForcingPolicy::Kind::kPerOccurrence &&
      (nopol.forcing.occurrences < 1 || nopol.forcing.occurrences > 16)) {
    throw std::invalid_argument("nopol per-occurrence k must be in [1, 16]");
  }
}

std::string_view OutcomeStatusName(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kPatchFound:
      return "PatchFound";
    case OutcomeStatus::kNoPatch:
      return "NoPatch";
    case OutcomeStatus::kTimeout:
      return "Timeout";
    case OutcomeStatus::kError:
      return "Error";
    case OutcomeStatus::kFlakyAbort:
      return "FlakyAbort";
  }
  return "?";
}

std::optional<OutcomeStatus> ParseOutcomeStatus(std::string_view name) {
  for (auto s : {OutcomeStatus::kPatchFound, OutcomeStatus::kNoPatch,
                 OutcomeStatus::kTimeout, OutcomeStatus::kError,
                 OutcomeStatus::kFlakyAbort}) {
    if (OutcomeStatusName(s) == name) return s;
  }
  return std::nullopt;
}

RepairOutcome Repair(const BugBundle& bundle, EngineKind engine,
                     const RepairConfig& config) {
  const auto start = SearchContext::Clock::now();
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    return ErrorOutcome(std::string("invalid configuration: ") + e.what(),
                        start);
  }

  std::vector<TestResult> results =
      RunSuite(bundle.program, bundle.tests, config.step_budget);
  for (const auto& name : bundle.declared_failing) {
    auto it = std::find_if(results.begin(), results.end(),
                           [&](const TestResult& r) { return r.test == name; });
    if (it == results.end()) {
      return ErrorOutcome("declared failing test " + name + " does not exist",
                          start);
    }
    if (it->passed()) {
      return ErrorOutcome("declared failing test " + name + " passes", start);
    }
  }
  if (std::all_of(results.begin(), results.end(),
                  [](const TestResult& r) { return r.passed(); })) {
    return ErrorOutcome("no failing test", start);
  }

  std::set<std::string> flaky = DetectFlaky(
      bundle.program, bundle.tests, config.step_budget, config.flaky_repetitions);
  if (!flaky.empty()) {
    RepairOutcome outcome;
    outcome.status = OutcomeStatus::kFlakyAbort;
    outcome.flaky_tests.assign(flaky.begin(), flaky.end());
    outcome.message = "flaky tests detected";
    outcome.attempt_wall_time = internal::CeilElapsed(start);
    return outcome;
  }

  SearchContext context(bundle, config, start, std::move(results));
  if (context.Expired()) return context.Finish(OutcomeStatus::kTimeout);
  try {
    return Dispatch(context, engine);
  } catch (const std::exception& e) {
    RepairOutcome outcome = context.Finish(OutcomeStatus::kError);
    outcome.message = e.what();
    return outcome;
  }
}

RepairOutcome KaliSearch(const BugBundle& bundle, const RepairConfig& config) {
  return DirectSearch(bundle, config, EngineKind::kKali);
}

RepairOutcome GenProgSearch(const BugBundle& bundle,
                            const RepairConfig& config) {
  return DirectSearch(bundle, config, EngineKind::kGenProg);
}

RepairOutcome NopolSearch(const BugBundle& bundle, const RepairConfig& config) {
  return DirectSearch(bundle, config, EngineKind::kNopol);
}

std::int64_t GenProgFitness(std::span<const TestResult> results,
                            const std::set<std::string>& originally_failing) {
  std::int64_t fitness = 0;
  for (const auto& r : results) {
    if (!r.passed()) continue;
    fitness += originally_failing.contains(r.test) ? kNegativeTestWeight
                                                   : kPositiveTestWeight;
  }
  return fitness;
}

bool Revalidate(const BugBundle& bundle, const Patch& patch,
                std::int64_t budget) {
  Program patched;
  try {
    patched = ApplyPatch(bundle.program, patch);
  } catch (const Error&) {
    return false;
  }
  for (const auto& t : bundle.tests) {
    if (!RunTest(patched, t, budget).passed()) return false;
  }
  return true;
}

}  // namespace repairforge
