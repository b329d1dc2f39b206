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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "repairforge/engines/synthesis.h"
#include "repairforge/errors.h"
#include "repairforge/exec/angelic.h"
#include "repairforge/lang/ast.h"
#include "repairforge/lang/patch.h"
#include "search_context.h"

namespace repairforge::internal {

namespace {

std::vector<std::int64_t> ConstantPool(const BugBundle& bundle,
                                       const NopolConfig& config) {
  std::vector<std::int64_t> pool = CollectIntLiterals(bundle.program);
  Program tests;
  for (const auto& t : bundle.tests) {
    FunctionDef fn;
    fn.name = t.name;
    fn.body = t.body;
    tests.functions.push_back(std::move(fn));
  }
  // Helpers are shared by every test of the suite.
  if (!bundle.tests.empty() && bundle.tests.front().helpers) {
    for (const auto& h : *bundle.tests.front().helpers) {
      tests.functions.push_back(h);
    }
  }
  for (std::int64_t c : CollectIntLiterals(tests)) pool.push_back(c);
  for (std::int64_t c : {-1, 0, 1}) pool.push_back(c);
  pool.insert(pool.end(), config.constant_pool_extra.begin(),
              config.constant_pool_extra.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

class AngelicSearch {
 public:
  explicit AngelicSearch(SearchContext& context)
      : context_(context),
        config_(context.config().nopol),
        constants_(ConstantPool(context.bundle(), config_)) {}

  RepairOutcome Run() {
    const Program& program = context_.program();
    const std::vector<StatementId> suspicious = context_.Suspicious();
    // Existing conditions first, then new guards.
    for (StatementId id : suspicious) {
      const Statement* s = FindStatement(program, id);
      if (s == nullptr || s->kind != StmtKind::kIf) continue;
      if (auto done = TryLocation(id, AngelicMode::kCondition)) return *done;
    }
    for (StatementId id : suspicious) {
      const Statement* s = FindStatement(program, id);
      if (s == nullptr || s->kind == StmtKind::kSkip) continue;
      if (auto done = TryLocation(id, AngelicMode::kGuard)) return *done;
    }
    return context_.Finish(OutcomeStatus::kNoPatch);
  }

 private:
  std::optional<RepairOutcome> TryLocation(StatementId id, AngelicMode mode) {
    if (context_.Expired()) return context_.Finish(OutcomeStatus::kTimeout);
    const Program& program = context_.program();
    const std::int64_t budget = context_.config().step_budget;

    std::vector<SynthesisRow> rows;
    for (const auto& test : context_.bundle().tests) {
      if (context_.originally_failing().contains(test.name)) {
        std::vector<AngelicTrace> traces;
        try {
          traces = RunAngelic(program, test, id, config_.forcing, budget, mode);
        } catch (const LocationNotExecutedError&) {
          return std::nullopt;
        }
        auto angelic = std::find_if(traces.begin(), traces.end(),
                                    [](const AngelicTrace& t) {
                                      return t.verdict.passed();
                                    });
        if (angelic == traces.end()) return std::nullopt;
        AppendRows(*angelic, rows);
      } else {
        AppendRows(ObserveLocation(program, test, id, budget, mode), rows);
      }
      if (context_.Expired()) return context_.Finish(OutcomeStatus::kTimeout);
    }

    SynthesisInstance instance = MakeInstance(std::move(rows), constants_);
    if (instance.vocabulary.empty()) return std::nullopt;
    SynthesisResult synthesized =
        SynthesizeCondition(instance, config_.max_expr_size);
    if (!synthesized.ok()) return std::nullopt;

    Edit edit = mode == AngelicMode::kCondition
                    ? Edit::ReplaceCondition(id, synthesized.expr)
                    : Edit::GuardWith(id, synthesized.expr);
    if (context_.Expired()) return context_.Finish(OutcomeStatus::kTimeout);
    ++context_.variants_evaluated;
    Program candidate;
    try {
      candidate = ApplyEdits(program, {edit});
    } catch (const InvalidEditError&) {
      return std::nullopt;
    }
    if (!context_.PassesAll(candidate)) return std::nullopt;
    return context_.Found({std::move(edit)}, EngineKind::kNopol);
  }

  static void AppendRows(const AngelicTrace& trace,
                         std::vector<SynthesisRow>& rows) {
    for (std::size_t i = 0; i < trace.forced_values.size(); ++i) {
      rows.push_back({trace.snapshots[i], trace.forced_values[i]});
    }
  }

  SearchContext& context_;
  const NopolConfig& config_;
  std::vector<std::int64_t> constants_;
};

}  // namespace

RepairOutcome RunNopol(SearchContext& context) {
  return AngelicSearch(context).Run();
}

}  // namespace repairforge::internal
