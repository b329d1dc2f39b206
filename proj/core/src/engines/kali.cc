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

#include <vector>

#include "repairforge/errors.h"
#include "repairforge/lang/ast.h"
#include "repairforge/lang/patch.h"
#include "search_context.h"

namespace repairforge::internal {

namespace {

// Candidate edits for one suspicious statement, in trial order.
std::vector<Edit> KaliCandidates(const Program& program, StatementId id,
                                 const KaliConfig& config) {
  std::vector<Edit> edits;
  const Statement* stmt = FindStatement(program, id);
  if (stmt == nullptr) return edits;
  if (stmt->kind != StmtKind::kSkip) edits.push_back(Edit::Delete(id));
  if (stmt->kind == StmtKind::kIf) {
    if (config.enable_force_true) {
      edits.push_back(Edit::ReplaceCondition(id, MakeBoolLit(true)));
    }
    if (config.enable_force_false) {
      edits.push_back(Edit::ReplaceCondition(id, MakeBoolLit(false)));
    }
  }
  if (config.enable_early_return) {
    const FunctionDef* fn = FindEnclosingFunction(program, id);
    ExprPtr value = fn != nullptr && ReturnsBoolean(*fn) ? MakeBoolLit(false)
                                                         : MakeIntLit(0);
    edits.push_back(Edit::InsertBefore(id, MakeReturn(value)));
  }
  return edits;
}

}  // namespace

RepairOutcome RunKali(SearchContext& context) {
  const Program& program = context.program();
  for (StatementId id : context.Suspicious()) {
    for (Edit& edit : KaliCandidates(program, id, context.config().kali)) {
      if (context.Expired()) return context.Finish(OutcomeStatus::kTimeout);
      ++context.variants_evaluated;
      Program candidate;
      try {
        candidate = ApplyEdits(program, {edit});
      } catch (const InvalidEditError&) {
        continue;
      }
      if (context.PassesAll(candidate)) {
        return context.Found({std::move(edit)}, EngineKind::kKali);
      }
    }
  }
  return context.Finish(OutcomeStatus::kNoPatch);
}

}  // namespace repairforge::internal
