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

#ifndef REPAIRFORGE_LANG_PATCH_H_
#define REPAIRFORGE_LANG_PATCH_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repairforge/lang/ast.h"

namespace repairforge {

enum class EngineKind { kGenProg, kKali, kNopol };

inline constexpr EngineKind kAllEngines[] = {
    EngineKind::kGenProg, EngineKind::kKali, EngineKind::kNopol};

// "genprog", "kali", "nopol".
std::string_view EngineName(EngineKind engine);
std::optional<EngineKind> ParseEngineName(std::string_view name);

enum class EditKind {
  kDelete,
  kReplace,
  kInsertBefore,
  kReplaceCondition,
  kGuardWith,
};

std::string_view EditKindName(EditKind kind);

struct Edit {
  EditKind kind = EditKind::kDelete;
  StatementId target;
  // Payload for kReplace and kInsertBefore.
  std::optional<Statement> statement;
  // Payload for kReplaceCondition and kGuardWith.
  ExprPtr condition;

  static Edit Delete(StatementId target);
  static Edit Replace(StatementId target, Statement replacement);
  static Edit InsertBefore(StatementId target, Statement inserted);
  static Edit ReplaceCondition(StatementId target, ExprPtr condition);
  static Edit GuardWith(StatementId target, ExprPtr condition);
};

// One-line rendering such as "Delete(4)" or "GuardWith(7, x < 5)".
std::string DescribeEdit(const Edit& edit);

struct Patch {
  std::vector<Edit> edits;
  EngineKind engine = EngineKind::kGenProg;
  std::uint64_t seed = 0;
  std::chrono::milliseconds search_wall_time{0};
};

// Applies the edits in order to a copy of `program`.
//
// Deleted statements become `skip;` with the same id so ids stay stable.
// Replacement roots keep the target id; every other statement introduced by
// an edit receives a fresh id above the current maximum. Throws
// UnknownStatementError for ids that are not present when the edit is
// applied, and InvalidEditError when an edit does not fit its target or the
// result fails validation against `externals`.
Program ApplyPatch(const Program& program, const Patch& patch,
                   const std::vector<FunctionDef>& externals = {});
Program ApplyEdits(const Program& program, const std::vector<Edit>& edits,
                   const std::vector<FunctionDef>& externals = {});

// Delete, force an If condition to a boolean literal, or insert a return of
// a literal. Nothing else.
bool IsDeleteSkipOnly(const Patch& patch);

// Exactly one ReplaceCondition or GuardWith edit.
bool IsSingleConditionEdit(const Patch& patch);

}  // namespace repairforge

#endif  // REPAIRFORGE_LANG_PATCH_H_
