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

#include "repairforge/lang/patch.h"

#include <utility>

#include "repairforge/errors.h"
#include "repairforge/lang/parser.h"
#include "repairforge/lang/printer.h"

namespace repairforge {
namespace {

struct Location {
  Block* block = nullptr;
  std::size_t index = 0;
};

bool LocateIn(Block& block, StatementId id, Location& out) {
  for (std::size_t i = 0; i < block.statements.size(); ++i) {
    Statement& s = block.statements[i];
    if (s.id == id) {
      out = {&block, i};
      return true;
    }
    if (LocateIn(s.then_body, id, out) || LocateIn(s.else_body, id, out)) {
      return true;
    }
  }
  return false;
}

Location Locate(Program& program, StatementId id) {
  Location loc;
  for (auto& fn : program.functions) {
    if (LocateIn(fn.body, id, loc)) return loc;
  }
  throw UnknownStatementError(id.value);
}

void Renumber(Statement& s, std::int64_t& next) {
  s.id = StatementId(next++);
  for (auto& c : s.then_body.statements) Renumber(c, next);
  for (auto& c : s.else_body.statements) Renumber(c, next);
}

bool IsLiteral(const ExprPtr& e) {
  return e && (e->kind == ExprKind::kIntLit || e->kind == ExprKind::kBoolLit);
}

}  // namespace

std::string_view EngineName(EngineKind engine) {
  switch (engine) {
    case EngineKind::kGenProg: return "genprog";
    case EngineKind::kKali: return "kali";
    case EngineKind::kNopol: return "nopol";
  }
  return "unknown";
}

std::optional<EngineKind> ParseEngineName(std::string_view name) {
  for (EngineKind e : kAllEngines) {
    if (EngineName(e) == name) return e;
  }
  return std::nullopt;
}

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kDelete: return "Delete";
    case EditKind::kReplace: return "Replace";
    case EditKind::kInsertBefore: return "InsertBefore";
    case EditKind::kReplaceCondition: return "ReplaceCondition";
    case EditKind::kGuardWith: return "GuardWith";
  }
  return "Unknown";
}

Edit Edit::Delete(StatementId target) {
  Edit e;
  e.kind = EditKind::kDelete;
  e.target = target;
  return e;
}

Edit Edit::Replace(StatementId target, Statement replacement) {
  Edit e;
  e.kind = EditKind::kReplace;
  e.target = target;
  e.statement = std::move(replacement);
  return e;
}

Edit Edit::InsertBefore(StatementId target, Statement inserted) {
  Edit e;
  e.kind = EditKind::kInsertBefore;
  e.target = target;
  e.statement = std::move(inserted);
  return e;
}

Edit Edit::ReplaceCondition(StatementId target, ExprPtr condition) {
  Edit e;
  e.kind = EditKind::kReplaceCondition;
  e.target = target;
  e.condition = std::move(condition);
  return e;
}

Edit Edit::GuardWith(StatementId target, ExprPtr condition) {
  Edit e;
  e.kind = EditKind::kGuardWith;
  e.target = target;
  e.condition = std::move(condition);
  return e;
}

std::string DescribeEdit(const Edit& edit) {
  std::string out = std::string(EditKindName(edit.kind)) + "(" +
                    std::to_string(edit.target.value);
  if (edit.statement) {
    std::string code = PrintStatement(*edit.statement);
    // Flatten to one line.
    std::string flat;
    bool space = false;
    for (char c : code) {
      if (c == '\n' || c == ' ') {
        space = !flat.empty();
        continue;
      }
      if (space) flat += ' ';
      space = false;
      flat += c;
    }
    out += ", " + flat;
  }
  if (edit.condition) out += ", " + PrintExpr(*edit.condition);
  return out + ")";
}

Program ApplyPatch(const Program& program, const Patch& patch,
                   const std::vector<FunctionDef>& externals) {
  return ApplyEdits(program, patch.edits, externals);
}

Program ApplyEdits(const Program& program, const std::vector<Edit>& edits,
                   const std::vector<FunctionDef>& externals) {
  Program out = program;
  std::int64_t next = MaxStatementId(out) + 1;
  for (const Edit& edit : edits) {
    Location loc = Locate(out, edit.target);
    Statement& s = loc.block->statements[loc.index];
    switch (edit.kind) {
      case EditKind::kDelete: {
        Statement skip = MakeSkip();
        skip.id = s.id;
        skip.line = s.line;
        s = std::move(skip);
        break;
      }
      case EditKind::kReplace: {
        if (!edit.statement) throw InvalidEditError("Replace without payload");
        Statement r = *edit.statement;
        Renumber(r, next);
        r.id = s.id;
        r.line = s.line;
        s = std::move(r);
        break;
      }
      case EditKind::kInsertBefore: {
        if (!edit.statement) {
          throw InvalidEditError("InsertBefore without payload");
        }
        Statement r = *edit.statement;
        Renumber(r, next);
        r.line = s.line;
        auto& stmts = loc.block->statements;
        stmts.insert(stmts.begin() + static_cast<std::ptrdiff_t>(loc.index),
                     std::move(r));
        break;
      }
      case EditKind::kReplaceCondition:
        if (!edit.condition) {
          throw InvalidEditError("ReplaceCondition without condition");
        }
        if (s.kind != StmtKind::kIf && s.kind != StmtKind::kWhile) {
          throw InvalidEditError("ReplaceCondition target " +
                                 std::to_string(s.id.value) +
                                 " is not a conditional");
        }
        s.expr = edit.condition;
        break;
      case EditKind::kGuardWith: {
        if (!edit.condition) throw InvalidEditError("GuardWith without guard");
        int line = s.line;
        Block body;
        body.statements.push_back(std::move(s));
        Statement guard = MakeIf(edit.condition, std::move(body));
        guard.id = StatementId(next++);
        guard.line = line;
        loc.block->statements[loc.index] = std::move(guard);
        break;
      }
    }
  }
  try {
    ValidateProgram(out, externals);
  } catch (const ValidityError& e) {
    throw InvalidEditError(std::string("patched program is invalid: ") +
                           e.what());
  }
  return out;
}

bool IsDeleteSkipOnly(const Patch& patch) {
  for (const Edit& e : patch.edits) {
    switch (e.kind) {
      case EditKind::kDelete:
        break;
      case EditKind::kReplaceCondition:
        if (!e.condition || e.condition->kind != ExprKind::kBoolLit) {
          return false;
        }
        break;
      case EditKind::kInsertBefore:
        if (!e.statement || e.statement->kind != StmtKind::kReturn ||
            !IsLiteral(e.statement->expr)) {
          return false;
        }
        break;
      default:
        return false;
    }
  }
  return true;
}

bool IsSingleConditionEdit(const Patch& patch) {
  return patch.edits.size() == 1 &&
         (patch.edits[0].kind == EditKind::kReplaceCondition ||
          patch.edits[0].kind == EditKind::kGuardWith) &&
         patch.edits[0].condition != nullptr;
}

}  // namespace repairforge
