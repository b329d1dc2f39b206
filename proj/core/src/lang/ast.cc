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

#include "repairforge/lang/ast.h"

#include <algorithm>
#include <utility>

namespace repairforge {

ExprPtr MakeIntLit(std::int64_t value) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kIntLit;
  e->int_value = value;
  return e;
}

ExprPtr MakeBoolLit(bool value) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kBoolLit;
  e->bool_value = value;
  return e;
}

ExprPtr MakeVar(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kVar;
  e->name = std::move(name);
  return e;
}

ExprPtr MakeArrayLit(std::vector<ExprPtr> elements) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kArrayLit;
  e->operands = std::move(elements);
  return e;
}

ExprPtr MakeIndex(ExprPtr base, ExprPtr index) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kIndex;
  e->operands = {std::move(base), std::move(index)};
  return e;
}

ExprPtr MakeUnary(UnaryOp op, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kUnary;
  e->unary_op = op;
  e->operands = {std::move(operand)};
  return e;
}

ExprPtr MakeBinary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kBinary;
  e->binary_op = op;
  e->operands = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr MakeCall(std::string callee, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kCall;
  e->name = std::move(callee);
  e->operands = std::move(args);
  return e;
}

std::size_t NodeCount(const Expr& expr) {
  std::size_t n = 1;
  for (const auto& op : expr.operands) n += NodeCount(*op);
  return n;
}

bool StructurallyEqual(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.operands.size() != b.operands.size()) {
    return false;
  }
  switch (a.kind) {
    case ExprKind::kIntLit:
      if (a.int_value != b.int_value) return false;
      break;
    case ExprKind::kBoolLit:
      if (a.bool_value != b.bool_value) return false;
      break;
    case ExprKind::kVar:
    case ExprKind::kCall:
      if (a.name != b.name) return false;
      break;
    case ExprKind::kUnary:
      if (a.unary_op != b.unary_op) return false;
      break;
    case ExprKind::kBinary:
      if (a.binary_op != b.binary_op) return false;
      break;
    case ExprKind::kArrayLit:
    case ExprKind::kIndex:
      break;
  }
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!StructurallyEqual(*a.operands[i], *b.operands[i])) return false;
  }
  return true;
}

namespace {

Statement MakeStatement(StmtKind kind) {
  Statement s;
  s.kind = kind;
  return s;
}

bool OptionalExprEqual(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return StructurallyEqual(*a, *b);
}

bool BlocksEqual(const Block& a, const Block& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    if (!StructurallyEqual(a.statements[i], b.statements[i])) return false;
  }
  return true;
}

void WalkBlock(const Block& block,
               const std::function<void(const Statement&)>& visit) {
  for (const auto& stmt : block.statements) {
    visit(stmt);
    WalkBlock(stmt.then_body, visit);
    WalkBlock(stmt.else_body, visit);
  }
}

void RenumberBlock(Block& block, std::int64_t& next) {
  for (auto& stmt : block.statements) {
    stmt.id = StatementId(next++);
    RenumberBlock(stmt.then_body, next);
    RenumberBlock(stmt.else_body, next);
  }
}

void CollectAssigned(const Block& block, std::vector<std::string>& out) {
  WalkBlock(block, [&](const Statement& s) {
    if (s.kind == StmtKind::kAssign || s.kind == StmtKind::kArrayStore) {
      out.push_back(s.target);
    }
  });
}

void CollectLiterals(const Expr& e, std::vector<std::int64_t>& out) {
  if (e.kind == ExprKind::kIntLit &&
      std::find(out.begin(), out.end(), e.int_value) == out.end()) {
    out.push_back(e.int_value);
  }
  for (const auto& op : e.operands) CollectLiterals(*op, out);
}

bool IsBooleanValued(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kBoolLit:
      return true;
    case ExprKind::kUnary:
      return e.unary_op == UnaryOp::kNot;
    case ExprKind::kBinary:
      switch (e.binary_op) {
        case BinaryOp::kLt:
        case BinaryOp::kLe:
        case BinaryOp::kGt:
        case BinaryOp::kGe:
        case BinaryOp::kEq:
        case BinaryOp::kNe:
        case BinaryOp::kAnd:
        case BinaryOp::kOr:
          return true;
        default:
          return false;
      }
    default:
      return false;
  }
}

}  // namespace

Statement MakeAssign(std::string target, ExprPtr value) {
  Statement s = MakeStatement(StmtKind::kAssign);
  s.target = std::move(target);
  s.expr = std::move(value);
  return s;
}

Statement MakeArrayStore(std::string target, ExprPtr index, ExprPtr value) {
  Statement s = MakeStatement(StmtKind::kArrayStore);
  s.target = std::move(target);
  s.index = std::move(index);
  s.expr = std::move(value);
  return s;
}

Statement MakeIf(ExprPtr cond, Block then_body, Block else_body) {
  Statement s = MakeStatement(StmtKind::kIf);
  s.expr = std::move(cond);
  s.then_body = std::move(then_body);
  s.else_body = std::move(else_body);
  return s;
}

Statement MakeWhile(ExprPtr cond, Block body) {
  Statement s = MakeStatement(StmtKind::kWhile);
  s.expr = std::move(cond);
  s.then_body = std::move(body);
  return s;
}

Statement MakeReturn(ExprPtr value) {
  Statement s = MakeStatement(StmtKind::kReturn);
  s.expr = std::move(value);
  return s;
}

Statement MakeExprStmt(ExprPtr expr) {
  Statement s = MakeStatement(StmtKind::kExprStmt);
  s.expr = std::move(expr);
  return s;
}

Statement MakeAssert(ExprPtr cond) {
  Statement s = MakeStatement(StmtKind::kAssert);
  s.expr = std::move(cond);
  return s;
}

Statement MakeSkip() { return MakeStatement(StmtKind::kSkip); }

const FunctionDef* Program::FindFunction(const std::string& name) const {
  for (const auto& fn : functions) {
    if (fn.name == name) return &fn;
  }
  return nullptr;
}

bool StructurallyEqual(const Statement& a, const Statement& b) {
  return a.kind == b.kind && a.target == b.target &&
         OptionalExprEqual(a.index, b.index) &&
         OptionalExprEqual(a.expr, b.expr) &&
         BlocksEqual(a.then_body, b.then_body) &&
         BlocksEqual(a.else_body, b.else_body);
}

bool StructurallyEqual(const Program& a, const Program& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    const auto& fa = a.functions[i];
    const auto& fb = b.functions[i];
    if (fa.name != fb.name || fa.params != fb.params ||
        !BlocksEqual(fa.body, fb.body)) {
      return false;
    }
  }
  return true;
}

void ForEachStatement(
    const Program& program,
    const std::function<void(const Statement&, const FunctionDef&)>& visit) {
  for (const auto& fn : program.functions) {
    WalkBlock(fn.body, [&](const Statement& s) { visit(s, fn); });
  }
}

void ForEachStatement(const Block& block,
                      const std::function<void(const Statement&)>& visit) {
  WalkBlock(block, visit);
}

const Statement* FindStatement(const Program& program, StatementId id) {
  const Statement* found = nullptr;
  ForEachStatement(program, [&](const Statement& s, const FunctionDef&) {
    if (s.id == id) found = &s;
  });
  return found;
}

const FunctionDef* FindEnclosingFunction(const Program& program,
                                         StatementId id) {
  const FunctionDef* found = nullptr;
  ForEachStatement(program, [&](const Statement& s, const FunctionDef& fn) {
    if (s.id == id) found = &fn;
  });
  return found;
}

std::size_t StatementCount(const Program& program) {
  std::size_t n = 0;
  ForEachStatement(program, [&](const Statement&, const FunctionDef&) { ++n; });
  return n;
}

std::int64_t AssignStatementIds(Program& program, std::int64_t first) {
  std::int64_t next = first;
  for (auto& fn : program.functions) RenumberBlock(fn.body, next);
  return next;
}

std::int64_t MaxStatementId(const Program& program) {
  std::int64_t max_id = -1;
  ForEachStatement(program, [&](const Statement& s, const FunctionDef&) {
    max_id = std::max(max_id, s.id.value);
  });
  return max_id;
}

void CollectReadVariables(const Expr& expr, std::vector<std::string>& out) {
  if (expr.kind == ExprKind::kVar) out.push_back(expr.name);
  for (const auto& op : expr.operands) CollectReadVariables(*op, out);
}

void CollectReadVariables(const Statement& stmt,
                          std::vector<std::string>& out) {
  if (stmt.kind == StmtKind::kArrayStore) out.push_back(stmt.target);
  if (stmt.index) CollectReadVariables(*stmt.index, out);
  if (stmt.expr) CollectReadVariables(*stmt.expr, out);
  for (const auto& s : stmt.then_body.statements) CollectReadVariables(s, out);
  for (const auto& s : stmt.else_body.statements) CollectReadVariables(s, out);
}

std::vector<std::string> FunctionVariables(const FunctionDef& fn) {
  std::vector<std::string> vars = fn.params;
  CollectAssigned(fn.body, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::vector<std::int64_t> CollectIntLiterals(const Program& program) {
  std::vector<std::int64_t> out;
  ForEachStatement(program, [&](const Statement& s, const FunctionDef&) {
    if (s.index) CollectLiterals(*s.index, out);
    if (s.expr) CollectLiterals(*s.expr, out);
  });
  return out;
}

bool ReturnsBoolean(const FunctionDef& fn) {
  bool any = false;
  bool all_bool = true;
  WalkBlock(fn.body, [&](const Statement& s) {
    if (s.kind != StmtKind::kReturn) return;
    any = true;
    if (!IsBooleanValued(*s.expr)) all_bool = false;
  });
  return any && all_bool;
}

}  // namespace repairforge
