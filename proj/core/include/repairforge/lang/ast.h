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

#ifndef REPAIRFORGE_LANG_AST_H_
#define REPAIRFORGE_LANG_AST_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace repairforge {

// Identifies a statement node within one Program. Parsed programs number
// their statements densely in pre-order starting at zero.
struct StatementId {
  std::int64_t value = -1;

  constexpr StatementId() = default;
  constexpr explicit StatementId(std::int64_t v) : value(v) {}

  friend constexpr auto operator<=>(StatementId, StatementId) = default;
};

enum class ExprKind {
  kIntLit,
  kBoolLit,
  kVar,
  kArrayLit,
  kIndex,
  kUnary,
  kBinary,
  kCall,
};

enum class UnaryOp { kNeg, kNot };

enum class BinaryOp {
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAnd,
  kOr,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expressions are immutable and shared freely between programs.
struct Expr {
  ExprKind kind = ExprKind::kIntLit;
  std::int64_t int_value = 0;
  bool bool_value = false;
  // Variable name for kVar, callee for kCall.
  std::string name;
  UnaryOp unary_op = UnaryOp::kNeg;
  BinaryOp binary_op = BinaryOp::kAdd;
  // kArrayLit: elements. kIndex: {base, index}. kUnary: {operand}.
  // kBinary: {lhs, rhs}. kCall: arguments.
  std::vector<ExprPtr> operands;
};

ExprPtr MakeIntLit(std::int64_t value);
ExprPtr MakeBoolLit(bool value);
ExprPtr MakeVar(std::string name);
ExprPtr MakeArrayLit(std::vector<ExprPtr> elements);
ExprPtr MakeIndex(ExprPtr base, ExprPtr index);
ExprPtr MakeUnary(UnaryOp op, ExprPtr operand);
ExprPtr MakeBinary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr MakeCall(std::string callee, std::vector<ExprPtr> args);

// Number of nodes in the expression tree.
std::size_t NodeCount(const Expr& expr);

bool StructurallyEqual(const Expr& a, const Expr& b);

enum class StmtKind {
  kAssign,
  kArrayStore,
  kIf,
  kWhile,
  kReturn,
  kExprStmt,
  kAssert,
  kSkip,
};

struct Statement;

struct Block {
  std::vector<Statement> statements;
};

struct Statement {
  StatementId id;
  StmtKind kind = StmtKind::kSkip;
  // 1-based source line; 0 for synthesized statements.
  int line = 0;
  // kAssign / kArrayStore target variable.
  std::string target;
  // kArrayStore index expression.
  ExprPtr index;
  // Assigned value, condition, returned value, or evaluated expression.
  ExprPtr expr;
  // kIf then-branch and kWhile body.
  Block then_body;
  // kIf else-branch; empty when absent.
  Block else_body;
};

Statement MakeAssign(std::string target, ExprPtr value);
Statement MakeArrayStore(std::string target, ExprPtr index, ExprPtr value);
Statement MakeIf(ExprPtr cond, Block then_body, Block else_body = {});
Statement MakeWhile(ExprPtr cond, Block body);
Statement MakeReturn(ExprPtr value);
Statement MakeExprStmt(ExprPtr expr);
Statement MakeAssert(ExprPtr cond);
Statement MakeSkip();

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  Block body;
  int line = 0;
  // File the function was parsed from.
  std::string source_name;
};

struct Program {
  std::vector<FunctionDef> functions;
  std::string source_name;

  const FunctionDef* FindFunction(const std::string& name) const;
};

// Ignores statement ids and source lines.
bool StructurallyEqual(const Statement& a, const Statement& b);
bool StructurallyEqual(const Program& a, const Program& b);

// Pre-order walk over every statement of the program.
void ForEachStatement(
    const Program& program,
    const std::function<void(const Statement&, const FunctionDef&)>& visit);
void ForEachStatement(const Block& block,
                      const std::function<void(const Statement&)>& visit);

const Statement* FindStatement(const Program& program, StatementId id);
const FunctionDef* FindEnclosingFunction(const Program& program,
                                         StatementId id);

std::size_t StatementCount(const Program& program);

// Renumbers every statement in pre-order starting at `first`. Returns the
// next unused id.
std::int64_t AssignStatementIds(Program& program, std::int64_t first = 0);

// Largest id in use, or -1 for a program without statements.
std::int64_t MaxStatementId(const Program& program);

// Names read by the expression, including names under calls and indexes.
void CollectReadVariables(const Expr& expr, std::vector<std::string>& out);
void CollectReadVariables(const Statement& stmt,
                          std::vector<std::string>& out);

// Parameters plus every variable assigned anywhere in the function.
std::vector<std::string> FunctionVariables(const FunctionDef& fn);

// Integer literals appearing anywhere in the program, in first-seen order.
std::vector<std::int64_t> CollectIntLiterals(const Program& program);

// Whether the function's return statements yield booleans. Functions whose
// returns are all syntactically boolean are treated as boolean functions.
bool ReturnsBoolean(const FunctionDef& fn);

}  // namespace repairforge

template <>
struct std::hash<repairforge::StatementId> {
  std::size_t operator()(repairforge::StatementId id) const noexcept {
    return std::hash<std::int64_t>{}(id.value);
  }
};

#endif  // REPAIRFORGE_LANG_AST_H_
