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

#include "repairforge/lang/printer.h"

#include <cctype>
#include <sstream>

namespace repairforge {
namespace {

// Binding strength, loosest first.
enum Precedence {
  kPrecOr = 1,
  kPrecAnd,
  kPrecEquality,
  kPrecRelational,
  kPrecAdditive,
  kPrecMultiplicative,
  kPrecUnary,
  kPrecPostfix,
};

int BinaryPrecedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return kPrecOr;
    case BinaryOp::kAnd: return kPrecAnd;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return kPrecEquality;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: return kPrecRelational;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return kPrecAdditive;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return kPrecMultiplicative;
  }
  return kPrecOr;
}

const char* BinaryToken(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

int ExprPrecedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kBinary: return BinaryPrecedence(e.binary_op);
    case ExprKind::kUnary: return kPrecUnary;
    default: return kPrecPostfix;
  }
}

std::string Wrap(const Expr& e, bool parens) {
  std::string s = PrintExpr(e);
  return parens ? "(" + s + ")" : s;
}

std::string Indent(int depth) { return std::string(2 * depth, ' '); }

void PrintBlock(const Block& block, int depth, std::ostringstream& out) {
  for (const auto& s : block.statements) out << PrintStatement(s, depth);
}

void CollectLines(const Block& block, int& line,
                  std::vector<std::pair<StatementId, int>>& out) {
  for (const auto& s : block.statements) {
    out.emplace_back(s.id, line++);
    if (s.kind == StmtKind::kIf || s.kind == StmtKind::kWhile) {
      CollectLines(s.then_body, line, out);
      if (!s.else_body.statements.empty()) {
        ++line;  // "} else {"
        CollectLines(s.else_body, line, out);
      }
      ++line;  // closing brace
    }
  }
}

}  // namespace

std::string PrintExpr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kIntLit:
      return std::to_string(e.int_value);
    case ExprKind::kBoolLit:
      return e.bool_value ? "true" : "false";
    case ExprKind::kVar:
      return e.name;
    case ExprKind::kArrayLit:
    case ExprKind::kCall: {
      std::string s = e.kind == ExprKind::kCall ? e.name + "(" : "[";
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) s += ", ";
        s += PrintExpr(*e.operands[i]);
      }
      return s + (e.kind == ExprKind::kCall ? ")" : "]");
    }
    case ExprKind::kIndex: {
      const Expr& base = *e.operands[0];
      return Wrap(base, ExprPrecedence(base) < kPrecPostfix) + "[" +
             PrintExpr(*e.operands[1]) + "]";
    }
    case ExprKind::kUnary: {
      const Expr& operand = *e.operands[0];
      std::string inner = Wrap(operand, ExprPrecedence(operand) < kPrecUnary);
      if (e.unary_op == UnaryOp::kNot) return "!" + inner;
      // "-5" would read back as a negative literal.
      if (!inner.empty() && std::isdigit(static_cast<unsigned char>(inner[0]))) {
        inner = "(" + inner + ")";
      }
      return "-" + inner;
    }
    case ExprKind::kBinary: {
      int prec = BinaryPrecedence(e.binary_op);
      const Expr& lhs = *e.operands[0];
      const Expr& rhs = *e.operands[1];
      return Wrap(lhs, ExprPrecedence(lhs) < prec) + " " +
             BinaryToken(e.binary_op) + " " +
             Wrap(rhs, ExprPrecedence(rhs) <= prec);
    }
  }
  return "";
}

std::string PrintStatement(const Statement& s, int depth) {
  std::ostringstream out;
  out << Indent(depth);
  switch (s.kind) {
    case StmtKind::kAssign:
      out << s.target << " = " << PrintExpr(*s.expr) << ";\n";
      break;
    case StmtKind::kArrayStore:
      out << s.target << "[" << PrintExpr(*s.index)
          << "] = " << PrintExpr(*s.expr) << ";\n";
      break;
    case StmtKind::kIf:
      out << "if (" << PrintExpr(*s.expr) << ") {\n";
      PrintBlock(s.then_body, depth + 1, out);
      if (!s.else_body.statements.empty()) {
        out << Indent(depth) << "} else {\n";
        PrintBlock(s.else_body, depth + 1, out);
      }
      out << Indent(depth) << "}\n";
      break;
    case StmtKind::kWhile:
      out << "while (" << PrintExpr(*s.expr) << ") {\n";
      PrintBlock(s.then_body, depth + 1, out);
      out << Indent(depth) << "}\n";
      break;
    case StmtKind::kReturn:
      out << "return " << PrintExpr(*s.expr) << ";\n";
      break;
    case StmtKind::kExprStmt:
      out << PrintExpr(*s.expr) << ";\n";
      break;
    case StmtKind::kAssert:
      out << "assert " << PrintExpr(*s.expr) << ";\n";
      break;
    case StmtKind::kSkip:
      out << "skip;\n";
      break;
  }
  return out.str();
}

std::string PrintFunction(const FunctionDef& fn) {
  std::ostringstream out;
  out << "fn " << fn.name << "(";
  for (std::size_t i = 0; i < fn.params.size(); ++i) {
    if (i) out << ", ";
    out << fn.params[i];
  }
  out << ") {\n";
  PrintBlock(fn.body, 1, out);
  out << "}\n";
  return out.str();
}

std::string Print(const Program& program) {
  std::string out;
  for (std::size_t i = 0; i < program.functions.size(); ++i) {
    if (i) out += "\n";
    out += PrintFunction(program.functions[i]);
  }
  return out;
}

std::vector<std::pair<StatementId, int>> PrintedLines(const Program& program) {
  std::vector<std::pair<StatementId, int>> out;
  int line = 1;
  for (std::size_t i = 0; i < program.functions.size(); ++i) {
    if (i) ++line;  // blank separator
    ++line;         // signature
    CollectLines(program.functions[i].body, line, out);
    ++line;  // closing brace
  }
  return out;
}

}  // namespace repairforge
