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

#include "random_program.h"

#include <utility>

namespace repairforge::testing {

std::string RandomProgramGenerator::PickVar() {
  return vars_[Below(static_cast<int>(vars_.size()))];
}

ExprPtr RandomProgramGenerator::GenerateExpr(int depth) {
  const int choice = depth <= 0 ? Below(3) : Below(9);
  switch (choice) {
    case 0:
      return MakeIntLit(static_cast<std::int64_t>(Below(41)) - 20);
    case 1:
      return MakeBoolLit(Below(2) == 0);
    case 2:
      return MakeVar(PickVar());
    case 3:
      return MakeUnary(Below(2) == 0 ? UnaryOp::kNeg : UnaryOp::kNot,
                       GenerateExpr(depth - 1));
    case 4:
    case 5: {
      auto op = static_cast<BinaryOp>(Below(13));
      return MakeBinary(op, GenerateExpr(depth - 1), GenerateExpr(depth - 1));
    }
    case 6:
      return MakeIndex(MakeVar(PickVar()), GenerateExpr(depth - 1));
    case 7: {
      std::vector<ExprPtr> elements;
      for (int i = Below(3); i > 0; --i) elements.push_back(GenerateExpr(0));
      return MakeArrayLit(std::move(elements));
    }
    default: {
      if (callable_.empty() || Below(2) == 0) {
        return MakeCall("len", {MakeVar(PickVar())});
      }
      const auto& [name, arity] = callable_[Below(static_cast<int>(callable_.size()))];
      std::vector<ExprPtr> args;
      for (int i = 0; i < arity; ++i) args.push_back(GenerateExpr(depth - 1));
      return MakeCall(name, std::move(args));
    }
  }
}

Statement RandomProgramGenerator::GenerateStatement(int depth) {
  const int choice = depth <= 0 ? Below(5) : Below(8);
  switch (choice) {
    case 0: {
      std::string target = Below(4) == 0 ? "v" + std::to_string(vars_.size())
                                         : PickVar();
      Statement s = MakeAssign(target, GenerateExpr(2));
      vars_.push_back(target);
      return s;
    }
    case 1:
      return MakeArrayStore(PickVar(), GenerateExpr(1), GenerateExpr(2));
    case 2:
      return MakeReturn(GenerateExpr(2));
    case 3:
      return Below(2) == 0 ? MakeSkip() : MakeAssert(GenerateExpr(2));
    case 4:
      return MakeExprStmt(GenerateExpr(2));
    case 5:
    case 6: {
      ExprPtr cond = GenerateExpr(2);
      Block then_body = GenerateBlock(depth - 1, 3);
      Block else_body = Below(2) == 0 ? Block{} : GenerateBlock(depth - 1, 2);
      return MakeIf(std::move(cond), std::move(then_body), std::move(else_body));
    }
    default:
      return MakeWhile(GenerateExpr(2), GenerateBlock(depth - 1, 3));
  }
}

Block RandomProgramGenerator::GenerateBlock(int depth, int max_len) {
  Block block;
  for (int i = Below(max_len + 1); i > 0; --i) {
    block.statements.push_back(GenerateStatement(depth));
  }
  return block;
}

Program RandomProgramGenerator::Generate() {
  Program program;
  callable_.clear();
  const int functions = 1 + Below(3);
  for (int f = 0; f < functions; ++f) {
    FunctionDef fn;
    fn.name = "f" + std::to_string(f);
    const int params = Below(3);
    for (int p = 0; p < params; ++p) fn.params.push_back("p" + std::to_string(p));
    vars_ = fn.params;
    if (vars_.empty()) vars_.push_back("x");
    fn.body = GenerateBlock(3, 4);
    callable_.emplace_back(fn.name, params);
    program.functions.push_back(std::move(fn));
  }
  AssignStatementIds(program);
  return program;
}

ExprPtr RandomProgramGenerator::TypedInt(int depth) {
  const int choice = depth <= 0 ? Below(3) : Below(8);
  switch (choice) {
    case 0:
      return MakeIntLit(static_cast<std::int64_t>(Below(11)) - 3);
    case 1:
    case 2:
      return MakeVar(ints_[Below(static_cast<int>(ints_.size()))]);
    case 3:
      return MakeCall("len", {MakeVar("a")});
    case 4:
      return MakeIndex(MakeVar("a"),
                       MakeBinary(BinaryOp::kMod, TypedInt(depth - 1),
                                  MakeCall("len", {MakeVar("a")})));
    case 5:
      if (!callable_.empty()) {
        const auto& [name, arity] =
            callable_[Below(static_cast<int>(callable_.size()))];
        std::vector<ExprPtr> args = {MakeVar("a")};
        for (int i = 1; i < arity; ++i) args.push_back(TypedInt(depth - 1));
        return MakeCall(name, std::move(args));
      }
      [[fallthrough]];
    default: {
      constexpr BinaryOp kOps[] = {BinaryOp::kAdd, BinaryOp::kSub,
                                   BinaryOp::kMul, BinaryOp::kDiv,
                                   BinaryOp::kMod};
      // Division and modulo are rarer than the others.
      const BinaryOp op = kOps[Below(4) == 0 ? 3 + Below(2) : Below(3)];
      return MakeBinary(op, TypedInt(depth - 1), TypedInt(depth - 1));
    }
  }
}

ExprPtr RandomProgramGenerator::TypedBool(int depth) {
  const int choice = depth <= 0 ? Below(2) : Below(6);
  switch (choice) {
    case 0:
      return MakeBoolLit(Below(2) == 0);
    case 1:
    case 2: {
      constexpr BinaryOp kOps[] = {BinaryOp::kLt, BinaryOp::kLe, BinaryOp::kGt,
                                   BinaryOp::kGe, BinaryOp::kEq, BinaryOp::kNe};
      return MakeBinary(kOps[Below(6)], TypedInt(depth - 1),
                        TypedInt(depth - 1));
    }
    case 3:
      return MakeUnary(UnaryOp::kNot, TypedBool(depth - 1));
    default:
      return MakeBinary(Below(2) == 0 ? BinaryOp::kAnd : BinaryOp::kOr,
                        TypedBool(depth - 1), TypedBool(depth - 1));
  }
}

Statement RandomProgramGenerator::TypedStatement(int depth) {
  const int choice = depth <= 0 ? Below(4) : Below(7);
  switch (choice) {
    case 0:
    case 1:
      return MakeAssign(ints_[Below(static_cast<int>(ints_.size()))],
                        TypedInt(2));
    case 2:
      return MakeArrayStore("a",
                            MakeBinary(BinaryOp::kMod, TypedInt(1),
                                       MakeCall("len", {MakeVar("a")})),
                            TypedInt(2));
    case 3:
      return Below(3) == 0 ? MakeReturn(TypedInt(2)) : MakeSkip();
    case 4: {
      ExprPtr cond = TypedBool(2);
      Block then_body = TypedBlock(depth - 1, 3);
      Block else_body = Below(2) == 0 ? Block{} : TypedBlock(depth - 1, 2);
      return MakeIf(std::move(cond), std::move(then_body), std::move(else_body));
    }
    case 5: {
      // Counter-bounded loop: "k = 0; while (k < n && c) { ...; k = k + 1; }"
      // flattened into an if so it stays a single statement.
      const std::string k = "k" + std::to_string(counters_++);
      Block loop_body = TypedBlock(depth - 1, 3);
      loop_body.statements.push_back(MakeAssign(
          k, MakeBinary(BinaryOp::kAdd, MakeVar(k), MakeIntLit(1))));
      ExprPtr bound = MakeBinary(BinaryOp::kLt, MakeVar(k),
                                 MakeIntLit(1 + Below(4)));
      if (Below(2) == 0) {
        bound = MakeBinary(BinaryOp::kAnd, bound, TypedBool(1));
      }
      Block wrapper;
      wrapper.statements.push_back(MakeAssign(k, MakeIntLit(0)));
      wrapper.statements.push_back(MakeWhile(bound, std::move(loop_body)));
      return MakeIf(MakeBoolLit(true), std::move(wrapper));
    }
    default:
      // Occasionally unbounded; the step budget has to stop it.
      if (Below(4) == 0) return MakeWhile(TypedBool(1), TypedBlock(depth - 1, 2));
      return MakeExprStmt(TypedInt(2));
  }
}

Block RandomProgramGenerator::TypedBlock(int depth, int max_len) {
  Block block;
  for (int i = 1 + Below(max_len); i > 0; --i) {
    block.statements.push_back(TypedStatement(depth));
  }
  return block;
}

Program RandomProgramGenerator::GenerateTyped() {
  Program program;
  callable_.clear();
  const int functions = 1 + Below(3);
  for (int f = 0; f < functions; ++f) {
    FunctionDef fn;
    fn.name = "g" + std::to_string(f);
    fn.params = {"a"};
    const int extra = Below(3);
    for (int p = 0; p < extra; ++p) fn.params.push_back("p" + std::to_string(p));
    ints_.assign(fn.params.begin() + 1, fn.params.end());
    counters_ = 0;
    for (int v = 0; v < 2; ++v) {
      const std::string name = "v" + std::to_string(v);
      fn.body.statements.push_back(
          MakeAssign(name, MakeIntLit(static_cast<std::int64_t>(Below(5)))));
      ints_.push_back(name);
    }
    Block rest = TypedBlock(2, 5);
    for (auto& s : rest.statements) fn.body.statements.push_back(std::move(s));
    // Loop counters are assigned before use only on their own path, so
    // declare them up front too.
    for (int k = counters_ - 1; k >= 0; --k) {
      fn.body.statements.insert(fn.body.statements.begin(),
                                MakeAssign("k" + std::to_string(k), MakeIntLit(0)));
    }
    fn.body.statements.push_back(MakeReturn(TypedInt(1)));
    callable_.emplace_back(fn.name, static_cast<int>(fn.params.size()));
    program.functions.push_back(std::move(fn));
  }
  AssignStatementIds(program);
  return program;
}

}  // namespace repairforge::testing
