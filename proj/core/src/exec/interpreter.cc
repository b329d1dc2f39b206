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

#include "interpreter.h"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>

namespace repairforge::internal {
namespace {

constexpr int kMaxCallDepth = 512;
constexpr std::int64_t kMaxArrayLength = std::int64_t{1} << 20;

struct Value {
  enum class Type { kInt, kBool, kArray };
  Type type = Type::kInt;
  std::int64_t i = 0;
  bool b = false;
  // Arrays have reference semantics.
  std::shared_ptr<std::vector<std::int64_t>> array;

  static Value Int(std::int64_t v) { return {Type::kInt, v, false, nullptr}; }
  static Value Bool(bool v) { return {Type::kBool, 0, v, nullptr}; }
  static Value Array(std::vector<std::int64_t> elems) {
    return {Type::kArray, 0, false,
            std::make_shared<std::vector<std::int64_t>>(std::move(elems))};
  }
};

struct Frame {
  std::map<std::string, Value> vars;
  bool tracked = false;
  const std::string* function = nullptr;
};

struct Trap {
  RuntimeErrorKind kind;
};
struct BudgetExhausted {};
struct AssertFailed {};

enum class Flow { kNormal, kReturn };

class Interpreter {
 public:
  Interpreter(const Program& program, const TestCase& test,
              std::int64_t budget, std::span<const std::int64_t> tape,
              ConditionControl* control)
      : test_(test), budget_(budget), tape_(tape), control_(control) {
    for (const auto& fn : program.functions) {
      functions_.emplace(fn.name, Callee{&fn, true});
    }
    if (test.helpers) {
      for (const auto& fn : *test.helpers) {
        functions_.emplace(fn.name, Callee{&fn, false});
      }
    }
  }

  TestResult Run() {
    TestResult result;
    result.test = test_.name;
    Frame frame;
    frame.function = &test_.name;
    current_.function = test_.name;
    current_.line = test_.line;
    try {
      ExecBlock(test_.body, frame);
      result.verdict.kind = VerdictKind::kPass;
    } catch (const AssertFailed&) {
      result.verdict.kind = VerdictKind::kAssertionFailure;
      result.verdict.location = current_;
    } catch (const Trap& trap) {
      result.verdict.kind = VerdictKind::kRuntimeError;
      result.verdict.error = trap.kind;
      result.verdict.location = current_;
    } catch (const BudgetExhausted&) {
      result.verdict.kind = VerdictKind::kStepBudgetExceeded;
      result.verdict.location = current_;
    }
    result.covered = std::move(covered_);
    result.steps = steps_;
    return result;
  }

 private:
  struct Callee {
    const FunctionDef* def;
    bool tracked;
  };

  void Tick() {
    if (steps_ >= budget_) throw BudgetExhausted{};
    ++steps_;
  }

  Flow ExecBlock(const Block& block, Frame& frame) {
    for (const auto& s : block.statements) {
      if (ExecStatement(s, frame) == Flow::kReturn) return Flow::kReturn;
    }
    return Flow::kNormal;
  }

  bool AtControl(const Statement& s, const Frame& frame) const {
    return control_ != nullptr && frame.tracked && s.id == control_->location;
  }

  Snapshot TakeSnapshot(const Frame& frame) const {
    Snapshot snap;
    for (const auto& [name, v] : frame.vars) {
      switch (v.type) {
        case Value::Type::kInt:
          snap[name] = Scalar{false, v.i};
          break;
        case Value::Type::kBool:
          snap[name] = Scalar{true, v.b ? 1 : 0};
          break;
        case Value::Type::kArray:
          snap["len(" + name + ")"] =
              Scalar{false, static_cast<std::int64_t>(v.array->size())};
          break;
      }
    }
    return snap;
  }

  template <typename Natural>
  bool Decide(const Frame& frame, Natural natural) {
    std::size_t occurrence = control_->values.size();
    Snapshot snap = TakeSnapshot(frame);
    std::optional<bool> forced;
    if (control_->force) forced = control_->force(occurrence);
    bool value = forced ? *forced : natural();
    control_->values.push_back(value);
    control_->snapshots.push_back(std::move(snap));
    return value;
  }

  bool Condition(const Statement& s, Frame& frame) {
    if (AtControl(s, frame) && !control_->guard) {
      return Decide(frame, [&] { return EvalBool(*s.expr, frame); });
    }
    return EvalBool(*s.expr, frame);
  }

  void Enter(const Statement& s, const Frame& frame) {
    Tick();
    current_.function = *frame.function;
    current_.line = s.line;
    if (frame.tracked) {
      current_.statement = s.id;
      covered_.insert(s.id);
    } else {
      current_.statement.reset();
    }
  }

  Flow ExecStatement(const Statement& s, Frame& frame) {
    Enter(s, frame);
    if (AtControl(s, frame) && control_->guard) {
      if (!Decide(frame, [] { return true; })) return Flow::kNormal;
    }
    switch (s.kind) {
      case StmtKind::kAssign:
        frame.vars[s.target] = Eval(*s.expr, frame);
        return Flow::kNormal;
      case StmtKind::kArrayStore: {
        auto it = frame.vars.find(s.target);
        if (it == frame.vars.end()) throw Trap{RuntimeErrorKind::kUndefinedVariable};
        if (it->second.type != Value::Type::kArray) {
          throw Trap{RuntimeErrorKind::kTypeError};
        }
        auto array = it->second.array;
        std::int64_t index = EvalInt(*s.index, frame);
        std::int64_t value = EvalInt(*s.expr, frame);
        if (index < 0 || index >= static_cast<std::int64_t>(array->size())) {
          throw Trap{RuntimeErrorKind::kIndexOutOfBounds};
        }
        (*array)[static_cast<std::size_t>(index)] = value;
        return Flow::kNormal;
      }
      case StmtKind::kIf:
        if (Condition(s, frame)) return ExecBlock(s.then_body, frame);
        return ExecBlock(s.else_body, frame);
      case StmtKind::kWhile:
        while (Condition(s, frame)) {
          if (ExecBlock(s.then_body, frame) == Flow::kReturn) {
            return Flow::kReturn;
          }
        }
        return Flow::kNormal;
      case StmtKind::kReturn:
        return_value_ = Eval(*s.expr, frame);
        return Flow::kReturn;
      case StmtKind::kExprStmt:
        Eval(*s.expr, frame);
        return Flow::kNormal;
      case StmtKind::kAssert:
        if (!EvalBool(*s.expr, frame)) {
          // Report the assert itself, not whatever ran inside it.
          current_.function = *frame.function;
          current_.line = s.line;
          if (frame.tracked) {
            current_.statement = s.id;
          } else {
            current_.statement.reset();
          }
          throw AssertFailed{};
        }
        return Flow::kNormal;
      case StmtKind::kSkip:
        return Flow::kNormal;
    }
    return Flow::kNormal;
  }

  std::int64_t EvalInt(const Expr& e, Frame& frame) {
    Value v = Eval(e, frame);
    if (v.type != Value::Type::kInt) throw Trap{RuntimeErrorKind::kTypeError};
    return v.i;
  }

  bool EvalBool(const Expr& e, Frame& frame) {
    Value v = Eval(e, frame);
    if (v.type != Value::Type::kBool) throw Trap{RuntimeErrorKind::kTypeError};
    return v.b;
  }

  static std::int64_t Arith(BinaryOp op, std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    bool overflow = false;
    switch (op) {
      case BinaryOp::kAdd:
        overflow = __builtin_add_overflow(a, b, &r);
        break;
      case BinaryOp::kSub:
        overflow = __builtin_sub_overflow(a, b, &r);
        break;
      case BinaryOp::kMul:
        overflow = __builtin_mul_overflow(a, b, &r);
        break;
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (b == 0) throw Trap{RuntimeErrorKind::kDivisionByZero};
        if (a == INT64_MIN && b == -1) throw Trap{RuntimeErrorKind::kOverflow};
        r = op == BinaryOp::kDiv ? a / b : a % b;
        break;
      default:
        break;
    }
    if (overflow) throw Trap{RuntimeErrorKind::kOverflow};
    return r;
  }

  Value EvalBinary(const Expr& e, Frame& frame) {
    BinaryOp op = e.binary_op;
    if (op == BinaryOp::kAnd) {
      if (!EvalBool(*e.operands[0], frame)) return Value::Bool(false);
      return Value::Bool(EvalBool(*e.operands[1], frame));
    }
    if (op == BinaryOp::kOr) {
      if (EvalBool(*e.operands[0], frame)) return Value::Bool(true);
      return Value::Bool(EvalBool(*e.operands[1], frame));
    }
    Value lhs = Eval(*e.operands[0], frame);
    Value rhs = Eval(*e.operands[1], frame);
    if (op == BinaryOp::kEq || op == BinaryOp::kNe) {
      if (lhs.type != rhs.type || lhs.type == Value::Type::kArray) {
        throw Trap{RuntimeErrorKind::kTypeError};
      }
      bool eq = lhs.type == Value::Type::kInt ? lhs.i == rhs.i : lhs.b == rhs.b;
      return Value::Bool(op == BinaryOp::kEq ? eq : !eq);
    }
    if (lhs.type != Value::Type::kInt || rhs.type != Value::Type::kInt) {
      throw Trap{RuntimeErrorKind::kTypeError};
    }
    switch (op) {
      case BinaryOp::kLt: return Value::Bool(lhs.i < rhs.i);
      case BinaryOp::kLe: return Value::Bool(lhs.i <= rhs.i);
      case BinaryOp::kGt: return Value::Bool(lhs.i > rhs.i);
      case BinaryOp::kGe: return Value::Bool(lhs.i >= rhs.i);
      default: return Value::Int(Arith(op, lhs.i, rhs.i));
    }
  }

  Value CallIntrinsic(const Expr& e, Frame& frame) {
    if (e.name == "nondet") {
      std::int64_t v = tape_pos_ < tape_.size() ? tape_[tape_pos_] : 0;
      ++tape_pos_;
      return Value::Int(v);
    }
    Value arg = Eval(*e.operands[0], frame);
    if (e.name == "len") {
      if (arg.type != Value::Type::kArray) throw Trap{RuntimeErrorKind::kTypeError};
      return Value::Int(static_cast<std::int64_t>(arg.array->size()));
    }
    // array(n)
    if (arg.type != Value::Type::kInt) throw Trap{RuntimeErrorKind::kTypeError};
    if (arg.i < 0 || arg.i > kMaxArrayLength) {
      throw Trap{RuntimeErrorKind::kBadArraySize};
    }
    return Value::Array(std::vector<std::int64_t>(static_cast<std::size_t>(arg.i), 0));
  }

  Value Call(const Expr& e, Frame& frame) {
    if (e.name == "len" || e.name == "array" || e.name == "nondet") {
      if (e.operands.size() != (e.name == "nondet" ? 0u : 1u)) {
        throw Trap{RuntimeErrorKind::kArityMismatch};
      }
      return CallIntrinsic(e, frame);
    }
    auto it = functions_.find(e.name);
    if (it == functions_.end()) throw Trap{RuntimeErrorKind::kUndefinedFunction};
    const FunctionDef& fn = *it->second.def;
    if (fn.params.size() != e.operands.size()) {
      throw Trap{RuntimeErrorKind::kArityMismatch};
    }
    Frame callee;
    callee.tracked = it->second.tracked;
    callee.function = &fn.name;
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      callee.vars[fn.params[i]] = Eval(*e.operands[i], frame);
    }
    if (depth_ >= kMaxCallDepth) throw Trap{RuntimeErrorKind::kStackOverflow};
    SourceLocation caller = current_;
    ++depth_;
    Flow flow = ExecBlock(fn.body, callee);
    --depth_;
    current_ = std::move(caller);
    if (flow == Flow::kReturn) return std::move(return_value_);
    // Falling off the end yields 0.
    return Value::Int(0);
  }

  Value Eval(const Expr& e, Frame& frame) {
    Tick();
    switch (e.kind) {
      case ExprKind::kIntLit:
        return Value::Int(e.int_value);
      case ExprKind::kBoolLit:
        return Value::Bool(e.bool_value);
      case ExprKind::kVar: {
        auto it = frame.vars.find(e.name);
        if (it == frame.vars.end()) {
          throw Trap{RuntimeErrorKind::kUndefinedVariable};
        }
        return it->second;
      }
      case ExprKind::kArrayLit: {
        std::vector<std::int64_t> elems;
        elems.reserve(e.operands.size());
        for (const auto& op : e.operands) elems.push_back(EvalInt(*op, frame));
        return Value::Array(std::move(elems));
      }
      case ExprKind::kIndex: {
        Value base = Eval(*e.operands[0], frame);
        if (base.type != Value::Type::kArray) {
          throw Trap{RuntimeErrorKind::kTypeError};
        }
        std::int64_t index = EvalInt(*e.operands[1], frame);
        if (index < 0 || index >= static_cast<std::int64_t>(base.array->size())) {
          throw Trap{RuntimeErrorKind::kIndexOutOfBounds};
        }
        return Value::Int((*base.array)[static_cast<std::size_t>(index)]);
      }
      case ExprKind::kUnary:
        if (e.unary_op == UnaryOp::kNot) {
          return Value::Bool(!EvalBool(*e.operands[0], frame));
        } else {
          std::int64_t v = EvalInt(*e.operands[0], frame);
          if (v == INT64_MIN) throw Trap{RuntimeErrorKind::kOverflow};
          return Value::Int(-v);
        }
      case ExprKind::kBinary:
        return EvalBinary(e, frame);
      case ExprKind::kCall:
        return Call(e, frame);
    }
    return Value::Int(0);
  }

  const TestCase& test_;
  std::int64_t budget_;
  std::span<const std::int64_t> tape_;
  std::size_t tape_pos_ = 0;
  ConditionControl* control_;
  std::unordered_map<std::string, Callee> functions_;
  std::set<StatementId> covered_;
  std::int64_t steps_ = 0;
  int depth_ = 0;
  Value return_value_;
  SourceLocation current_;
};

}  // namespace

TestResult Execute(const Program& program, const TestCase& test,
                   std::int64_t budget, std::span<const std::int64_t> tape,
                   ConditionControl* control) {
  Interpreter interp(program, test, budget, tape, control);
  return interp.Run();
}

}  // namespace repairforge::internal
