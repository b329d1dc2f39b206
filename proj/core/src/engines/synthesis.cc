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

#include "repairforge/engines/synthesis.h"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

namespace repairforge {

namespace {

constexpr BinaryOp kComparisons[] = {BinaryOp::kLt, BinaryOp::kLe,
                                     BinaryOp::kEq, BinaryOp::kNe};

// Observational signature of a boolean candidate: one byte per row.
using BoolSignature = std::string;

struct IntTerm {
  ExprPtr expr;
  std::vector<std::int64_t> values;
};

struct BoolTerm {
  ExprPtr expr;
  BoolSignature signature;
};

bool Compare(BinaryOp op, std::int64_t a, std::int64_t b) {
  switch (op) {
    case BinaryOp::kLt:
      return a < b;
    case BinaryOp::kLe:
      return a <= b;
    case BinaryOp::kEq:
      return a == b;
    case BinaryOp::kNe:
      return a != b;
    default:
      return false;
  }
}

bool HasContradiction(const std::vector<SynthesisRow>& rows) {
  std::map<Snapshot, bool> seen;
  for (const auto& row : rows) {
    auto [it, inserted] = seen.emplace(row.snapshot, row.expected);
    if (!inserted && it->second != row.expected) return true;
  }
  return false;
}

class Enumerator {
 public:
  explicit Enumerator(const SynthesisInstance& instance) : instance_(instance) {
    for (const auto& row : instance.rows) {
      target_.push_back(row.expected ? '1' : '0');
    }
  }

  ExprPtr Run(int max_size) {
    BuildIntTerms();
    levels_.resize(static_cast<std::size_t>(std::max(max_size, 0)) + 1);
    for (int size = 1; size <= max_size; ++size) {
      if (ExprPtr found = FillLevel(size)) return found;
    }
    return nullptr;
  }

 private:
  void BuildIntTerms() {
    const std::size_t n = instance_.rows.size();
    for (const auto& name : instance_.vocabulary) {
      if (IsBoolName(name)) continue;
      IntTerm term{VocabularyTerm(name), {}};
      for (const auto& row : instance_.rows) {
        term.values.push_back(row.snapshot.at(name).value);
      }
      int_terms_.push_back(std::move(term));
    }
    for (std::int64_t c : instance_.constants) {
      int_terms_.push_back({MakeIntLit(c), std::vector<std::int64_t>(n, c)});
    }
  }

  bool IsBoolName(const std::string& name) const {
    return !instance_.rows.empty() &&
           instance_.rows.front().snapshot.at(name).is_bool;
  }

  // Adds the candidate unless an equivalent one exists. Returns true when
  // it matches the target.
  bool Offer(int size, ExprPtr expr, BoolSignature signature) {
    if (!seen_.insert(signature).second) return false;
    const bool hit = signature == target_;
    levels_[size].push_back({std::move(expr), std::move(signature)});
    return hit;
  }

  ExprPtr FillLevel(int size) {
    const std::size_t n = instance_.rows.size();
    auto offer = [&](ExprPtr e, BoolSignature sig) -> ExprPtr {
      if (Offer(size, e, std::move(sig))) return e;
      return nullptr;
    };

    if (size == 1) {
      for (const auto& name : instance_.vocabulary) {
        if (!IsBoolName(name)) continue;
        BoolSignature sig;
        for (const auto& row : instance_.rows) {
          sig.push_back(row.snapshot.at(name).value != 0 ? '1' : '0');
        }
        if (auto e = offer(MakeVar(name), std::move(sig))) return e;
      }
      if (auto e = offer(MakeBoolLit(true), BoolSignature(n, '1'))) return e;
      if (auto e = offer(MakeBoolLit(false), BoolSignature(n, '0'))) return e;
      return nullptr;
    }

    if (size == 3) {
      for (BinaryOp op : kComparisons) {
        for (const auto& lhs : int_terms_) {
          for (const auto& rhs : int_terms_) {
            BoolSignature sig(n, '0');
            for (std::size_t r = 0; r < n; ++r) {
              if (Compare(op, lhs.values[r], rhs.values[r])) sig[r] = '1';
            }
            if (auto e = offer(MakeBinary(op, lhs.expr, rhs.expr),
                               std::move(sig))) {
              return e;
            }
          }
        }
      }
    }

    // Index loops below: Offer() only appends to levels_[size].
    for (std::size_t i = 0; i < levels_[size - 1].size(); ++i) {
      const BoolTerm& inner = levels_[size - 1][i];
      BoolSignature sig = inner.signature;
      for (char& c : sig) c = c == '1' ? '0' : '1';
      if (auto e = offer(MakeUnary(UnaryOp::kNot, inner.expr), std::move(sig))) {
        return e;
      }
    }

    for (BinaryOp op : {BinaryOp::kAnd, BinaryOp::kOr}) {
      for (int left = 1; left <= size - 2; ++left) {
        const int right = size - 1 - left;
        for (std::size_t i = 0; i < levels_[left].size(); ++i) {
          for (std::size_t j = 0; j < levels_[right].size(); ++j) {
            const BoolTerm& a = levels_[left][i];
            const BoolTerm& b = levels_[right][j];
            BoolSignature sig(n, '0');
            for (std::size_t r = 0; r < n; ++r) {
              const bool x = a.signature[r] == '1';
              const bool y = b.signature[r] == '1';
              if (op == BinaryOp::kAnd ? (x && y) : (x || y)) sig[r] = '1';
            }
            if (auto e = offer(MakeBinary(op, a.expr, b.expr), std::move(sig))) {
              return e;
            }
          }
        }
      }
    }
    return nullptr;
  }

  const SynthesisInstance& instance_;
  BoolSignature target_;
  std::vector<IntTerm> int_terms_;
  std::vector<std::vector<BoolTerm>> levels_;
  std::unordered_set<BoolSignature> seen_;
};

}  // namespace

std::string_view SynthesisFailureName(SynthesisFailure failure) {
  switch (failure) {
    case SynthesisFailure::kNone:
      return "None";
    case SynthesisFailure::kNoRows:
      return "NoRows";
    case SynthesisFailure::kContradiction:
      return "Contradiction";
    case SynthesisFailure::kNoSolution:
      return "NoSolution";
  }
  return "?";
}

ExprPtr VocabularyTerm(const std::string& name) {
  constexpr std::string_view kLen = "len(";
  if (name.size() > kLen.size() + 1 && name.compare(0, kLen.size(), kLen) == 0 &&
      name.back() == ')') {
    return MakeCall("len", {MakeVar(name.substr(
                               kLen.size(), name.size() - kLen.size() - 1))});
  }
  return MakeVar(name);
}

namespace {

// Value of an expression over a snapshot; nullopt when it cannot be
// evaluated.
std::optional<Scalar> EvalScalar(const Expr& e, const Snapshot& snapshot) {
  switch (e.kind) {
    case ExprKind::kIntLit:
      return Scalar{false, e.int_value};
    case ExprKind::kBoolLit:
      return Scalar{true, e.bool_value ? 1 : 0};
    case ExprKind::kVar: {
      auto it = snapshot.find(e.name);
      if (it == snapshot.end()) return std::nullopt;
      return it->second;
    }
    case ExprKind::kCall: {
      if (e.name != "len" || e.operands.size() != 1 ||
          e.operands[0]->kind != ExprKind::kVar) {
        return std::nullopt;
      }
      auto it = snapshot.find("len(" + e.operands[0]->name + ")");
      if (it == snapshot.end()) return std::nullopt;
      return it->second;
    }
    case ExprKind::kUnary: {
      auto v = EvalScalar(*e.operands[0], snapshot);
      if (!v) return std::nullopt;
      if (e.unary_op == UnaryOp::kNot) {
        if (!v->is_bool) return std::nullopt;
        return Scalar{true, v->value != 0 ? 0 : 1};
      }
      if (v->is_bool) return std::nullopt;
      return Scalar{false, -v->value};
    }
    case ExprKind::kBinary: {
      auto a = EvalScalar(*e.operands[0], snapshot);
      auto b = EvalScalar(*e.operands[1], snapshot);
      if (!a || !b) return std::nullopt;
      switch (e.binary_op) {
        case BinaryOp::kAnd:
        case BinaryOp::kOr:
          if (!a->is_bool || !b->is_bool) return std::nullopt;
          return Scalar{true, e.binary_op == BinaryOp::kAnd
                                  ? (a->value && b->value)
                                  : (a->value || b->value)};
        case BinaryOp::kLt:
        case BinaryOp::kLe:
        case BinaryOp::kGt:
        case BinaryOp::kGe:
          if (a->is_bool || b->is_bool) return std::nullopt;
          if (e.binary_op == BinaryOp::kGt) return Scalar{true, a->value > b->value};
          if (e.binary_op == BinaryOp::kGe) return Scalar{true, a->value >= b->value};
          return Scalar{true, Compare(e.binary_op, a->value, b->value)};
        case BinaryOp::kEq:
        case BinaryOp::kNe:
          if (a->is_bool != b->is_bool) return std::nullopt;
          return Scalar{true, Compare(e.binary_op, a->value, b->value)};
        default:
          return std::nullopt;
      }
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

bool EvaluateCondition(const Expr& expr, const Snapshot& snapshot) {
  auto v = EvalScalar(expr, snapshot);
  return v && v->is_bool && v->value != 0;
}

SynthesisInstance MakeInstance(std::vector<SynthesisRow> rows,
                               std::vector<std::int64_t> constants) {
  SynthesisInstance instance;
  if (!rows.empty()) {
    for (const auto& [name, value] : rows.front().snapshot) {
      bool consistent = true;
      for (const auto& row : rows) {
        auto it = row.snapshot.find(name);
        if (it == row.snapshot.end() || it->second.is_bool != value.is_bool) {
          consistent = false;
          break;
        }
      }
      if (consistent) instance.vocabulary.push_back(name);
    }
  }
  const std::set<std::string> keep(instance.vocabulary.begin(),
                                   instance.vocabulary.end());
  for (auto& row : rows) {
    std::erase_if(row.snapshot,
                  [&](const auto& kv) { return !keep.contains(kv.first); });
  }
  instance.rows = std::move(rows);
  std::sort(constants.begin(), constants.end());
  constants.erase(std::unique(constants.begin(), constants.end()),
                  constants.end());
  instance.constants = std::move(constants);
  return instance;
}

SynthesisResult SynthesizeCondition(const SynthesisInstance& instance,
                                    int max_expr_size) {
  SynthesisResult result;
  if (instance.rows.empty()) {
    result.failure = SynthesisFailure::kNoRows;
    return result;
  }
  if (HasContradiction(instance.rows)) {
    result.failure = SynthesisFailure::kContradiction;
    return result;
  }
  Enumerator enumerator(instance);
  result.expr = enumerator.Run(max_expr_size);
  if (!result.expr) result.failure = SynthesisFailure::kNoSolution;
  return result;
}

}  // namespace repairforge
