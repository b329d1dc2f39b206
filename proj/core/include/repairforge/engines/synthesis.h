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

#ifndef REPAIRFORGE_ENGINES_SYNTHESIS_H_
#define REPAIRFORGE_ENGINES_SYNTHESIS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "repairforge/exec/angelic.h"
#include "repairforge/lang/ast.h"

namespace repairforge {

struct SynthesisRow {
  Snapshot snapshot;
  bool expected = false;
};

struct SynthesisInstance {
  std::vector<SynthesisRow> rows;
  // Names bound in every snapshot. "len(a)" names stand for len(a).
  std::vector<std::string> vocabulary;
  std::vector<std::int64_t> constants;
};

enum class SynthesisFailure {
  kNone,
  kNoRows,
  kContradiction,
  kNoSolution,
};

std::string_view SynthesisFailureName(SynthesisFailure failure);

struct SynthesisResult {
  ExprPtr expr;
  SynthesisFailure failure = SynthesisFailure::kNone;

  bool ok() const { return expr != nullptr; }
};

// Bottom-up enumeration of boolean conditions over the vocabulary and the
// constants using <, <=, ==, !=, !, &&, ||, true and false. Returns the
// first agreeing expression in size order, so the answer has the fewest
// nodes among all agreeing expressions of size <= max_expr_size. A
// vocabulary term such as len(a) counts as one node.
//
// Within one size, candidates come in grammar order: variables, constants,
// comparisons (<, <=, ==, !=), negation, conjunction, disjunction. Operands
// follow vocabulary order and then constant-pool order. Candidates that
// agree with an earlier candidate on every row are dropped.
SynthesisResult SynthesizeCondition(const SynthesisInstance& instance,
                                    int max_expr_size);

// The expression a vocabulary name denotes: a variable, or len(a).
ExprPtr VocabularyTerm(const std::string& name);

// Evaluates a synthesized condition against a snapshot. Unknown names and
// type mismatches evaluate to false.
bool EvaluateCondition(const Expr& expr, const Snapshot& snapshot);

// Keeps the names bound in every snapshot with the same type everywhere,
// sorted, and strips everything else from the rows.
SynthesisInstance MakeInstance(std::vector<SynthesisRow> rows,
                               std::vector<std::int64_t> constants);

}  // namespace repairforge

#endif  // REPAIRFORGE_ENGINES_SYNTHESIS_H_
