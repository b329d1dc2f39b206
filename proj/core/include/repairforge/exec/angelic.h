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

#ifndef REPAIRFORGE_EXEC_ANGELIC_H_
#define REPAIRFORGE_EXEC_ANGELIC_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "repairforge/exec/test_runner.h"
#include "repairforge/lang/ast.h"

namespace repairforge {

// Scalar view of a variable at a condition evaluation. Arrays appear as
// their length under the name "len(<array>)".
struct Scalar {
  bool is_bool = false;
  std::int64_t value = 0;

  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

using Snapshot = std::map<std::string, Scalar>;

std::string DescribeSnapshot(const Snapshot& snapshot);

struct ForcingPolicy {
  enum class Kind { kUniform, kPerOccurrence };
  Kind kind = Kind::kUniform;
  int occurrences = 0;

  static ForcingPolicy Uniform() { return {}; }
  static ForcingPolicy PerOccurrence(int k) {
    return {Kind::kPerOccurrence, k};
  }
};

// kCondition overrides the condition of an If or While. kGuard decides
// whether the statement runs at all, as if wrapped in "if (c) { ... }".
// kAuto picks kCondition for If/While and kGuard otherwise.
enum class AngelicMode { kAuto, kCondition, kGuard };

struct AngelicTrace {
  StatementId location;
  // One entry per dynamic evaluation at the location.
  std::vector<bool> forced_values;
  std::vector<Snapshot> snapshots;
  Verdict verdict;
};

// Runs `test` with the value at `location` forced.
//
// Uniform yields two traces: constant true, then constant false.
// PerOccurrence(k) enumerates every boolean sequence over the first
// min(k, n) evaluations, n being the count in an unforced run, false before
// true; later evaluations use the program's own value. Traces whose recorded
// values coincide are reported once. Throws LocationNotExecutedError if an
// unforced run never reaches the location.
std::vector<AngelicTrace> RunAngelic(const Program& program,
                                     const TestCase& test, StatementId location,
                                     ForcingPolicy policy,
                                     std::int64_t budget = kDefaultStepBudget,
                                     AngelicMode mode = AngelicMode::kAuto);

// Forces the given values in order; evaluations past the end use the
// program's own value.
AngelicTrace ReplayForced(const Program& program, const TestCase& test,
                          StatementId location,
                          const std::vector<bool>& forced_values,
                          std::int64_t budget = kDefaultStepBudget,
                          AngelicMode mode = AngelicMode::kAuto);

// Unforced run that records the value taken at each evaluation (always true
// in guard mode). The trace is empty when the location is not reached.
AngelicTrace ObserveLocation(const Program& program, const TestCase& test,
                             StatementId location,
                             std::int64_t budget = kDefaultStepBudget,
                             AngelicMode mode = AngelicMode::kAuto);

}  // namespace repairforge

#endif  // REPAIRFORGE_EXEC_ANGELIC_H_
