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

#ifndef REPAIRFORGE_SRC_EXEC_INTERPRETER_H_
#define REPAIRFORGE_SRC_EXEC_INTERPRETER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "repairforge/exec/angelic.h"
#include "repairforge/exec/test_runner.h"
#include "repairforge/lang/ast.h"

namespace repairforge::internal {

// Intercepts the decision taken at one program statement.
struct ConditionControl {
  StatementId location;
  bool guard = false;
  // Returns the value to force at the given evaluation, or nullopt to let
  // the program decide. Null means never force.
  std::function<std::optional<bool>(std::size_t occurrence)> force;

  std::vector<bool> values;
  std::vector<Snapshot> snapshots;
};

TestResult Execute(const Program& program, const TestCase& test,
                   std::int64_t budget, std::span<const std::int64_t> tape,
                   ConditionControl* control);

}  // namespace repairforge::internal

#endif  // REPAIRFORGE_SRC_EXEC_INTERPRETER_H_
