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

#include "repairforge/exec/angelic.h"

#include <algorithm>
#include <utility>

#include "interpreter.h"
#include "repairforge/errors.h"

namespace repairforge {
namespace {

bool GuardMode(const Program& program, StatementId location,
               AngelicMode mode) {
  if (mode != AngelicMode::kAuto) return mode == AngelicMode::kGuard;
  const Statement* s = FindStatement(program, location);
  if (s == nullptr) throw UnknownStatementError(location.value);
  return s->kind != StmtKind::kIf && s->kind != StmtKind::kWhile;
}

AngelicTrace RunControlled(
    const Program& program, const TestCase& test, StatementId location,
    bool guard, std::int64_t budget,
    std::function<std::optional<bool>(std::size_t)> force) {
  internal::ConditionControl control;
  control.location = location;
  control.guard = guard;
  control.force = std::move(force);
  TestResult result = internal::Execute(program, test, budget, {}, &control);
  AngelicTrace trace;
  trace.location = location;
  trace.forced_values = std::move(control.values);
  trace.snapshots = std::move(control.snapshots);
  trace.verdict = result.verdict;
  return trace;
}

}  // namespace

std::string DescribeSnapshot(const Snapshot& snapshot) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, v] : snapshot) {
    if (!first) out += ", ";
    first = false;
    out += name + "=";
    out += v.is_bool ? (v.value ? "true" : "false") : std::to_string(v.value);
  }
  return out + "}";
}

std::vector<AngelicTrace> RunAngelic(const Program& program,
                                     const TestCase& test, StatementId location,
                                     ForcingPolicy policy, std::int64_t budget,
                                     AngelicMode mode) {
  bool guard = GuardMode(program, location, mode);
  AngelicTrace observed =
      RunControlled(program, test, location, guard, budget, nullptr);
  if (observed.forced_values.empty()) {
    throw LocationNotExecutedError(location.value);
  }

  std::vector<AngelicTrace> traces;
  if (policy.kind == ForcingPolicy::Kind::kUniform) {
    for (bool value : {true, false}) {
      traces.push_back(RunControlled(
          program, test, location, guard, budget,
          [value](std::size_t) -> std::optional<bool> { return value; }));
    }
    return traces;
  }

  const std::size_t width = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(policy.occurrences, 0)),
      observed.forced_values.size());
  // Capped to keep the enumeration bounded.
  const std::size_t bits = std::min<std::size_t>(width, 16);
  const std::uint64_t count = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto force = [mask, bits](std::size_t occurrence) -> std::optional<bool> {
      if (occurrence >= bits) return std::nullopt;
      // Most significant bit drives the first evaluation.
      return ((mask >> (bits - 1 - occurrence)) & 1U) != 0;
    };
    AngelicTrace trace =
        RunControlled(program, test, location, guard, budget, force);
    bool duplicate = std::any_of(
        traces.begin(), traces.end(), [&](const AngelicTrace& t) {
          return t.forced_values == trace.forced_values;
        });
    if (!duplicate) traces.push_back(std::move(trace));
  }
  return traces;
}

AngelicTrace ReplayForced(const Program& program, const TestCase& test,
                          StatementId location,
                          const std::vector<bool>& forced_values,
                          std::int64_t budget, AngelicMode mode) {
  bool guard = GuardMode(program, location, mode);
  return RunControlled(
      program, test, location, guard, budget,
      [&forced_values](std::size_t occurrence) -> std::optional<bool> {
        if (occurrence < forced_values.size()) return forced_values[occurrence];
        return std::nullopt;
      });
}

AngelicTrace ObserveLocation(const Program& program, const TestCase& test,
                             StatementId location, std::int64_t budget,
                             AngelicMode mode) {
  bool guard = GuardMode(program, location, mode);
  return RunControlled(program, test, location, guard, budget, nullptr);
}

}  // namespace repairforge
