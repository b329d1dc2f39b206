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

#ifndef REPAIRFORGE_LANG_PRINTER_H_
#define REPAIRFORGE_LANG_PRINTER_H_

#include <string>
#include <utility>
#include <vector>

#include "repairforge/lang/ast.h"

namespace repairforge {

// Canonical rendering: one statement per line, two-space indentation, no
// trailing whitespace, a blank line between functions. The empty program
// prints as "".
std::string Print(const Program& program);
std::string PrintFunction(const FunctionDef& fn);
std::string PrintStatement(const Statement& stmt, int depth = 0);
std::string PrintExpr(const Expr& expr);

// The 1-based line of each statement in Print(program), keyed by id.
std::vector<std::pair<StatementId, int>> PrintedLines(const Program& program);

}  // namespace repairforge

#endif  // REPAIRFORGE_LANG_PRINTER_H_
