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

#ifndef REPAIRFORGE_LANG_DIFF_H_
#define REPAIRFORGE_LANG_DIFF_H_

#include <string>
#include <string_view>

#include "repairforge/lang/ast.h"

namespace repairforge {

// Unified diff (three lines of context) between the canonical prints of the
// two programs. Empty iff the prints are identical.
std::string Diff(const Program& original, const Program& patched,
                 std::string_view name = "program.mini");

// Line-based unified diff of two texts.
std::string UnifiedDiff(std::string_view before, std::string_view after,
                        std::string_view name = "program.mini",
                        int context = 3);

// Applies a unified diff produced by UnifiedDiff (or by diff -u) to `text`.
// Context and removed lines must match exactly. Throws InvalidEditError.
std::string ApplyUnifiedDiff(std::string_view text, std::string_view diff);

}  // namespace repairforge

#endif  // REPAIRFORGE_LANG_DIFF_H_
