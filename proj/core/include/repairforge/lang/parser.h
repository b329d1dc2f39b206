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

#ifndef REPAIRFORGE_LANG_PARSER_H_
#define REPAIRFORGE_LANG_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "repairforge/lang/ast.h"

namespace repairforge {

struct SourceFile {
  std::string name;
  std::string text;
};

// Parses one MiniLang compilation unit and numbers its statements in
// pre-order from zero. Throws SyntaxError on malformed input and
// ValidityError on duplicate function or parameter names.
Program Parse(std::string_view source, std::string source_name = "<input>");

// Parses several files into one program. Functions keep file order and
// statement ids run across files.
Program ParseFiles(const std::vector<SourceFile>& files);

// Built-in functions: len(a), array(n), nondet().
bool IsIntrinsic(std::string_view name);
int IntrinsicArity(std::string_view name);

// Checks the static rules that parsing alone does not: every call targets an
// intrinsic or a function of `program` or `externals` with matching arity,
// and statement ids are unique. Throws ValidityError.
void ValidateProgram(const Program& program,
                     const std::vector<FunctionDef>& externals = {});

}  // namespace repairforge

#endif  // REPAIRFORGE_LANG_PARSER_H_
