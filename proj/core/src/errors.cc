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

#include "repairforge/errors.h"

#include <utility>

namespace repairforge {

SyntaxError::SyntaxError(std::string source_name, int line, int column,
                         std::string message)
    : Error(source_name + ":" + std::to_string(line) + ":" +
            std::to_string(column) + ": syntax error: " + message),
      source_name_(std::move(source_name)),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

UnknownStatementError::UnknownStatementError(std::int64_t id)
    : Error("unknown statement id " + std::to_string(id)), id_(id) {}

LocationNotExecutedError::LocationNotExecutedError(std::int64_t id)
    : Error("statement " + std::to_string(id) +
            " is never reached by the test") {}

}  // namespace repairforge
