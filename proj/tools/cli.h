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

#ifndef REPAIRFORGE_TOOLS_CLI_H_
#define REPAIRFORGE_TOOLS_CLI_H_

#include <ostream>

namespace repairforge {

// Process exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNoPatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitFlaky = 4;

// Entry point of the repairforge command line. Subcommands: repair,
// localize, run-experiment, report, validate-bundle.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace repairforge

#endif  // REPAIRFORGE_TOOLS_CLI_H_
