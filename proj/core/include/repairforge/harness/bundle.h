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

#ifndef REPAIRFORGE_HARNESS_BUNDLE_H_
#define REPAIRFORGE_HARNESS_BUNDLE_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repairforge/exec/test_runner.h"
#include "repairforge/lang/ast.h"
#include "repairforge/lang/parser.h"
#include "repairforge/lang/patch.h"

namespace repairforge {

// Analyst labels for a generated patch.
enum class Correctness { kCorrect, kIncorrect, kUnknown };
enum class Readability { kEasy, kMedium, kHard };
enum class Difficulty { kEasy, kMedium, kHard, kExpert };

std::string_view CorrectnessName(Correctness c);
std::string_view ReadabilityName(Readability r);
std::string_view DifficultyName(Difficulty d);
std::optional<Correctness> ParseCorrectness(std::string_view s);
std::optional<Readability> ParseReadability(std::string_view s);
std::optional<Difficulty> ParseDifficulty(std::string_view s);

struct PatchLabel {
  Correctness correctness = Correctness::kUnknown;
  Readability readability = Readability::kEasy;
  Difficulty difficulty = Difficulty::kEasy;
};

struct BundleLabels {
  std::map<EngineKind, PatchLabel> per_engine;
  // Set when manual analysis found the suite too weak for this bug.
  bool analyst_underspecified = false;
};

// A buggy program, its suite, and metadata. Directory layout:
//
//   <bundle>/manifest.json
//   <bundle>/src/*.mini
//   <bundle>/tests/*.mini
//   <bundle>/reference/patch.diff   (optional)
struct BugBundle {
  std::string id;
  std::filesystem::path root;
  std::vector<SourceFile> program_sources;
  std::vector<SourceFile> test_sources;
  Program program;
  std::vector<TestCase> tests;
  std::vector<std::string> declared_failing;
  std::optional<std::string> reference_patch;
  BundleLabels labels;
  // Ground-truth outcome status per engine ("PatchFound", "NoPatch", ...).
  std::map<EngineKind, std::string> engines_expected;

  const TestCase* FindTest(std::string_view name) const;
};

// Builds a bundle from in-memory sources. Throws SyntaxError, ValidityError
// or ManifestError. Does not run the suite.
BugBundle AssembleBundle(std::string id, std::vector<SourceFile> program_sources,
                         std::vector<SourceFile> test_sources,
                         std::vector<std::string> declared_failing);

// Runs the suite and checks that exactly the declared tests fail, that
// program sources do not use nondet(), and that the reference patch (if any)
// applies and makes every test pass. Throws ValidationError.
void ValidateBundle(const BugBundle& bundle,
                    std::int64_t budget = kDefaultStepBudget);

// Reads and validates a bundle directory.
BugBundle LoadBundle(const std::filesystem::path& dir,
                     std::int64_t budget = kDefaultStepBudget);

// Loads every bundle directory below `corpus_dir`, sorted by id.
std::vector<BugBundle> LoadCorpus(const std::filesystem::path& corpus_dir,
                                  std::int64_t budget = kDefaultStepBudget);

}  // namespace repairforge

#endif  // REPAIRFORGE_HARNESS_BUNDLE_H_
