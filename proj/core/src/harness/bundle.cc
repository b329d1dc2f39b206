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

#include "repairforge/harness/bundle.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "repairforge/errors.h"
#include "repairforge/lang/diff.h"
#include "repairforge/lang/printer.h"

namespace repairforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> ParseNamed(std::string_view s, const Enum (&values)[N],
                               std::string_view (*name)(Enum)) {
  for (Enum v : values) {
    if (name(v) == s) return v;
  }
  return std::nullopt;
}

constexpr Correctness kCorrectness[] = {
    Correctness::kCorrect, Correctness::kIncorrect, Correctness::kUnknown};
constexpr Readability kReadability[] = {
    Readability::kEasy, Readability::kMedium, Readability::kHard};
constexpr Difficulty kDifficulty[] = {Difficulty::kEasy, Difficulty::kMedium,
                                      Difficulty::kHard, Difficulty::kExpert};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<SourceFile> ReadSources(const fs::path& dir) {
  std::vector<SourceFile> files;
  if (!fs::is_directory(dir)) {
    throw ManifestError("missing directory " + dir.string());
  }
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mini") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    files.push_back({p.filename().string(), ReadFile(p)});
  }
  if (files.empty()) throw ManifestError("no .mini files in " + dir.string());
  return files;
}

bool UsesNondet(const Expr& e) {
  if (e.kind == ExprKind::kCall && e.name == "nondet") return true;
  return std::any_of(e.operands.begin(), e.operands.end(),
                     [](const ExprPtr& op) { return UsesNondet(*op); });
}

PatchLabel ParseLabel(const json& j, const std::string& where) {
  PatchLabel label;
  auto field = [&](const char* key) -> std::string {
    if (!j.contains(key) || !j[key].is_string()) {
      throw ManifestError(where + ": label needs string field '" + key + "'");
    }
    return j[key].get<std::string>();
  };
  auto c = ParseCorrectness(field("correctness"));
  auto r = ParseReadability(field("readability"));
  auto d = ParseDifficulty(field("difficulty"));
  if (!c || !r || !d) throw ManifestError(where + ": unknown label value");
  label.correctness = *c;
  label.readability = *r;
  label.difficulty = *d;
  return label;
}

}  // namespace

std::string_view CorrectnessName(Correctness c) {
  switch (c) {
    case Correctness::kCorrect:
      return "Correct";
    case Correctness::kIncorrect:
      return "Incorrect";
    case Correctness::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::string_view ReadabilityName(Readability r) {
  switch (r) {
    case Readability::kEasy:
      return "Easy";
    case Readability::kMedium:
      return "Medium";
    case Readability::kHard:
      return "Hard";
  }
  return "?";
}

std::string_view DifficultyName(Difficulty d) {
  switch (d) {
    case Difficulty::kEasy:
      return "Easy";
    case Difficulty::kMedium:
      return "Medium";
    case Difficulty::kHard:
      return "Hard";
    case Difficulty::kExpert:
      return "Expert";
  }
  return "?";
}

std::optional<Correctness> ParseCorrectness(std::string_view s) {
  return ParseNamed(s, kCorrectness, &CorrectnessName);
}

std::optional<Readability> ParseReadability(std::string_view s) {
  return ParseNamed(s, kReadability, &ReadabilityName);
}

std::optional<Difficulty> ParseDifficulty(std::string_view s) {
  return ParseNamed(s, kDifficulty, &DifficultyName);
}

const TestCase* BugBundle::FindTest(std::string_view name) const {
  for (const auto& t : tests) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

BugBundle AssembleBundle(std::string id, std::vector<SourceFile> program_sources,
                         std::vector<SourceFile> test_sources,
                         std::vector<std::string> declared_failing) {
  BugBundle bundle;
  bundle.id = std::move(id);
  bundle.program = ParseFiles(program_sources);
  bundle.program.source_name = bundle.id;
  ValidateProgram(bundle.program);

  Program test_unit = ParseFiles(test_sources);
  for (const auto& fn : test_unit.functions) {
    if (bundle.program.FindFunction(fn.name) != nullptr) {
      throw ValidityError("test function '" + fn.name +
                          "' shadows a program function");
    }
  }
  ValidateProgram(test_unit, bundle.program.functions);
  bundle.tests = ExtractTests(test_unit);
  if (bundle.tests.empty()) throw ManifestError(bundle.id + ": no tests");

  std::set<std::string> failing;
  for (const auto& name : declared_failing) {
    if (!failing.insert(name).second) {
      throw ManifestError(bundle.id + ": failing test listed twice: " + name);
    }
    auto it = std::find_if(bundle.tests.begin(), bundle.tests.end(),
                           [&](const TestCase& t) { return t.name == name; });
    if (it == bundle.tests.end()) {
      throw ManifestError(bundle.id + ": unknown failing test " + name);
    }
    it->declared_failing = true;
  }
  bundle.program_sources = std::move(program_sources);
  bundle.test_sources = std::move(test_sources);
  bundle.declared_failing = std::move(declared_failing);
  return bundle;
}

void ValidateBundle(const BugBundle& bundle, std::int64_t budget) {
  const std::string& id = bundle.id;
  ForEachStatement(bundle.program, [&](const Statement& s, const FunctionDef& fn) {
    const bool nondet = (s.expr && UsesNondet(*s.expr)) ||
                        (s.index && UsesNondet(*s.index));
    if (nondet) {
      throw ValidationError(id + ": nondet() used in program function " +
                            fn.name);
    }
  });

  if (bundle.declared_failing.empty()) {
    throw ValidationError(id + ": no failing test declared");
  }
  for (const auto& r : RunSuite(bundle.program, bundle.tests, budget)) {
    const bool declared =
        std::find(bundle.declared_failing.begin(),
                  bundle.declared_failing.end(),
                  r.test) != bundle.declared_failing.end();
    if (declared && r.passed()) {
      throw ValidationError(id + ": declared failing test " + r.test +
                            " passes");
    }
    if (!declared && !r.passed()) {
      throw ValidationError(id + ": test " + r.test + " fails (" +
                            DescribeVerdict(r.verdict) +
                            ") but is not declared failing");
    }
  }

  if (!bundle.reference_patch) return;
  std::vector<SourceFile> fixed;
  try {
    // The diff is against the concatenation of the source files.
    std::string text;
    for (const auto& f : bundle.program_sources) text += f.text;
    fixed.push_back({"fixed.mini", ApplyUnifiedDiff(text, *bundle.reference_patch)});
  } catch (const Error& e) {
    throw ValidationError(id + ": reference patch does not apply: " + e.what());
  }
  Program fixed_program;
  try {
    fixed_program = ParseFiles(fixed);
    ValidateProgram(fixed_program);
  } catch (const Error& e) {
    throw ValidationError(id + ": reference fix does not parse: " + e.what());
  }
  for (const auto& r : RunSuite(fixed_program, bundle.tests, budget)) {
    if (!r.passed()) {
      throw ValidationError(id + ": reference fix fails " + r.test + " (" +
                            DescribeVerdict(r.verdict) + ")");
    }
  }
}

BugBundle LoadBundle(const fs::path& dir, std::int64_t budget) {
  const fs::path manifest_path = dir / "manifest.json";
  json manifest;
  try {
    manifest = json::parse(ReadFile(manifest_path));
  } catch (const json::exception& e) {
    throw ManifestError(manifest_path.string() + ": " + e.what());
  }
  if (!manifest.is_object()) {
    throw ManifestError(manifest_path.string() + ": not a JSON object");
  }

  std::string id = dir.filename().string();
  if (manifest.contains("id")) {
    if (!manifest["id"].is_string()) throw ManifestError("id must be a string");
    id = manifest["id"].get<std::string>();
  }
  std::vector<std::string> failing;
  if (!manifest.contains("failing_tests") ||
      !manifest["failing_tests"].is_array()) {
    throw ManifestError(id + ": manifest needs a failing_tests array");
  }
  for (const auto& name : manifest["failing_tests"]) {
    if (!name.is_string()) throw ManifestError(id + ": bad failing test name");
    failing.push_back(name.get<std::string>());
  }

  BugBundle bundle = AssembleBundle(id, ReadSources(dir / "src"),
                                    ReadSources(dir / "tests"),
                                    std::move(failing));
  bundle.root = dir;

  if (manifest.contains("labels")) {
    const json& labels = manifest["labels"];
    if (!labels.is_object()) throw ManifestError(id + ": labels not an object");
    bundle.labels.analyst_underspecified =
        labels.value("analyst_underspecified", false);
    if (labels.contains("patches")) {
      for (const auto& [engine_name, label] : labels["patches"].items()) {
        auto engine = ParseEngineName(engine_name);
        if (!engine) throw ManifestError(id + ": unknown engine " + engine_name);
        bundle.labels.per_engine[*engine] = ParseLabel(label, id);
      }
    }
  }
  if (manifest.contains("engines_expected")) {
    for (const auto& [engine_name, status] :
         manifest["engines_expected"].items()) {
      auto engine = ParseEngineName(engine_name);
      if (!engine || !status.is_string()) {
        throw ManifestError(id + ": bad engines_expected entry " + engine_name);
      }
      bundle.engines_expected[*engine] = status.get<std::string>();
    }
  }

  const fs::path reference = dir / "reference" / "patch.diff";
  if (fs::exists(reference)) bundle.reference_patch = ReadFile(reference);

  ValidateBundle(bundle, budget);
  return bundle;
}

std::vector<BugBundle> LoadCorpus(const fs::path& corpus_dir,
                                  std::int64_t budget) {
  if (!fs::is_directory(corpus_dir)) {
    throw ManifestError("corpus directory not found: " + corpus_dir.string());
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.is_directory() && fs::exists(entry.path() / "manifest.json")) {
      dirs.push_back(entry.path());
    }
  }
  std::vector<BugBundle> bundles;
  for (const auto& d : dirs) bundles.push_back(LoadBundle(d, budget));
  std::sort(bundles.begin(), bundles.end(),
            [](const BugBundle& a, const BugBundle& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < bundles.size(); ++i) {
    if (bundles[i].id == bundles[i - 1].id) {
      throw ManifestError("duplicate bundle id " + bundles[i].id);
    }
  }
  return bundles;
}

}  // namespace repairforge
