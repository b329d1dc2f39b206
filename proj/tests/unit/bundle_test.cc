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

#include <filesystem>
#include <fstream>
#include <set>

#include "corpus.h"
#include "gtest/gtest.h"
#include "repairforge/errors.h"

namespace repairforge {
namespace {

namespace fs = std::filesystem;
using testing::CorpusDir;

class TempCopy {
 public:
  explicit TempCopy(const std::string& id)
      : dir_(fs::temp_directory_path() /
             ("repairforge_bundle_" + id + "_" +
              std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
              ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(dir_);
    fs::copy(CorpusDir() / id, dir_, fs::copy_options::recursive);
  }
  ~TempCopy() { fs::remove_all(dir_); }

  const fs::path& dir() const { return dir_; }

  void Write(const std::string& rel, const std::string& text) {
    std::ofstream(dir_ / rel) << text;
  }
  std::string Read(const std::string& rel) {
    std::ifstream in(dir_ / rel);
    return {std::istreambuf_iterator<char>(in), {}};
  }

 private:
  fs::path dir_;
};

TEST(LoadBundleTest, StopwatchBundle) {
  BugBundle bundle = LoadBundle(CorpusDir() / "L55A");
  EXPECT_EQ("L55A", bundle.id);
  EXPECT_EQ(std::vector<std::string>{"test_stop_suspended"},
            bundle.declared_failing);
  EXPECT_EQ(5u, bundle.tests.size());
  EXPECT_TRUE(bundle.reference_patch.has_value());
  EXPECT_EQ("PatchFound", bundle.engines_expected.at(EngineKind::kNopol));
  EXPECT_EQ(Correctness::kCorrect,
            bundle.labels.per_engine.at(EngineKind::kNopol).correctness);
}

TEST(LoadBundleTest, UnderspecSuiteFailsExactlyAsDeclared) {
  BugBundle bundle = LoadBundle(CorpusDir() / "kali_underspec");
  auto results = RunSuite(bundle.program, bundle.tests);
  std::set<std::string> failing;
  for (const auto& r : results) {
    if (!r.passed()) failing.insert(r.test);
  }
  EXPECT_EQ(std::set<std::string>(bundle.declared_failing.begin(),
                                   bundle.declared_failing.end()),
            failing);
  EXPECT_TRUE(bundle.labels.analyst_underspecified);
}

TEST(LoadBundleTest, DeclaredFailingTestThatPasses) {
  TempCopy copy("L55A");
  std::string manifest = copy.Read("manifest.json");
  const std::string from = "\"test_stop_suspended\"";
  manifest.replace(manifest.find(from), from.size(), "\"test_suspend\"");
  copy.Write("manifest.json", manifest);
  EXPECT_THROW(LoadBundle(copy.dir()), ValidationError);
}

TEST(LoadBundleTest, UndeclaredFailure) {
  TempCopy copy("M8B");
  std::string manifest = copy.Read("manifest.json");
  const std::string from = "\"test_fill_content\",";
  manifest.erase(manifest.find(from), from.size());
  copy.Write("manifest.json", manifest);
  EXPECT_THROW(LoadBundle(copy.dir()), ValidationError);
}

TEST(LoadBundleTest, BrokenReferencePatch) {
  TempCopy copy("M70A");
  std::string diff = copy.Read("reference/patch.diff");
  diff.replace(diff.find("clamp_range(v, 0, hi)"), 21, "clamp_low(v, 1)");
  copy.Write("reference/patch.diff", diff);
  EXPECT_THROW(LoadBundle(copy.dir()), ValidationError);
}

TEST(LoadBundleTest, NondetInProgramRejected) {
  TempCopy copy("NOVAR1");
  copy.Write("src/version.mini", "fn version() { return nondet(); }\n");
  fs::remove(copy.dir() / "reference/patch.diff");
  EXPECT_THROW(LoadBundle(copy.dir()), ValidationError);
}

TEST(LoadBundleTest, MalformedManifest) {
  TempCopy copy("NOVAR1");
  copy.Write("manifest.json", "{ \"id\": ");
  EXPECT_THROW(LoadBundle(copy.dir()), ManifestError);
  copy.Write("manifest.json", "{ \"id\": \"NOVAR1\" }");
  EXPECT_THROW(LoadBundle(copy.dir()), ManifestError);
}

TEST(LoadBundleTest, SyntaxErrorInSource) {
  TempCopy copy("NOVAR1");
  copy.Write("src/version.mini", "fn version( { return 41; }\n");
  EXPECT_THROW(LoadBundle(copy.dir()), SyntaxError);
}

TEST(LoadCorpusTest, SortedAndComplete) {
  auto corpus = LoadCorpus(CorpusDir());
  EXPECT_GE(corpus.size(), 12u);
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    EXPECT_LT(corpus[i - 1].id, corpus[i].id);
  }
  for (const auto& b : corpus) {
    EXPECT_FALSE(b.declared_failing.empty()) << b.id;
    EXPECT_TRUE(b.reference_patch.has_value()) << b.id;
    EXPECT_TRUE(DetectFlaky(b.program, b.tests, kDefaultStepBudget, 3).empty())
        << b.id;
  }
}

TEST(LabelNamesTest, RoundTrip) {
  for (auto c : {Correctness::kCorrect, Correctness::kIncorrect,
                 Correctness::kUnknown}) {
    EXPECT_EQ(c, ParseCorrectness(CorrectnessName(c)));
  }
  for (auto d : {Difficulty::kEasy, Difficulty::kMedium, Difficulty::kHard,
                 Difficulty::kExpert}) {
    EXPECT_EQ(d, ParseDifficulty(DifficultyName(d)));
  }
  EXPECT_FALSE(ParseReadability("Trivial").has_value());
}

}  // namespace
}  // namespace repairforge
