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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.h"
#include "gtest/gtest.h"

namespace repairforge {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult RunRepairforge(std::vector<std::string> args) {
  args.insert(args.begin(), "repairforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Bundle(const std::string& id) {
  return (testing::CorpusDir() / id).string();
}

fs::path Scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("repairforge_cli_" + name);
  fs::remove_all(p);
  return p;
}

TEST(CliTest, KaliRepairWritesDiff) {
  const fs::path out = Scratch("m8a") / "patch.diff";
  CliResult r = RunRepairforge({"repair", "--engine", "kali", Bundle("M8A"), "--out",
                     out.string()});
  EXPECT_EQ(kExitSuccess, r.code) << r.err;
  std::ifstream in(out);
  std::string diff{std::istreambuf_iterator<char>(in), {}};
  EXPECT_NE(std::string::npos, diff.find("-    a[i + 1] = sample(seed + i);"));
  EXPECT_NE(std::string::npos, diff.find("+    skip;"));
  fs::remove_all(out.parent_path());
}

TEST(CliTest, NoPatchExitCode) {
  EXPECT_EQ(kExitNoPatch,
            RunRepairforge({"repair", "--engine", "kali", Bundle("M8B")}).code);
}

TEST(CliTest, TimeoutCountsAsNoPatch) {
  EXPECT_EQ(kExitNoPatch, RunRepairforge({"repair", "--engine", "genprog", Bundle("M8B"),
                               "--timeout-ms", "1"})
                              .code);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(kExitUsage, RunRepairforge({}).code);
  EXPECT_EQ(kExitUsage, RunRepairforge({"frobnicate"}).code);
  EXPECT_EQ(kExitUsage, RunRepairforge({"repair", Bundle("M8A")}).code);
  EXPECT_EQ(kExitUsage,
            RunRepairforge({"repair", "--engine", "astor", Bundle("M8A")}).code);
  EXPECT_EQ(kExitUsage, RunRepairforge({"repair", "--engine", "genprog", Bundle("M8A"),
                             "--population", "1"})
                            .code);
  EXPECT_EQ(kExitSuccess, RunRepairforge({"--help"}).code);
}

TEST(CliTest, ValidateBundle) {
  CliResult ok = RunRepairforge({"validate-bundle", Bundle("L55A")});
  EXPECT_EQ(kExitSuccess, ok.code);

  const fs::path dir = Scratch("corrupt");
  fs::copy(testing::CorpusDir() / "L55A", dir, fs::copy_options::recursive);
  std::ofstream(dir / "tests" / "stopwatch_test.mini", std::ios::app)
      << "\nfn test_extra() { assert 1 == 2; }\n";
  CliResult bad = RunRepairforge({"validate-bundle", dir.string()});
  EXPECT_EQ(kExitInternal, bad.code);
  EXPECT_NE(std::string::npos, bad.err.find("ValidationError"));
  fs::remove_all(dir);
}

TEST(CliTest, Localize) {
  CliResult r = RunRepairforge({"localize", Bundle("L55A"), "--top", "3"});
  EXPECT_EQ(kExitSuccess, r.code);
  EXPECT_EQ(4, std::count(r.out.begin(), r.out.end(), '\n'));
}

TEST(CliTest, ExperimentThenReport) {
  const fs::path dir = Scratch("exp");
  CliResult exp = RunRepairforge({"run-experiment", "--corpus",
                       testing::CorpusDir().string(), "--bundles",
                       "M8A,SWAP1", "--workers", "2", "--out", dir.string()});
  ASSERT_EQ(kExitSuccess, exp.code) << exp.err;
  const fs::path report = dir / "report";
  CliResult rep = RunRepairforge({"report", "--results", (dir / "results.ndjson").string(),
                       "--corpus", testing::CorpusDir().string(), "--out",
                       report.string()});
  ASSERT_EQ(kExitSuccess, rep.code) << rep.err;
  for (const char* f :
       {"fixability.tsv", "venn.tsv", "timing.tsv", "underspec.tsv"}) {
    EXPECT_TRUE(fs::exists(report / f)) << f;
  }
  std::ifstream in(report / "underspec.tsv");
  std::string text{std::istreambuf_iterator<char>(in), {}};
  EXPECT_EQ("bug\treason\nM8A\tKaliPatchExists\n", text);
  fs::remove_all(dir);
}

TEST(CliTest, ReportOnPaperFixtureInMarkdown) {
  const fs::path fixtures = fs::path(REPAIRFORGE_SOURCE_DIR) / "fixtures";
  CliResult r = RunRepairforge({"report", "--fixture",
                     (fixtures / "paper_table2.tsv").string(), "--labels",
                     (fixtures / "paper_labels.tsv").string(), "--format",
                     "markdown"});
  ASSERT_EQ(kExitSuccess, r.code) << r.err;
  EXPECT_NE(std::string::npos, r.out.find("| Total 47 | 27 | 22 | 35 |"));
  EXPECT_NE(std::string::npos, r.out.find("| genprog+kali+nopol | 12 |"));
  EXPECT_EQ(std::string::npos, r.out.find("| M50 | KaliPatchExists |"));
  EXPECT_EQ(kExitUsage, RunRepairforge({"report", "--fixture", "x", "--format", "csv"}).code);
}

}  // namespace
}  // namespace repairforge
