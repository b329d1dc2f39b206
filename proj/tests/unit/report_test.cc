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

#include "repairforge/report/report.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "repairforge/errors.h"

namespace repairforge {
namespace {

const std::filesystem::path kFixtures =
    std::filesystem::path(REPAIRFORGE_SOURCE_DIR) / "fixtures";

FixabilityTable PaperTable() {
  return AggregateFixability(
      ReadFixabilityFixture(kFixtures / "paper_table2.tsv"));
}

TEST(FixabilityTest, PaperTotals) {
  FixabilityTable t = PaperTable();
  EXPECT_EQ(47u, t.rows.size());
  EXPECT_EQ(27, t.totals[EngineKind::kGenProg]);
  EXPECT_EQ(22, t.totals[EngineKind::kKali]);
  EXPECT_EQ(35, t.totals[EngineKind::kNopol]);
  EXPECT_EQ(47, t.union_fixed);
}

TEST(FixabilityTest, EmptyInput) {
  FixabilityTable t = AggregateFixability({});
  EXPECT_EQ(0, t.union_fixed);
  for (EngineKind e : kAllEngines) EXPECT_EQ(0, t.totals[e]);
  EXPECT_EQ(0, Intersections(t).Total());
}

TEST(FixabilityTest, DuplicateJobRejected) {
  std::vector<FixEntry> entries = {{"A", EngineKind::kKali, true},
                                   {"A", EngineKind::kKali, false}};
  EXPECT_THROW(AggregateFixability(entries), DuplicateJobError);
}

TEST(IntersectionsTest, PaperRegions) {
  IntersectionSummary s = Intersections(PaperTable());
  EXPECT_EQ(12, s.all_three);
  EXPECT_EQ(18, s.nopol_only);
  EXPECT_EQ(0, s.kali_only);
  EXPECT_EQ(47, s.Total());
}

TEST(IntersectionsTest, SingleEngine) {
  std::vector<FixEntry> entries = {{"A", EngineKind::kGenProg, false},
                                   {"A", EngineKind::kKali, false},
                                   {"A", EngineKind::kNopol, true}};
  IntersectionSummary s = Intersections(AggregateFixability(entries));
  EXPECT_EQ(1, s.nopol_only);
  EXPECT_EQ(1, s.Total());
  EXPECT_EQ(0, s.genprog_only + s.kali_only + s.all_three);
}

TEST(IntersectionsTest, RegionsPartitionUnion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<FixEntry> entries;
    const int bugs = static_cast<int>(rng() % 20);
    for (int b = 0; b < bugs; ++b) {
      for (EngineKind e : kAllEngines) {
        if (rng() % 4) entries.push_back({"B" + std::to_string(b), e, rng() % 2 == 0});
      }
    }
    FixabilityTable t = AggregateFixability(entries);
    IntersectionSummary s = Intersections(t);
    EXPECT_EQ(t.union_fixed, s.Total());
    EXPECT_EQ(t.totals[EngineKind::kKali],
              s.kali_only + s.genprog_kali + s.kali_nopol + s.all_three);
  }
}

TEST(UnderspecTest, PaperFixtureMatchesChallengingBugs) {
  auto labels = ReadLabelFixture(kFixtures / "paper_labels.tsv");
  auto flags = FlagUnderspecified(PaperTable(), labels);
  std::set<std::string> flagged;
  for (const auto& f : flags) {
    EXPECT_EQ(UnderspecReason::kKaliPatchExists, f.reason);
    flagged.insert(f.bundle);
  }
  std::set<std::string> expected;
  std::ifstream in(kFixtures / "paper_table3.tsv");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (!line.empty()) expected.insert(line.substr(0, line.find('\t')));
  }
  EXPECT_EQ(21u, expected.size());
  EXPECT_EQ(expected, flagged);
  EXPECT_FALSE(flagged.contains("M50"));
}

TEST(UnderspecTest, LabelsOnlyWithoutKaliPatches) {
  std::vector<FixEntry> entries = {{"A", EngineKind::kGenProg, true},
                                   {"B", EngineKind::kNopol, true}};
  std::map<std::string, BundleLabels> labels;
  labels["B"].analyst_underspecified = true;
  auto flags = FlagUnderspecified(AggregateFixability(entries), labels);
  ASSERT_EQ(1u, flags.size());
  EXPECT_EQ("B", flags[0].bundle);
  EXPECT_EQ(UnderspecReason::kAnalystLabel, flags[0].reason);
}

TEST(UnderspecTest, KaliPatchWithoutLabelIsFlagged) {
  std::vector<FixEntry> entries = {{"A", EngineKind::kKali, true}};
  auto flags = FlagUnderspecified(AggregateFixability(entries), {});
  ASSERT_EQ(1u, flags.size());
  EXPECT_EQ(UnderspecReason::kKaliPatchExists, flags[0].reason);
}

RecordSummary Found(EngineKind e, std::int64_t ms) {
  RecordSummary r;
  r.bundle = "b" + std::to_string(ms);
  r.engine = e;
  r.status = OutcomeStatus::kPatchFound;
  r.attempt_wall_time = std::chrono::milliseconds(ms);
  return r;
}

TEST(TimingTest, SingleSample) {
  std::vector<RecordSummary> records = {Found(EngineKind::kNopol, 31'000)};
  auto stats = ComputeTimingStats(records);
  ASSERT_EQ(1u, stats.size());
  const TimingStats& s = stats[EngineKind::kNopol];
  EXPECT_EQ(31'000, s.min.count());
  EXPECT_EQ(31'000, s.median.count());
  EXPECT_EQ(31'000, s.max.count());
  EXPECT_DOUBLE_EQ(31'000.0, s.average_ms);
}

TEST(TimingTest, LowerMedian) {
  std::vector<RecordSummary> records;
  for (int t : {4, 1, 3, 2}) records.push_back(Found(EngineKind::kKali, t));
  EXPECT_EQ(2, ComputeTimingStats(records)[EngineKind::kKali].median.count());
}

TEST(TimingTest, NoPatchRecordsOnlyCountInAllAttempts) {
  std::vector<RecordSummary> records = {Found(EngineKind::kKali, 5)};
  RecordSummary miss = Found(EngineKind::kKali, 100);
  miss.status = OutcomeStatus::kTimeout;
  records.push_back(miss);
  RecordSummary other = Found(EngineKind::kGenProg, 7);
  other.status = OutcomeStatus::kNoPatch;
  records.push_back(other);
  auto stats = ComputeTimingStats(records);
  EXPECT_FALSE(stats.contains(EngineKind::kGenProg));
  EXPECT_EQ(1, stats[EngineKind::kKali].count);
  EXPECT_EQ(5, stats[EngineKind::kKali].total.count());
  EXPECT_EQ(105, stats[EngineKind::kKali].total_all_attempts.count());
}

TEST(TimingTest, MatchesSortOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<RecordSummary> records;
    std::vector<std::int64_t> times;
    const int n = 1 + static_cast<int>(rng() % 15);
    for (int i = 0; i < n; ++i) {
      times.push_back(static_cast<std::int64_t>(rng() % 1000));
      records.push_back(Found(EngineKind::kGenProg, times.back()));
    }
    std::sort(times.begin(), times.end());
    std::int64_t sum = 0;
    for (auto t : times) sum += t;
    const TimingStats s = ComputeTimingStats(records)[EngineKind::kGenProg];
    EXPECT_EQ(times.front(), s.min.count());
    EXPECT_EQ(times.back(), s.max.count());
    EXPECT_EQ(times[(times.size() - 1) / 2], s.median.count());
    EXPECT_EQ(sum, s.total.count());
    EXPECT_DOUBLE_EQ(static_cast<double>(sum) / n, s.average_ms);
    EXPECT_LE(s.min, s.median);
    EXPECT_LE(s.median, s.max);
    EXPECT_LE(static_cast<double>(s.min.count()), s.average_ms);
    EXPECT_GE(static_cast<double>(s.max.count()), s.average_ms);
  }
}

TEST(RenderTest, TsvAndMarkdown) {
  TextTable t{{"a", "b"}, {{"1", "2"}}};
  EXPECT_EQ("a\tb\n1\t2\n", RenderTable(t, TableFormat::kTsv));
  EXPECT_EQ("| a | b |\n|---|---|\n| 1 | 2 |\n",
            RenderTable(t, TableFormat::kMarkdown));
}

TEST(RenderTest, FixabilityTotalsRow) {
  std::string tsv = RenderTable(FixabilityReport(PaperTable()), TableFormat::kTsv);
  EXPECT_NE(std::string::npos, tsv.find("Total 47\t27\t22\t35\n"));
  EXPECT_NE(std::string::npos, tsv.find("L55\t-\t-\tFixed\n"));
}

}  // namespace
}  // namespace repairforge
