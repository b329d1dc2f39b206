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

#ifndef REPAIRFORGE_REPORT_REPORT_H_
#define REPAIRFORGE_REPORT_REPORT_H_

#include <chrono>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repairforge/harness/bundle.h"
#include "repairforge/harness/experiment.h"
#include "repairforge/lang/patch.h"

namespace repairforge {

// One (bug, engine) cell of a fixability table.
struct FixEntry {
  std::string bundle;
  EngineKind engine = EngineKind::kGenProg;
  bool fixed = false;
};

struct FixabilityTable {
  std::map<std::string, std::map<EngineKind, bool>> rows;
  std::map<EngineKind, int> totals;
  int union_fixed = 0;
};

// A record counts as fixed iff its status is PatchFound.
std::vector<FixEntry> EntriesFromRecords(std::span<const RecordSummary> records);

// Throws DuplicateJobError when two entries share (bundle, engine).
FixabilityTable AggregateFixability(std::span<const FixEntry> entries);

// Reads a TSV with columns bug, project, genprog, kali, nopol where a fixed
// cell reads "Fixed". Throws ManifestError.
std::vector<FixEntry> ReadFixabilityFixture(const std::filesystem::path& tsv);

// Bugs fixed by exactly the named engines.
struct IntersectionSummary {
  int genprog_only = 0;
  int kali_only = 0;
  int nopol_only = 0;
  int genprog_kali = 0;
  int genprog_nopol = 0;
  int kali_nopol = 0;
  int all_three = 0;

  int Total() const;
};

IntersectionSummary Intersections(const FixabilityTable& table);

struct TimingStats {
  int count = 0;
  std::chrono::milliseconds min{0};
  // Lower-middle element for even counts.
  std::chrono::milliseconds median{0};
  std::chrono::milliseconds max{0};
  double average_ms = 0;
  std::chrono::milliseconds total{0};
  // Every attempt of the engine, including those without a patch.
  std::chrono::milliseconds total_all_attempts{0};
};

// Statistics over PatchFound attempt times. Engines without a patch are
// omitted.
std::map<EngineKind, TimingStats> ComputeTimingStats(
    std::span<const RecordSummary> records);

enum class UnderspecReason { kKaliPatchExists, kAnalystLabel };
std::string_view UnderspecReasonName(UnderspecReason reason);

struct UnderspecFlag {
  std::string bundle;
  UnderspecReason reason = UnderspecReason::kKaliPatchExists;
};

// Over the bundles of the table: flags those with a Kali patch unless the
// Kali patch is labeled Correct, plus those labeled under-specified by an
// analyst. One flag per bundle, sorted by id; a Kali patch takes precedence
// as the reason.
std::vector<UnderspecFlag> FlagUnderspecified(
    const FixabilityTable& table,
    const std::map<std::string, BundleLabels>& labels);

// Reads a TSV with columns bug, patch_id, engine, correctness, readability,
// difficulty. Throws ManifestError.
std::map<std::string, BundleLabels> ReadLabelFixture(
    const std::filesystem::path& tsv);

enum class TableFormat { kTsv, kMarkdown };

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string RenderTable(const TextTable& table, TableFormat format);

TextTable FixabilityReport(const FixabilityTable& table);
TextTable VennReport(const IntersectionSummary& summary);
TextTable TimingReport(const std::map<EngineKind, TimingStats>& stats);
TextTable UnderspecReport(std::span<const UnderspecFlag> flags);

}  // namespace repairforge

#endif  // REPAIRFORGE_REPORT_REPORT_H_
