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

#ifndef REPAIRFORGE_HARNESS_EXPERIMENT_H_
#define REPAIRFORGE_HARNESS_EXPERIMENT_H_

#include <chrono>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repairforge/engines/config.h"
#include "repairforge/engines/repair.h"
#include "repairforge/harness/bundle.h"
#include "repairforge/lang/patch.h"

namespace repairforge {

struct ExperimentPlan {
  std::vector<std::string> bundles;
  std::vector<EngineKind> engines;
  RepairConfig config;
  int workers = 1;

  // Throws std::invalid_argument.
  void Validate() const;
};

struct ExperimentRecord {
  std::string bundle;
  EngineKind engine = EngineKind::kGenProg;
  RepairOutcome outcome;
  std::optional<std::string> patch_diff;
  std::chrono::system_clock::time_point started;
  std::chrono::system_clock::time_point finished;
};

// Unified diff between the bundle program and its patched version.
std::string PatchDiff(const BugBundle& bundle, const Patch& patch);

// Runs every (bundle, engine) job of the plan on `workers` threads. Records
// come back in job order: bundle id ascending, then engine order. Throws
// std::invalid_argument for an invalid plan or an unknown bundle id.
std::vector<ExperimentRecord> RunExperiment(const ExperimentPlan& plan,
                                            std::span<const BugBundle> corpus);

// One NDJSON line. The canonical form drops timestamps and wall times so
// that two runs of the same plan compare equal.
std::string RecordToJson(const ExperimentRecord& record);
std::string CanonicalRecord(const ExperimentRecord& record);

// Parses a line produced by RecordToJson. Edits are kept only as their
// descriptions, so patch.edits comes back empty. Throws ManifestError.
struct RecordSummary {
  std::string bundle;
  EngineKind engine = EngineKind::kGenProg;
  OutcomeStatus status = OutcomeStatus::kNoPatch;
  std::chrono::milliseconds attempt_wall_time{0};
  std::vector<std::string> edits;
  std::optional<std::string> patch_diff;
};
RecordSummary ParseRecord(const std::string& line);
std::vector<RecordSummary> ReadResults(const std::filesystem::path& ndjson);

// Writes results.ndjson and one <bundle>.<engine>.diff per patch.
void WriteResults(const std::filesystem::path& out_dir,
                  std::span<const ExperimentRecord> records);

// Applies REPAIRFORGE_SEED when it is set to an unsigned integer. Throws
// std::invalid_argument for any other value.
void ApplySeedOverride(RepairConfig& config);

}  // namespace repairforge

#endif  // REPAIRFORGE_HARNESS_EXPERIMENT_H_
