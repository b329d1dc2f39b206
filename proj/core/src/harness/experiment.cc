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

#include "repairforge/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "repairforge/errors.h"
#include "repairforge/lang/diff.h"

namespace repairforge {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void ExperimentPlan::Validate() const {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  config.Validate();
}

std::string PatchDiff(const BugBundle& bundle, const Patch& patch) {
  const Program patched = ApplyPatch(bundle.program, patch);
  const std::string name = bundle.program_sources.size() == 1
                               ? bundle.program_sources.front().name
                               : std::string("program.mini");
  return Diff(bundle.program, patched, name);
}

namespace {

struct Job {
  const BugBundle* bundle;
  EngineKind engine;
};

std::int64_t EpochMillis(std::chrono::system_clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             t.time_since_epoch())
      .count();
}

ordered_json ToJson(const ExperimentRecord& r, bool with_timing) {
  ordered_json j;
  j["bundle"] = r.bundle;
  j["engine"] = std::string(EngineName(r.engine));
  j["status"] = std::string(OutcomeStatusName(r.outcome.status));
  j["message"] = r.outcome.message;
  j["flaky_tests"] = r.outcome.flaky_tests;
  j["variants_evaluated"] = r.outcome.variants_evaluated;
  if (r.outcome.patch) {
    ordered_json patch;
    std::vector<std::string> edits;
    for (const auto& e : r.outcome.patch->edits) edits.push_back(DescribeEdit(e));
    patch["edits"] = edits;
    patch["seed"] = r.outcome.patch->seed;
    if (with_timing) {
      patch["search_wall_time_ms"] = r.outcome.patch->search_wall_time.count();
    }
    j["patch"] = patch;
  } else {
    j["patch"] = nullptr;
  }
  j["patch_diff"] = r.patch_diff ? ordered_json(*r.patch_diff) : nullptr;
  if (with_timing) {
    j["attempt_wall_time_ms"] = r.outcome.attempt_wall_time.count();
    j["started_ms"] = EpochMillis(r.started);
    j["finished_ms"] = EpochMillis(r.finished);
  }
  return j;
}

}  // namespace

std::vector<ExperimentRecord> RunExperiment(const ExperimentPlan& plan,
                                            std::span<const BugBundle> corpus) {
  plan.Validate();
  std::map<std::string, const BugBundle*> by_id;
  for (const auto& b : corpus) by_id[b.id] = &b;

  std::vector<std::string> ids = plan.bundles;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<EngineKind> engines = plan.engines;
  std::sort(engines.begin(), engines.end());
  engines.erase(std::unique(engines.begin(), engines.end()), engines.end());

  std::vector<Job> jobs;
  for (const auto& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw std::invalid_argument("unknown bundle " + id);
    for (EngineKind e : engines) jobs.push_back({it->second, e});
  }

  std::vector<ExperimentRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      ExperimentRecord& r = records[i];
      r.bundle = jobs[i].bundle->id;
      r.engine = jobs[i].engine;
      r.started = std::chrono::system_clock::now();
      r.outcome = Repair(*jobs[i].bundle, r.engine, plan.config);
      if (r.outcome.patch) {
        r.patch_diff = PatchDiff(*jobs[i].bundle, *r.outcome.patch);
      }
      r.finished = std::chrono::system_clock::now();
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(plan.workers),
                            std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return records;
}

std::string RecordToJson(const ExperimentRecord& record) {
  return ToJson(record, true).dump();
}

std::string CanonicalRecord(const ExperimentRecord& record) {
  return ToJson(record, false).dump();
}

RecordSummary ParseRecord(const std::string& line) {
  RecordSummary s;
  try {
    const auto j = ordered_json::parse(line);
    s.bundle = j.at("bundle").get<std::string>();
    auto engine = ParseEngineName(j.at("engine").get<std::string>());
    auto status = ParseOutcomeStatus(j.at("status").get<std::string>());
    if (!engine || !status) throw ManifestError("bad engine or status");
    s.engine = *engine;
    s.status = *status;
    s.attempt_wall_time =
        std::chrono::milliseconds(j.value("attempt_wall_time_ms", 0));
    if (j.contains("patch") && j["patch"].is_object()) {
      s.edits = j["patch"].at("edits").get<std::vector<std::string>>();
    }
    if (j.contains("patch_diff") && j["patch_diff"].is_string()) {
      s.patch_diff = j["patch_diff"].get<std::string>();
    }
  } catch (const ordered_json::exception& e) {
    throw ManifestError(std::string("malformed record: ") + e.what());
  }
  return s;
}

std::vector<RecordSummary> ReadResults(const fs::path& ndjson) {
  std::ifstream in(ndjson);
  if (!in) throw ManifestError("cannot read " + ndjson.string());
  std::vector<RecordSummary> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(ParseRecord(line));
  }
  return out;
}

void WriteResults(const fs::path& out_dir,
                  std::span<const ExperimentRecord> records) {
  fs::create_directories(out_dir);
  std::ofstream out(out_dir / "results.ndjson");
  for (const auto& r : records) {
    out << RecordToJson(r) << "\n";
    if (r.patch_diff) {
      std::ofstream diff(out_dir / (r.bundle + "." +
                                    std::string(EngineName(r.engine)) +
                                    ".diff"));
      diff << *r.patch_diff;
    }
  }
  if (!out) throw Error("cannot write results to " + out_dir.string());
}

void ApplySeedOverride(RepairConfig& config) {
  const char* env = std::getenv("REPAIRFORGE_SEED");
  if (env == nullptr || *env == '\0') return;
  const std::string_view text(env);
  std::uint64_t seed = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("REPAIRFORGE_SEED is not an unsigned integer");
  }
  config.seed = seed;
}

}  // namespace repairforge
