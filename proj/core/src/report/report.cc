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
#include <numeric>
#include <sstream>

#include "repairforge/errors.h"

namespace repairforge {

namespace fs = std::filesystem;

std::vector<FixEntry> EntriesFromRecords(
    std::span<const RecordSummary> records) {
  std::vector<FixEntry> out;
  for (const auto& r : records) {
    out.push_back({r.bundle, r.engine, r.status == OutcomeStatus::kPatchFound});
  }
  return out;
}

FixabilityTable AggregateFixability(std::span<const FixEntry> entries) {
  FixabilityTable table;
  for (EngineKind e : kAllEngines) table.totals[e] = 0;
  for (const auto& entry : entries) {
    auto& row = table.rows[entry.bundle];
    if (!row.emplace(entry.engine, entry.fixed).second) {
      throw DuplicateJobError("duplicate entry for " + entry.bundle + "/" +
                              std::string(EngineName(entry.engine)));
    }
    if (entry.fixed) ++table.totals[entry.engine];
  }
  for (const auto& [bundle, row] : table.rows) {
    if (std::any_of(row.begin(), row.end(),
                    [](const auto& kv) { return kv.second; })) {
      ++table.union_fixed;
    }
  }
  return table;
}

namespace {

std::vector<std::vector<std::string>> ReadTsv(const fs::path& path,
                                              std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot read " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    if (cells.size() != columns) {
      throw ManifestError(path.string() + ":" + std::to_string(line_no) +
                          ": expected " + std::to_string(columns) +
                          " columns");
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

template <typename T>
T Require(std::optional<T> value, const std::string& what) {
  if (!value) throw ManifestError("bad value: " + what);
  return *value;
}

}  // namespace

std::vector<FixEntry> ReadFixabilityFixture(const fs::path& tsv) {
  std::vector<FixEntry> out;
  for (const auto& cells : ReadTsv(tsv, 5)) {
    for (std::size_t i = 0; i < 3; ++i) {
      out.push_back({cells[0], kAllEngines[i], cells[2 + i] == "Fixed"});
    }
  }
  return out;
}

int IntersectionSummary::Total() const {
  return genprog_only + kali_only + nopol_only + genprog_kali + genprog_nopol +
         kali_nopol + all_three;
}

IntersectionSummary Intersections(const FixabilityTable& table) {
  IntersectionSummary s;
  for (const auto& [bundle, row] : table.rows) {
    auto fixed = [&row](EngineKind e) {
      auto it = row.find(e);
      return it != row.end() && it->second;
    };
    const bool g = fixed(EngineKind::kGenProg);
    const bool k = fixed(EngineKind::kKali);
    const bool n = fixed(EngineKind::kNopol);
    if (g && k && n) {
      ++s.all_three;
    } else if (g && k) {
      ++s.genprog_kali;
    } else if (g && n) {
      ++s.genprog_nopol;
    } else if (k && n) {
      ++s.kali_nopol;
    } else if (g) {
      ++s.genprog_only;
    } else if (k) {
      ++s.kali_only;
    } else if (n) {
      ++s.nopol_only;
    }
  }
  return s;
}

std::map<EngineKind, TimingStats> ComputeTimingStats(
    std::span<const RecordSummary> records) {
  std::map<EngineKind, std::vector<std::chrono::milliseconds>> found;
  std::map<EngineKind, std::chrono::milliseconds> all;
  for (const auto& r : records) {
    all[r.engine] += r.attempt_wall_time;
    if (r.status == OutcomeStatus::kPatchFound) {
      found[r.engine].push_back(r.attempt_wall_time);
    }
  }
  std::map<EngineKind, TimingStats> out;
  for (auto& [engine, times] : found) {
    std::sort(times.begin(), times.end());
    TimingStats s;
    s.count = static_cast<int>(times.size());
    s.min = times.front();
    s.max = times.back();
    s.median = times[(times.size() - 1) / 2];
    s.total = std::accumulate(times.begin(), times.end(),
                              std::chrono::milliseconds(0));
    s.average_ms = static_cast<double>(s.total.count()) / s.count;
    s.total_all_attempts = all[engine];
    out[engine] = s;
  }
  return out;
}

std::string_view UnderspecReasonName(UnderspecReason reason) {
  switch (reason) {
    case UnderspecReason::kKaliPatchExists:
      return "KaliPatchExists";
    case UnderspecReason::kAnalystLabel:
      return "AnalystLabel";
  }
  return "?";
}

std::vector<UnderspecFlag> FlagUnderspecified(
    const FixabilityTable& table,
    const std::map<std::string, BundleLabels>& labels) {
  std::vector<UnderspecFlag> flags;
  for (const auto& [id, row] : table.rows) {
    const BundleLabels* label = nullptr;
    if (auto it = labels.find(id); it != labels.end()) label = &it->second;

    auto k = row.find(EngineKind::kKali);
    bool kali_fixed = k != row.end() && k->second;
    if (kali_fixed && label != nullptr) {
      auto l = label->per_engine.find(EngineKind::kKali);
      // A deletion that is itself the right fix says nothing about the suite.
      if (l != label->per_engine.end() &&
          l->second.correctness == Correctness::kCorrect) {
        kali_fixed = false;
      }
    }
    if (kali_fixed) {
      flags.push_back({id, UnderspecReason::kKaliPatchExists});
    } else if (label != nullptr && label->analyst_underspecified) {
      flags.push_back({id, UnderspecReason::kAnalystLabel});
    }
  }
  return flags;
}

std::map<std::string, BundleLabels> ReadLabelFixture(const fs::path& tsv) {
  std::map<std::string, BundleLabels> out;
  for (const auto& cells : ReadTsv(tsv, 6)) {
    const EngineKind engine = Require(ParseEngineName(cells[2]), cells[2]);
    PatchLabel label;
    label.correctness = Require(ParseCorrectness(cells[3]), cells[3]);
    label.readability = Require(ParseReadability(cells[4]), cells[4]);
    label.difficulty = Require(ParseDifficulty(cells[5]), cells[5]);
    if (!out[cells[0]].per_engine.emplace(engine, label).second) {
      throw DuplicateJobError("duplicate label for " + cells[0]);
    }
  }
  return out;
}

std::string RenderTable(const TextTable& table, TableFormat format) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (format == TableFormat::kTsv) {
        out << (i ? "\t" : "") << cells[i];
      } else {
        out << "| " << cells[i] << " ";
      }
    }
    out << (format == TableFormat::kMarkdown ? "|\n" : "\n");
  };
  line(table.header);
  if (format == TableFormat::kMarkdown) {
    for (std::size_t i = 0; i < table.header.size(); ++i) out << "|---";
    out << "|\n";
  }
  for (const auto& row : table.rows) line(row);
  return out.str();
}

TextTable FixabilityReport(const FixabilityTable& table) {
  TextTable t;
  t.header = {"bug"};
  for (EngineKind e : kAllEngines) t.header.emplace_back(EngineName(e));
  for (const auto& [bundle, row] : table.rows) {
    std::vector<std::string> cells = {bundle};
    for (EngineKind e : kAllEngines) {
      auto it = row.find(e);
      cells.push_back(it != row.end() && it->second ? "Fixed" : "-");
    }
    t.rows.push_back(std::move(cells));
  }
  std::vector<std::string> total = {"Total " + std::to_string(table.union_fixed)};
  for (EngineKind e : kAllEngines) {
    auto it = table.totals.find(e);
    total.push_back(std::to_string(it == table.totals.end() ? 0 : it->second));
  }
  t.rows.push_back(std::move(total));
  return t;
}

TextTable VennReport(const IntersectionSummary& s) {
  TextTable t;
  t.header = {"region", "count"};
  t.rows = {{"genprog", std::to_string(s.genprog_only)},
            {"kali", std::to_string(s.kali_only)},
            {"nopol", std::to_string(s.nopol_only)},
            {"genprog+kali", std::to_string(s.genprog_kali)},
            {"genprog+nopol", std::to_string(s.genprog_nopol)},
            {"kali+nopol", std::to_string(s.kali_nopol)},
            {"genprog+kali+nopol", std::to_string(s.all_three)},
            {"union", std::to_string(s.Total())}};
  return t;
}

TextTable TimingReport(const std::map<EngineKind, TimingStats>& stats) {
  TextTable t;
  t.header = {"engine",  "patches",  "min_ms",   "median_ms",
              "max_ms",  "average_ms", "total_ms", "all_attempts_ms"};
  for (const auto& [engine, s] : stats) {
    std::ostringstream avg;
    avg.setf(std::ios::fixed);
    avg.precision(1);
    avg << s.average_ms;
    t.rows.push_back({std::string(EngineName(engine)), std::to_string(s.count),
                      std::to_string(s.min.count()),
                      std::to_string(s.median.count()),
                      std::to_string(s.max.count()), avg.str(),
                      std::to_string(s.total.count()),
                      std::to_string(s.total_all_attempts.count())});
  }
  return t;
}

TextTable UnderspecReport(std::span<const UnderspecFlag> flags) {
  TextTable t;
  t.header = {"bug", "reason"};
  for (const auto& f : flags) {
    t.rows.push_back({f.bundle, std::string(UnderspecReasonName(f.reason))});
  }
  return t;
}

}  // namespace repairforge
