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

#include "repairforge/faultloc/spectrum.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace repairforge {
namespace {

double Ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

std::string_view MetricName(MetricKind metric) {
  switch (metric) {
    case MetricKind::kTarantula: return "tarantula";
    case MetricKind::kOchiai: return "ochiai";
    case MetricKind::kJaccard: return "jaccard";
    case MetricKind::kAmple: return "ample";
    case MetricKind::kNaish1: return "naish1";
    case MetricKind::kNaish2: return "naish2";
    case MetricKind::kGP13: return "gp13";
  }
  return "unknown";
}

std::optional<MetricKind> ParseMetricName(std::string_view name) {
  std::string lower;
  for (char c : name) {
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (MetricKind m : kAllMetrics) {
    if (MetricName(m) == lower) return m;
  }
  return std::nullopt;
}

std::vector<SpectrumRow> BuildSpectrum(std::span<const TestResult> results,
                                       const Program& program) {
  int total_failed = 0;
  int total_passed = 0;
  std::set<StatementId> known;
  ForEachStatement(program, [&](const Statement& s, const FunctionDef&) {
    known.insert(s.id);
  });
  std::map<StatementId, SpectrumRow> rows;
  for (const auto& r : results) {
    bool failed = !r.passed();
    (failed ? total_failed : total_passed) += 1;
    for (StatementId id : r.covered) {
      if (!known.count(id)) continue;
      SpectrumRow& row = rows[id];
      row.statement = id;
      (failed ? row.ef : row.ep) += 1;
    }
  }
  std::vector<SpectrumRow> out;
  out.reserve(rows.size());
  for (auto& [id, row] : rows) {
    row.nf = total_failed - row.ef;
    row.np = total_passed - row.ep;
    out.push_back(row);
  }
  return out;
}

double Score(const SpectrumRow& row, MetricKind metric) {
  const double ef = row.ef;
  const double ep = row.ep;
  const double nf = row.nf;
  const double np = row.np;
  switch (metric) {
    case MetricKind::kTarantula: {
      double fail_ratio = Ratio(ef, ef + nf);
      double pass_ratio = Ratio(ep, ep + np);
      return Ratio(fail_ratio, fail_ratio + pass_ratio);
    }
    case MetricKind::kOchiai:
      return Ratio(ef, std::sqrt((ef + ep) * (ef + nf)));
    case MetricKind::kJaccard:
      return Ratio(ef, ef + ep + nf);
    case MetricKind::kAmple:
      return std::abs(Ratio(ef, ef + nf) - Ratio(ep, ep + np));
    case MetricKind::kNaish1:
      return row.ef > 0 ? -1.0 : np;
    case MetricKind::kNaish2:
      return ef - Ratio(ep, ep + np + 1.0);
    case MetricKind::kGP13:
      return ef * (1.0 + Ratio(1.0, 2.0 * ep + ef));
  }
  return 0.0;
}

Ranking Rank(std::span<const SpectrumRow> spectrum, MetricKind metric) {
  Ranking ranking;
  ranking.reserve(spectrum.size());
  for (const auto& row : spectrum) {
    ranking.push_back({row.statement, Score(row, metric)});
  }
  std::sort(ranking.begin(), ranking.end(),
            [](const RankedStatement& a, const RankedStatement& b) {
              if (a.suspiciousness != b.suspiciousness) {
                return a.suspiciousness > b.suspiciousness;
              }
              return a.statement < b.statement;
            });
  return ranking;
}

}  // namespace repairforge
