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

#ifndef REPAIRFORGE_FAULTLOC_SPECTRUM_H_
#define REPAIRFORGE_FAULTLOC_SPECTRUM_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "repairforge/exec/test_runner.h"
#include "repairforge/lang/ast.h"

namespace repairforge {

// Execution counts of one statement over the suite.
//   ef / ep: failing / passing tests that execute it
//   nf / np: failing / passing tests that do not
struct SpectrumRow {
  StatementId statement;
  int ef = 0;
  int ep = 0;
  int nf = 0;
  int np = 0;

  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

enum class MetricKind {
  kTarantula,
  kOchiai,
  kJaccard,
  kAmple,
  kNaish1,
  kNaish2,
  kGP13,
};

inline constexpr MetricKind kAllMetrics[] = {
    MetricKind::kTarantula, MetricKind::kOchiai, MetricKind::kJaccard,
    MetricKind::kAmple,     MetricKind::kNaish1, MetricKind::kNaish2,
    MetricKind::kGP13};

std::string_view MetricName(MetricKind metric);
// Case-insensitive.
std::optional<MetricKind> ParseMetricName(std::string_view name);

// One row per program statement executed by at least one test, ordered by
// statement id. A test fails when its verdict is anything but Pass.
std::vector<SpectrumRow> BuildSpectrum(std::span<const TestResult> results,
                                       const Program& program);

// Suspiciousness of one row. A sub-term whose denominator is zero counts as
// zero, so every metric is finite on every row.
double Score(const SpectrumRow& row, MetricKind metric);

struct RankedStatement {
  StatementId statement;
  double suspiciousness = 0.0;

  friend bool operator==(const RankedStatement&,
                         const RankedStatement&) = default;
};

using Ranking = std::vector<RankedStatement>;

// Descending suspiciousness, ties by ascending statement id.
Ranking Rank(std::span<const SpectrumRow> spectrum, MetricKind metric);

}  // namespace repairforge

#endif  // REPAIRFORGE_FAULTLOC_SPECTRUM_H_
