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
#include <iomanip>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "repairforge/engines/repair.h"
#include "repairforge/errors.h"
#include "repairforge/faultloc/spectrum.h"
#include "repairforge/harness/bundle.h"
#include "repairforge/harness/experiment.h"
#include "repairforge/lang/printer.h"
#include "repairforge/report/report.h"

namespace repairforge {

namespace fs = std::filesystem;

namespace {

// Options shared by repair and run-experiment.
struct ConfigFlags {
  std::optional<std::uint64_t> seed;
  std::int64_t timeout_ms = kDefaultAttemptTimeout.count();
  std::string metric = "ochiai";
  std::int64_t step_budget = kDefaultStepBudget;
  int population = GenProgConfig{}.population;
  int max_generations = GenProgConfig{}.max_generations;
  int max_expr_size = NopolConfig{}.max_expr_size;
  int per_occurrence = 0;

  void Register(CLI::App& app) {
    app.add_option("--seed", seed, "Random seed (REPAIRFORGE_SEED overrides)");
    app.add_option("--timeout-ms", timeout_ms, "Per-attempt timeout")
        ->capture_default_str();
    app.add_option("--metric", metric, "Fault localization metric")
        ->capture_default_str();
    app.add_option("--step-budget", step_budget, "Interpreter steps per test")
        ->capture_default_str();
    app.add_option("--population", population, "GenProg population")
        ->capture_default_str();
    app.add_option("--max-generations", max_generations,
                   "GenProg generation limit")
        ->capture_default_str();
    app.add_option("--max-expr-size", max_expr_size,
                   "Nopol condition size limit")
        ->capture_default_str();
    app.add_option("--per-occurrence", per_occurrence,
                   "Nopol forces the first k evaluations separately (0: off)");
  }

  RepairConfig Build() const {
    RepairConfig config;
    if (seed) config.seed = *seed;
    config.timeout = std::chrono::milliseconds(timeout_ms);
    auto m = ParseMetricName(metric);
    if (!m) throw CLI::ValidationError("--metric", "unknown metric " + metric);
    config.metric = *m;
    config.step_budget = step_budget;
    config.genprog.population = population;
    config.genprog.max_generations = max_generations;
    config.nopol.max_expr_size = max_expr_size;
    if (per_occurrence > 0) {
      config.nopol.forcing = ForcingPolicy::PerOccurrence(per_occurrence);
    }
    ApplySeedOverride(config);
    try {
      config.Validate();
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("config", e.what());
    }
    return config;
  }
};

EngineKind ParseEngineOrThrow(const std::string& name) {
  auto e = ParseEngineName(name);
  if (!e) throw CLI::ValidationError("--engine", "unknown engine " + name);
  return *e;
}

int ExitCodeFor(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kPatchFound:
      return kExitSuccess;
    case OutcomeStatus::kNoPatch:
    case OutcomeStatus::kTimeout:
      return kExitNoPatch;
    case OutcomeStatus::kError:
      return kExitInternal;
    case OutcomeStatus::kFlakyAbort:
      return kExitFlaky;
  }
  return kExitInternal;
}

void WriteFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

int DoRepair(const std::string& dir, const std::string& engine_name,
             const ConfigFlags& flags, const std::string& out_path,
             std::ostream& out) {
  const RepairConfig config = flags.Build();
  const EngineKind engine = ParseEngineOrThrow(engine_name);
  const BugBundle bundle = LoadBundle(dir, config.step_budget);
  const RepairOutcome outcome = Repair(bundle, engine, config);
  out << bundle.id << " " << EngineName(engine) << " "
      << OutcomeStatusName(outcome.status) << " variants="
      << outcome.variants_evaluated
      << " time_ms=" << outcome.attempt_wall_time.count() << "\n";
  if (!outcome.message.empty()) out << outcome.message << "\n";
  for (const auto& t : outcome.flaky_tests) out << "flaky: " << t << "\n";
  if (outcome.patch) {
    for (const auto& e : outcome.patch->edits) out << DescribeEdit(e) << "\n";
    const std::string diff = PatchDiff(bundle, *outcome.patch);
    if (out_path.empty()) {
      out << diff;
    } else {
      WriteFile(out_path, diff);
    }
  }
  return ExitCodeFor(outcome.status);
}

int DoLocalize(const std::string& dir, const std::string& metric_name,
               int top, std::ostream& out) {
  auto metric = ParseMetricName(metric_name);
  if (!metric) throw CLI::ValidationError("--metric", "unknown metric");
  const BugBundle bundle = LoadBundle(dir);
  const auto results = RunSuite(bundle.program, bundle.tests);
  const auto spectrum = BuildSpectrum(results, bundle.program);
  const Ranking ranking = Rank(spectrum, *metric);
  out << "rank\tstatement\tscore\tfunction\tline\tcode\n";
  int rank = 0;
  for (const auto& entry : ranking) {
    if (top > 0 && rank >= top) break;
    const Statement* s = FindStatement(bundle.program, entry.statement);
    const FunctionDef* fn = FindEnclosingFunction(bundle.program, entry.statement);
    std::string code = PrintStatement(*s);
    code = code.substr(0, code.find('\n'));
    out << ++rank << "\t" << entry.statement.value << "\t" << std::fixed
        << std::setprecision(4) << entry.suspiciousness << "\t" << fn->name
        << "\t" << s->line << "\t" << code << "\n";
  }
  return kExitSuccess;
}

int DoRunExperiment(const std::string& corpus_dir,
                    const std::vector<std::string>& bundle_ids,
                    const std::vector<std::string>& engine_names, int workers,
                    const ConfigFlags& flags, const std::string& out_dir,
                    std::ostream& out) {
  ExperimentPlan plan;
  plan.config = flags.Build();
  plan.workers = workers;
  for (const auto& name : engine_names) {
    plan.engines.push_back(ParseEngineOrThrow(name));
  }
  if (plan.engines.empty()) {
    plan.engines.assign(std::begin(kAllEngines), std::end(kAllEngines));
  }
  const auto corpus = LoadCorpus(corpus_dir, plan.config.step_budget);
  plan.bundles = bundle_ids;
  if (plan.bundles.empty()) {
    for (const auto& b : corpus) plan.bundles.push_back(b.id);
  }
  try {
    plan.Validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("plan", e.what());
  }
  const auto records = RunExperiment(plan, corpus);
  WriteResults(out_dir, records);
  for (const auto& r : records) {
    out << r.bundle << "\t" << EngineName(r.engine) << "\t"
        << OutcomeStatusName(r.outcome.status) << "\t"
        << r.outcome.attempt_wall_time.count() << "ms\n";
  }
  return kExitSuccess;
}

int DoReport(const std::string& results, const std::string& fixture,
             const std::string& labels_path, const std::string& corpus_dir,
             const std::string& format_name, const std::string& out_dir,
             std::ostream& out) {
  TableFormat format = TableFormat::kTsv;
  if (format_name == "markdown") {
    format = TableFormat::kMarkdown;
  } else if (format_name != "tsv") {
    throw CLI::ValidationError("--format", "expected tsv or markdown");
  }
  if (results.empty() == fixture.empty()) {
    throw CLI::ValidationError("report", "give exactly one of --results or "
                                         "--fixture");
  }
  std::vector<RecordSummary> records;
  std::vector<FixEntry> entries;
  if (!results.empty()) {
    records = ReadResults(results);
    entries = EntriesFromRecords(records);
  } else {
    entries = ReadFixabilityFixture(fixture);
  }
  std::map<std::string, BundleLabels> labels;
  if (!labels_path.empty()) labels = ReadLabelFixture(labels_path);
  if (!corpus_dir.empty()) {
    for (auto& b : LoadCorpus(corpus_dir)) labels[b.id] = b.labels;
  }

  const FixabilityTable table = AggregateFixability(entries);
  const auto flags = FlagUnderspecified(table, labels);
  const std::vector<std::pair<std::string, TextTable>> reports = {
      {"fixability", FixabilityReport(table)},
      {"venn", VennReport(Intersections(table))},
      {"timing", TimingReport(ComputeTimingStats(records))},
      {"underspec", UnderspecReport(flags)},
  };
  const std::string ext = format == TableFormat::kTsv ? ".tsv" : ".md";
  for (const auto& [name, t] : reports) {
    const std::string text = RenderTable(t, format);
    if (out_dir.empty()) {
      out << "# " << name << "\n" << text << "\n";
    } else {
      WriteFile(fs::path(out_dir) / (name + ext), text);
    }
  }
  return kExitSuccess;
}

int DoValidate(const std::string& dir, std::ostream& out) {
  const BugBundle bundle = LoadBundle(dir);
  out << bundle.id << ": ok (" << bundle.tests.size() << " tests, "
      << bundle.declared_failing.size() << " failing)\n";
  return kExitSuccess;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Test-suite based program repair for MiniLang", "repairforge");
  app.require_subcommand(1);

  std::string bundle_dir, engine, out_path;
  ConfigFlags repair_flags;
  auto* repair = app.add_subcommand("repair", "Repair one bug bundle");
  repair->add_option("bundle", bundle_dir, "Bundle directory")->required();
  repair->add_option("--engine", engine, "genprog, kali or nopol")->required();
  repair->add_option("--out", out_path, "Write the patch diff here");
  repair_flags.Register(*repair);

  std::string loc_dir, loc_metric = "ochiai";
  int top = 0;
  auto* localize = app.add_subcommand("localize", "Rank suspicious statements");
  localize->add_option("bundle", loc_dir, "Bundle directory")->required();
  localize->add_option("--metric", loc_metric, "Metric")->capture_default_str();
  localize->add_option("--top", top, "Show only the first N statements");

  std::string corpus_dir, exp_out;
  std::vector<std::string> bundle_ids, engines;
  int workers = 1;
  ConfigFlags exp_flags;
  auto* experiment =
      app.add_subcommand("run-experiment", "Run engines over a corpus");
  experiment->add_option("--corpus", corpus_dir, "Corpus directory")
      ->required();
  experiment->add_option("--bundles", bundle_ids, "Bundle ids (default: all)")
      ->delimiter(',');
  experiment->add_option("--engines", engines, "Engines (default: all)")
      ->delimiter(',');
  experiment->add_option("--workers", workers, "Concurrent attempts")
      ->capture_default_str();
  experiment->add_option("--out", exp_out, "Output directory")->required();
  exp_flags.Register(*experiment);

  std::string results, fixture, labels, report_corpus, format = "tsv",
                                                       report_out;
  auto* report = app.add_subcommand("report", "Aggregate experiment results");
  report->add_option("--results", results, "results.ndjson");
  report->add_option("--fixture", fixture, "Fixability TSV instead of results");
  report->add_option("--labels", labels, "Patch label TSV");
  report->add_option("--corpus", report_corpus, "Take labels from bundles");
  report->add_option("--format", format, "tsv or markdown")
      ->capture_default_str();
  report->add_option("--out", report_out, "Output directory (default: stdout)");

  std::string validate_dir;
  auto* validate = app.add_subcommand("validate-bundle", "Check a bundle");
  validate->add_option("bundle", validate_dir, "Bundle directory")->required();

  try {
    app.parse(argc, argv);
    if (*repair) {
      return DoRepair(bundle_dir, engine, repair_flags, out_path, out);
    }
    if (*localize) return DoLocalize(loc_dir, loc_metric, top, out);
    if (*experiment) {
      return DoRunExperiment(corpus_dir, bundle_ids, engines, workers,
                             exp_flags, exp_out, out);
    }
    if (*report) {
      return DoReport(results, fixture, labels, report_corpus, format,
                      report_out, out);
    }
    if (*validate) return DoValidate(validate_dir, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  } catch (const ValidationError& e) {
    err << "ValidationError: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace repairforge
