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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "repairforge/errors.h"
#include "repairforge/lang/ast.h"
#include "repairforge/lang/patch.h"
#include "repairforge/lang/printer.h"
#include "search_context.h"

namespace repairforge::internal {

namespace {

struct Variant {
  std::vector<Edit> edits;
  std::int64_t fitness = 0;
};

std::string EditListKey(const std::vector<Edit>& edits) {
  std::string key;
  for (const auto& e : edits) key += DescribeEdit(e) + ";";
  return key;
}

class GeneticSearch {
 public:
  explicit GeneticSearch(SearchContext& context)
      : context_(context),
        config_(context.config().genprog),
        rng_(context.config().seed) {}

  RepairOutcome Run() {
    BuildTargets();
    if (targets_.empty()) return context_.Finish(OutcomeStatus::kNoPatch);
    BuildIngredients();

    std::vector<Variant> population;
    for (int i = 0; i < config_.population; ++i) {
      Variant v;
      v.edits.push_back(RandomEdit());
      if (auto done = Evaluate(v)) return *done;
      population.push_back(std::move(v));
    }

    for (int gen = 0; gen < config_.max_generations; ++gen) {
      const std::int64_t before = context_.variants_evaluated;
      std::vector<Variant> next;
      next.reserve(population.size());
      for (int i = 0; i < config_.population; ++i) {
        const Variant& a = Tournament(population);
        const Variant& b = Tournament(population);
        Variant child;
        if (NextDouble() < config_.crossover_prob) {
          const std::size_t cut_a = NextIndex(a.edits.size() + 1);
          const std::size_t cut_b = NextIndex(b.edits.size() + 1);
          child.edits.assign(a.edits.begin(), a.edits.begin() + cut_a);
          child.edits.insert(child.edits.end(), b.edits.begin() + cut_b,
                             b.edits.end());
        } else {
          child.edits = a.edits;
        }
        const auto max_edits =
            static_cast<std::size_t>(config_.max_edits_per_variant);
        if (child.edits.size() > max_edits) child.edits.resize(max_edits);
        if (child.edits.size() < max_edits) {
          child.edits.push_back(RandomEdit());
        } else {
          child.edits[NextIndex(child.edits.size())] = RandomEdit();
        }
        if (auto done = Evaluate(child)) return *done;
        next.push_back(std::move(child));
      }
      population = std::move(next);
      // Nothing new to try: the reachable edit space is exhausted.
      if (context_.variants_evaluated == before) break;
    }
    return context_.Finish(OutcomeStatus::kNoPatch);
  }

 private:
  // Uniform index in [0, n) without modulo bias.
  std::size_t NextIndex(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  double NextDouble() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  void BuildTargets() {
    const Program& program = context_.program();
    std::map<StatementId, double> score;
    for (const auto& r : context_.ranking()) score[r.statement] = r.suspiciousness;
    for (StatementId id : context_.Suspicious()) {
      if (FindStatement(program, id) == nullptr) continue;
      double w = score[id];
      if (!std::isfinite(w) || w < 0.0) w = 0.0;
      targets_.push_back(id);
      weights_.push_back(w);
      total_weight_ += w;
    }
  }

  void BuildIngredients() {
    std::set<std::string> seen;
    ForEachStatement(context_.program(),
                     [&](const Statement& s, const FunctionDef&) {
                       if (s.kind == StmtKind::kSkip) return;
                       if (!seen.insert(PrintStatement(s, 0)).second) return;
                       ingredients_.push_back(&s);
                     });
  }

  StatementId RandomTarget() {
    if (total_weight_ <= 0.0) return targets_[NextIndex(targets_.size())];
    double u = NextDouble() * total_weight_;
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (u < weights_[i]) return targets_[i];
      u -= weights_[i];
    }
    // Rounding fell off the end: last target with positive weight.
    for (std::size_t i = targets_.size(); i-- > 0;) {
      if (weights_[i] > 0.0) return targets_[i];
    }
    return targets_.back();
  }

  const std::vector<const Statement*>& Compatible(StatementId target) {
    auto it = compatible_.find(target);
    if (it != compatible_.end()) return it->second;
    std::vector<const Statement*> out;
    const FunctionDef* fn = FindEnclosingFunction(context_.program(), target);
    const std::vector<std::string> vars =
        fn ? FunctionVariables(*fn) : std::vector<std::string>{};
    for (const Statement* s : ingredients_) {
      std::vector<std::string> reads;
      CollectReadVariables(*s, reads);
      const bool ok = std::all_of(reads.begin(), reads.end(), [&](auto& v) {
        return std::binary_search(vars.begin(), vars.end(), v);
      });
      if (ok) out.push_back(s);
    }
    return compatible_.emplace(target, std::move(out)).first->second;
  }

  Edit RandomEdit() {
    const StatementId target = RandomTarget();
    const std::size_t op = NextIndex(3);
    if (op != 0) {
      const auto& pool = Compatible(target);
      if (!pool.empty()) {
        const Statement& ingredient = *pool[NextIndex(pool.size())];
        if (op == 1) return Edit::InsertBefore(target, ingredient);
        return Edit::Replace(target, ingredient);
      }
    }
    return Edit::Delete(target);
  }

  const Variant& Tournament(const std::vector<Variant>& population) {
    const Variant* best = &population[NextIndex(population.size())];
    for (int i = 1; i < config_.tournament; ++i) {
      const Variant* other = &population[NextIndex(population.size())];
      if (other->fitness > best->fitness) best = other;
    }
    return *best;
  }

  // Fills in the fitness. Returns a terminal outcome on success or timeout.
  std::optional<RepairOutcome> Evaluate(Variant& v) {
    const std::string key = EditListKey(v.edits);
    auto cached = fitness_.find(key);
    if (cached != fitness_.end()) {
      v.fitness = cached->second;
      return std::nullopt;
    }
    if (context_.Expired()) return context_.Finish(OutcomeStatus::kTimeout);
    ++context_.variants_evaluated;

    Program candidate;
    try {
      candidate = ApplyEdits(context_.program(), v.edits);
    } catch (const Error&) {
      // InvalidEdit, or an edit aimed at a subtree an earlier edit removed.
      v.fitness = 0;
      fitness_.emplace(key, 0);
      return std::nullopt;
    }
    const auto results = RunSuite(candidate, context_.bundle().tests,
                                  context_.config().step_budget);
    v.fitness = GenProgFitness(results, context_.originally_failing());
    fitness_.emplace(key, v.fitness);
    const bool all_pass = std::all_of(
        results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    if (all_pass) return context_.Found(v.edits, EngineKind::kGenProg);
    return std::nullopt;
  }

  SearchContext& context_;
  const GenProgConfig& config_;
  std::mt19937_64 rng_;
  std::vector<StatementId> targets_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
  std::vector<const Statement*> ingredients_;
  std::map<StatementId, std::vector<const Statement*>> compatible_;
  std::map<std::string, std::int64_t> fitness_;
};

}  // namespace

RepairOutcome RunGenProg(SearchContext& context) {
  return GeneticSearch(context).Run();
}

}  // namespace repairforge::internal
