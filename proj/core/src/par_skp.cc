// Copyright 2026 The Authors.
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

#include "parsubmod/par_skp.h"

#include <cmath>
#include <limits>

#include <tbb/parallel_for.h>

namespace parsubmod {

void SkpConfig::Validate() const {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw InputError("ParSKP: alpha must be in (0, 1/2)");
  }
  if (!(epsilon > 0.0 && epsilon < 5.0 / 6.0)) {
    throw InputError("ParSKP: epsilon must be in (0, 5/6)");
  }
}

ThresholdGrid MakeThresholdGrid(double rho_min, double rho_max,
                                double epsilon) {
  ThresholdGrid grid{rho_min, rho_max, {}};
  if (!(rho_min > 0.0) || !(rho_max >= rho_min)) return grid;
  const double step = -std::log1p(-epsilon);  // ln (1-eps)^{-1}
  const double lower = (1.0 - epsilon) * rho_min;
  const double tol = 1e-12;
  long long z = static_cast<long long>(std::floor(std::log(lower) / step)) - 1;
  while (std::pow(1.0 - epsilon, -static_cast<double>(z)) <
         lower * (1.0 - tol)) {
    ++z;
  }
  for (;; ++z) {
    const double v = std::pow(1.0 - epsilon, -static_cast<double>(z));
    if (v > rho_max * (1.0 + tol)) break;
    grid.values.push_back(v);
  }
  return grid;
}

std::size_t ProbeRepetitions(double epsilon) {
  return std::max<std::size_t>(1, CeilTol(LogBase(1.0 - epsilon, epsilon)));
}

Solution Probe(double rho, const ElementSet& large, const ElementSet& small,
               double epsilon, const ValueOracle& oracle,
               const CostModel& costs, const IndependenceSystem& knapsack,
               const UsmSolver& usm, SearchMode mode, Executor& executor,
               Rng& rng) {
  RandBatchParams params;
  params.rho = rho;
  params.max_count = std::max<std::size_t>(1, CeilTol(1.0 / (epsilon * epsilon)));
  params.p = 1.0;
  params.epsilon = epsilon;
  params.search_mode = mode;

  const RandBatchResult first =
      RandBatch(params, large, oracle, costs.costs, knapsack, executor, rng);
  const RandBatchResult second =
      RandBatch(params, Difference(large, first.accepted), oracle, costs.costs,
                knapsack, executor, rng);

  // Augment each A_i with its best single affordable element of `large`.
  const RandBatchResult* passes[2] = {&first, &second};
  QueryBatch batch;
  const std::size_t empty_slot = batch.Add(ElementSet());
  std::vector<ElementId> extras[2];
  std::size_t slots[2];
  std::uint64_t checks = 0;
  for (int i = 0; i < 2; ++i) {
    const ElementSet& a = passes[i]->accepted;
    const double spent = costs.Total(a.ids());
    for (ElementId u : large) {
      if (a.contains(u)) continue;
      ++checks;
      if (costs.Affordable(spent + costs(u))) extras[i].push_back(u);
    }
    slots[i] = batch.AddExtensions(a, extras[i]);
  }
  executor.AddIndependenceChecks(checks);
  const auto values = executor.SubmitRound(oracle, batch);

  Solution best{ElementSet(), values[empty_slot], {}};
  for (int i = 0; i < 2; ++i) {
    const ElementSet& a = passes[i]->accepted;
    if (passes[i]->accepted_value > best.value) {
      best.set = a;
      best.value = passes[i]->accepted_value;
    }
    std::size_t arg = extras[i].size();
    double arg_value = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < extras[i].size(); ++k) {
      if (values[slots[i] + k] > arg_value) {
        arg_value = values[slots[i] + k];
        arg = k;
      }
    }
    if (arg < extras[i].size() && arg_value > best.value) {
      best.set = a.With(extras[i][arg]);
      best.value = arg_value;
    }
  }

  const ElementSet merged = Union(small, first.accepted);
  executor.AddIndependenceChecks(1);
  if (costs.Affordable(costs.Total(merged.ids()))) {
    UsmResult r = usm.Solve(merged, oracle, executor, rng);
    if (r.value > best.value) {
      best.set = std::move(r.set);
      best.value = r.value;
    }
  }
  return best;
}

Solution ParSkp(const SkpConfig& config, const ValueOracle& oracle,
                const CostModel& costs, const UsmSolver& usm,
                Executor& executor) {
  config.Validate();
  costs.Validate(/*require_affordable=*/true);
  const std::size_t n = oracle.ground_size();
  if (costs.size() != n) {
    throw InputError("ParSKP: cost model size does not match ground set");
  }
  if (n == 0) return Solution{ElementSet(), executor.Evaluate(oracle, {}), {}};

  const auto knapsack = BuildKnapsack(costs);
  const double eps = config.epsilon;
  const double budget = costs.budget;

  std::vector<ElementId> large_ids, small_ids;
  for (std::size_t u = 0; u < n; ++u) {
    if (costs.costs[u] > eps * budget / static_cast<double>(n)) {
      large_ids.push_back(static_cast<ElementId>(u));
    } else {
      small_ids.push_back(static_cast<ElementId>(u));
    }
  }
  const ElementSet large = ElementSet::FromSorted(std::move(large_ids));
  const ElementSet small = ElementSet::FromSorted(std::move(small_ids));

  QueryBatch singles;
  const std::size_t first = singles.AddExtensions(ElementSet(), ElementSet::Range(n).vec());
  const auto singleton_values = executor.SubmitRound(oracle, singles);
  ElementId best_single = 0;
  for (std::size_t u = 1; u < n; ++u) {
    if (singleton_values[first + u] > singleton_values[first + best_single]) {
      best_single = static_cast<ElementId>(u);
    }
  }
  const double best_single_value = singleton_values[first + best_single];

  Rng prefix_rng(DeriveSeed(config.seed, {0}));
  UsmResult usm_small = usm.Solve(small, oracle, executor, prefix_rng);
  Solution best{std::move(usm_small.set), usm_small.value, {}};
  if (best_single_value > best.value) {
    best.set = ElementSet{best_single};
    best.value = best_single_value;
  }

  if (!(best_single_value > 0.0)) {
    // Every singleton is worth 0, so no set beats the empty one and the
    // threshold grid would be unbounded.
    Solution empty{ElementSet(), executor.Evaluate(oracle, {}), {}};
    empty.warnings.push_back("max singleton value is 0; returning the empty set");
    return empty;
  }

  const double rho_min = config.alpha * best_single_value / budget;
  const double rho_max = static_cast<double>(n) * static_cast<double>(n) *
                         config.alpha * best_single_value / (eps * budget);
  const ThresholdGrid grid = MakeThresholdGrid(rho_min, rho_max, eps);
  const std::size_t reps = ProbeRepetitions(eps);
  const std::size_t branches = grid.values.size() * reps;

  std::vector<Executor> branch_executors(branches, executor.Fork());
  std::vector<Solution> branch_results(branches);
  auto run_branch = [&](std::size_t b) {
    Rng rng(DeriveSeed(config.seed, {1, b}));
    branch_results[b] =
        Probe(grid.values[b / reps], large, small, eps, oracle, costs,
              *knapsack, usm, config.search_mode, branch_executors[b], rng);
  };
  if (executor.options().parallel) {
    tbb::parallel_for(std::size_t{0}, branches, run_branch);
  } else {
    for (std::size_t b = 0; b < branches; ++b) run_branch(b);
  }
  executor.JoinBranches(branch_executors);

  for (auto& r : branch_results) {
    if (r.value > best.value) {
      best.set = std::move(r.set);
      best.value = r.value;
    }
  }
  return best;
}

}  // namespace parsubmod
