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

#include "parsubmod/par_ssp.h"

#include <cmath>

namespace parsubmod {

double DefaultP(int k, bool cardinality) {
  if (k < 1) throw InputError("k must be at least 1");
  if (cardinality) return 0.5;
  return 1.0 / (1.0 + std::sqrt(static_cast<double>(k) + 1.0));
}

ThresholdSchedule MakeThresholdSchedule(double rho_max, double epsilon,
                                        std::size_t r) {
  if (r == 0) r = 1;
  ThresholdSchedule s;
  s.rho_max = rho_max;
  const double depth =
      LogBase(1.0 - epsilon, epsilon / static_cast<double>(r));
  s.phases = CeilTol(depth) + 1;
  s.max_count = std::max<std::size_t>(1, CeilTol((depth + 2.0) / (epsilon * epsilon)));
  s.thresholds.reserve(s.phases);
  for (std::size_t i = 0; i < s.phases; ++i) {
    s.thresholds.push_back(rho_max * std::pow(1.0 - epsilon, static_cast<double>(i)));
  }
  return s;
}

std::size_t EffectiveR(const IndependenceSystem& system, Rng& rng,
                       std::optional<std::size_t> r_override,
                       Executor& executor) {
  if (r_override) return *r_override;
  if (system.r_hint()) return *system.r_hint();
  const auto base = GetSeq(ElementSet(), ElementSet::Range(system.ground_size()),
                           system, rng, executor);
  return static_cast<std::size_t>(system.k()) * base.size();
}

Solution ParSsp(const SspConfig& config, const ValueOracle& oracle,
                const SystemPtr& system, Executor& executor,
                std::vector<SspPhase>* trace) {
  if (!system) throw InputError("ParSSP: missing independence system");
  if (!system->k_bounded()) {
    throw InputError("ParSSP: system has no bounded k (" + system->Describe() +
                     ")");
  }
  const double eps = config.epsilon;
  if (!(eps > 0.0 && eps <= 0.4)) {
    throw InputError("ParSSP: epsilon must be in (0, 0.4]");
  }
  const double p =
      config.p ? *config.p : DefaultP(system->k(), system->IsCardinality());
  if (!(p > 0.0 && p <= 1.0)) throw InputError("ParSSP: p must be in (0,1]");
  const std::size_t n = oracle.ground_size();
  if (system->ground_size() != n) {
    throw InputError("ParSSP: system and oracle disagree on ground set size");
  }
  if (n == 0) return Solution{ElementSet(), executor.Evaluate(oracle, {}), {}};

  // Singleton values; u* ranges over feasible singletons.
  QueryBatch singles;
  const std::size_t empty_slot = singles.Add(ElementSet());
  const std::size_t first =
      singles.AddExtensions(ElementSet(), ElementSet::Range(n).vec());
  const auto values = executor.SubmitRound(oracle, singles);
  const double empty_value = values[empty_slot];
  auto root_builder = system->NewBuilder({});
  std::optional<ElementId> best_single;
  for (std::size_t u = 0; u < n; ++u) {
    if (!root_builder->CanAdd(static_cast<ElementId>(u))) continue;
    if (!best_single || values[first + u] > values[first + *best_single]) {
      best_single = static_cast<ElementId>(u);
    }
  }
  executor.AddIndependenceChecks(n);
  if (!best_single) {
    Solution empty{ElementSet(), empty_value, {}};
    empty.warnings.push_back("no feasible singleton; returning the empty set");
    return empty;
  }
  const double rho_max = values[first + *best_single];
  if (!(rho_max > 0.0)) {
    Solution s{ElementSet(), empty_value, {}};
    if (rho_max > empty_value) s = Solution{ElementSet{*best_single}, rho_max, {}};
    s.warnings.push_back("max singleton value is 0; thresholds undefined");
    return s;
  }

  Rng r_rng(DeriveSeed(config.seed, {0}));
  const std::size_t r = EffectiveR(*system, r_rng, config.r_override, executor);
  const ThresholdSchedule schedule = MakeThresholdSchedule(rho_max, eps, r);
  const std::vector<double> unit_costs(n, 1.0);

  ElementSet solution;
  double solution_value = empty_value;
  ElementSet candidates = ElementSet::Range(n);
  for (std::size_t i = 0; i < schedule.phases; ++i) {
    if (trace) {
      trace->push_back({schedule.thresholds[i], candidates.size(), 0});
    }
    if (candidates.empty()) continue;
    const ShiftedOracle shifted(oracle, solution);
    const SystemPtr contracted = Contract(system, solution);
    RandBatchParams params;
    params.rho = schedule.thresholds[i];
    params.max_count = schedule.max_count;
    params.p = p;
    params.epsilon = eps;
    params.search_mode = config.search_mode;
    Rng phase_rng(DeriveSeed(config.seed, {1, i}));
    const RandBatchResult res = RandBatch(params, candidates, shifted,
                                          unit_costs, *contracted, executor,
                                          phase_rng);
    solution.InsertAll(res.accepted.ids());
    solution_value = res.accepted_value;
    if (trace) trace->back().accepted = res.accepted.size();
    ElementSet retired = ElementSet::FromUnsorted(res.considered);
    retired.InsertAll(res.remaining.ids());
    candidates = Difference(candidates, retired);
  }

  if (rho_max > solution_value) {
    return Solution{ElementSet{*best_single}, rho_max, {}};
  }
  return Solution{std::move(solution), solution_value, {}};
}

}  // namespace parsubmod
