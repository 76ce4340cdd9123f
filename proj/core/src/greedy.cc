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

#include "parsubmod/greedy.h"

#include <limits>

namespace parsubmod {

Solution DensityGreedy(const ValueOracle& oracle,
                       const IndependenceSystem& system,
                       const std::vector<double>* costs, Executor& executor) {
  const std::size_t n = oracle.ground_size();
  if (system.ground_size() != n || (costs && costs->size() != n)) {
    throw InputError("greedy: oracle, system and costs disagree on n");
  }
  auto cost = [&](ElementId u) { return costs ? (*costs)[u] : 1.0; };

  ElementSet greedy;
  double greedy_value = 0.0;
  ElementSet best_single;
  double best_single_value = 0.0;
  auto builder = system.NewBuilder({});
  bool first = true;
  while (true) {
    std::vector<ElementId> feasible;
    for (ElementId u = 0; u < n; ++u) {
      if (greedy.contains(u)) continue;
      executor.AddIndependenceChecks(1);
      if (builder->CanAdd(u)) feasible.push_back(u);
    }
    if (feasible.empty()) break;
    QueryBatch batch;
    const std::size_t base_index = first ? batch.Add(greedy) : 0;
    const std::size_t ext = batch.AddExtensions(greedy, feasible);
    const std::vector<double> values = executor.SubmitRound(oracle, batch);
    if (first) {
      greedy_value = values[base_index];
      for (std::size_t j = 0; j < feasible.size(); ++j) {
        if (values[ext + j] > best_single_value) {
          best_single_value = values[ext + j];
          best_single = {feasible[j]};
        }
      }
      first = false;
    }
    double best_density = 0.0;
    std::size_t pick = feasible.size();
    for (std::size_t j = 0; j < feasible.size(); ++j) {
      const double density = (values[ext + j] - greedy_value) / cost(feasible[j]);
      if (density > best_density) {
        best_density = density;
        pick = j;
      }
    }
    if (pick == feasible.size()) break;
    greedy.Insert(feasible[pick]);
    builder->Add(feasible[pick]);
    greedy_value = values[ext + pick];
  }
  if (best_single_value > greedy_value) return {best_single, best_single_value, {}};
  return {greedy, greedy_value, {}};
}

}  // namespace parsubmod
