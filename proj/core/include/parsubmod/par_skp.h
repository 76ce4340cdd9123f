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

#ifndef PARSUBMOD_PAR_SKP_H_
#define PARSUBMOD_PAR_SKP_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parsubmod/constraints.h"
#include "parsubmod/executor.h"
#include "parsubmod/oracle.h"
#include "parsubmod/rand_batch.h"
#include "parsubmod/random.h"
#include "parsubmod/solution.h"
#include "parsubmod/usm.h"

namespace parsubmod {

struct SkpConfig {
  double alpha = 0.25;    // in (0, 1/2)
  double epsilon = 0.1;   // in (0, 5/6)
  SearchMode search_mode = SearchMode::kLinear;
  std::uint64_t seed = 0;

  void Validate() const;
};

// Geometric ladder of thresholds (1-eps)^{-z}, ascending.
struct ThresholdGrid {
  double rho_min = 0.0;
  double rho_max = 0.0;
  std::vector<double> values;
};

// All (1-eps)^{-z}, z integer, in [(1-eps) rho_min, rho_max]. The one extra
// step below rho_min guarantees that every rho* in [rho_min, rho_max] has a
// grid value in [(1-eps) rho*, rho*].
ThresholdGrid MakeThresholdGrid(double rho_min, double rho_max,
                                double epsilon);

// Independent Probe runs per threshold: ceil(log_{1-eps} eps).
std::size_t ProbeRepetitions(double epsilon);

// Two RandBatch passes over `large` (p = 1, M = ceil(eps^-2)), each boosted
// by its best single-element augmentation, plus USM over `small` ∪ A1 when
// that fits in the budget. Returns the best candidate; always within budget.
Solution Probe(double rho, const ElementSet& large, const ElementSet& small,
               double epsilon, const ValueOracle& oracle,
               const CostModel& costs, const IndependenceSystem& knapsack,
               const UsmSolver& usm, SearchMode mode, Executor& executor,
               Rng& rng);

// Knapsack-constrained maximization of a non-negative submodular function.
// E[f(S)] >= (1/8 - eps) OPT with alpha = 1/4. Probe branches run in
// parallel, each on its own RNG stream, and are charged to `executor` by
// their maximum depth.
Solution ParSkp(const SkpConfig& config, const ValueOracle& oracle,
                const CostModel& costs, const UsmSolver& usm,
                Executor& executor);

}  // namespace parsubmod

#endif  // PARSUBMOD_PAR_SKP_H_
