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

#ifndef PARSUBMOD_GREEDY_H_
#define PARSUBMOD_GREEDY_H_

#include <vector>

#include "parsubmod/constraints.h"
#include "parsubmod/executor.h"
#include "parsubmod/oracle.h"
#include "parsubmod/solution.h"

namespace parsubmod {

// Sequential baseline: repeatedly adds the feasible element of largest
// positive marginal density f(u|S)/c(u) (unit costs when `costs` is null),
// one scan round per step. Returns the better of the greedy set and the best
// feasible singleton. Ties go to the smallest id.
Solution DensityGreedy(const ValueOracle& oracle,
                       const IndependenceSystem& system,
                       const std::vector<double>* costs, Executor& executor);

}  // namespace parsubmod

#endif  // PARSUBMOD_GREEDY_H_
