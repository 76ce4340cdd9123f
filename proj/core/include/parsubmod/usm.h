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

#ifndef PARSUBMOD_USM_H_
#define PARSUBMOD_USM_H_

#include <string_view>

#include "parsubmod/element_set.h"
#include "parsubmod/executor.h"
#include "parsubmod/oracle.h"
#include "parsubmod/random.h"

namespace parsubmod {

struct UsmResult {
  ElementSet set;  // always a subset of the input
  double value = 0.0;
};

// Unconstrained submodular maximization over a subset X of the ground set:
// max { f(Y) : Y ⊆ X }. Solvers report the value of what they return.
class UsmSolver {
 public:
  virtual ~UsmSolver() = default;
  virtual UsmResult Solve(const ElementSet& domain, const ValueOracle& oracle,
                          Executor& executor, Rng& rng) const = 0;
  // Expected approximation factor (OPT / E[f]) for non-negative submodular f.
  virtual double claimed_ratio() const = 0;
  virtual std::string_view name() const = 0;
};

// Each element of X independently with probability 1/2; one query to value
// the draw. E[f(result)] >= OPT_X / 4.
class RandomSubsetUsm final : public UsmSolver {
 public:
  UsmResult Solve(const ElementSet& domain, const ValueOracle& oracle,
                  Executor& executor, Rng& rng) const override;
  double claimed_ratio() const override { return 4.0; }
  std::string_view name() const override { return "random_subset"; }
};

}  // namespace parsubmod

#endif  // PARSUBMOD_USM_H_
