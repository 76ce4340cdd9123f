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

#include "parsubmod/usm.h"

#include <vector>

namespace parsubmod {

UsmResult RandomSubsetUsm::Solve(const ElementSet& domain,
                                 const ValueOracle& oracle,
                                 Executor& executor, Rng& rng) const {
  domain.CheckRange(oracle.ground_size());
  std::bernoulli_distribution coin(0.5);
  std::vector<ElementId> picked;
  for (ElementId u : domain) {
    if (coin(rng)) picked.push_back(u);
  }
  UsmResult r;
  r.set = ElementSet::FromSorted(std::move(picked));
  r.value = executor.Evaluate(oracle, r.set);
  return r;
}

}  // namespace parsubmod
