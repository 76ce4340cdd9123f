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

#ifndef PARSUBMOD_RAND_BATCH_H_
#define PARSUBMOD_RAND_BATCH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parsubmod/constraints.h"
#include "parsubmod/element_set.h"
#include "parsubmod/executor.h"
#include "parsubmod/oracle.h"
#include "parsubmod/random.h"

namespace parsubmod {

// How the prefix length t* is located inside one RandBatch iteration.
//   kLinear: every prefix is scored in a single round, O(|L| d) queries.
//   kBinary: two interleaved binary searches over monotone predicates,
//            O(log d) rounds of O(|L|) queries each.
enum class SearchMode { kLinear, kBinary };

struct RandBatchParams {
  double rho = 0.0;            // density threshold, > 0
  std::size_t max_count = 1;   // M
  double p = 1.0;              // batch acceptance probability in (0, 1]
  double epsilon = 0.1;        // in (0, 1)
  SearchMode search_mode = SearchMode::kLinear;

  void Validate() const;
};

struct RandBatchResult {
  ElementSet accepted;              // A
  std::vector<ElementId> considered;  // U, in selection order
  ElementSet remaining;             // L: valuable elements left over
  // f(A). Left at 0 for an empty candidate set, which makes no queries.
  double accepted_value = 0.0;
  std::size_t count = 0;
  std::size_t iterations = 0;
};

// Random maximal feasible extension of `base` using elements of
// `candidates` (disjoint from `base`), returned in selection order. Uses no
// value queries; feasibility checks are charged to `executor`.
std::vector<ElementId> GetSeq(const ElementSet& base,
                              const ElementSet& candidates,
                              const IndependenceSystem& system, Rng& rng,
                              Executor& executor);

struct TStarInput {
  const ElementSet& base;        // A
  double base_value;             // f(A)
  const ElementSet& valuable;    // L
  ElementSpan sequence;          // v_1..v_d from GetSeq(A, L)
  double rho;
  double epsilon;
};

struct TStarResult {
  std::size_t t1 = 0;
  std::size_t t2 = 0;
  std::size_t tstar = 0;
  double value_at_tstar = 0.0;  // f(A ∪ V_{t*})
  // f(u | A ∪ V_{t*}) for u in L (0 for u in V_{t*}), when that prefix was
  // scored during the search.
  std::optional<std::vector<double>> gains_at_tstar;
};

// Locates t1 (cost condition), t2 (value condition) and t* = min(t1, t2)
// over prefixes i = 0..d of `sequence`. Both search modes return identical
// results on submodular oracles.
TStarResult FindTStar(const TStarInput& in, const ValueOracle& oracle,
                      std::span<const double> costs,
                      const IndependenceSystem& system, Executor& executor,
                      SearchMode mode);

// Threshold-driven adaptive sequencing with random batch acceptance.
//
// Repeatedly draws a random feasible sequence of valuable elements, keeps
// its longest prefix that still leaves enough value or cost on the table,
// and accepts that prefix into A with probability p. Every drawn prefix is
// retired into U whether or not it is accepted. Stops when no valuable
// element remains or `max_count` value-condition cuts have been accepted.
RandBatchResult RandBatch(const RandBatchParams& params,
                          const ElementSet& candidates,
                          const ValueOracle& oracle,
                          std::span<const double> costs,
                          const IndependenceSystem& system, Executor& executor,
                          Rng& rng);

}  // namespace parsubmod

#endif  // PARSUBMOD_RAND_BATCH_H_
