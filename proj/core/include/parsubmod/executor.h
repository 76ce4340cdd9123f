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

#ifndef PARSUBMOD_EXECUTOR_H_
#define PARSUBMOD_EXECUTOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parsubmod/element_set.h"
#include "parsubmod/oracle.h"

namespace parsubmod {

struct RunMetrics {
  double utility = 0.0;
  std::uint64_t rounds = 0;
  std::uint64_t queries = 0;
  std::uint64_t max_queries_per_round = 0;
  std::uint64_t independence_checks = 0;
  std::int64_t wall_ms = 0;
};

// The queries of one adaptive round. None may depend on another's answer,
// which holds by construction: a batch is fully built before submission.
class QueryBatch {
 public:
  // Queues f(set). Returns the index of its result.
  std::size_t Add(ElementSet set);
  // Queues f(base ∪ {u}) for each u in `adds`, in order. Returns the index of
  // the first result; the rest follow contiguously.
  std::size_t AddExtensions(ElementSet base, std::vector<ElementId> adds);

  std::size_t size() const { return num_queries_; }
  bool empty() const { return num_queries_ == 0; }

 private:
  friend class Executor;
  struct Group {
    ElementSet base;
    std::vector<ElementId> adds;
    bool plain = false;  // f(base) itself rather than extensions
    std::size_t offset = 0;
  };
  std::vector<Group> groups_;
  std::size_t num_queries_ = 0;
};

struct ExecutorOptions {
  // Evaluate the queries of a round on the TBB worker pool.
  bool parallel = true;
  // Extension queries per task.
  std::size_t grain = 128;
};

// Evaluates query rounds and keeps the adaptivity accounting.
//
// Each SubmitRound() is one adaptive round. Parallel algorithm branches run
// on Fork()ed executors and are merged with JoinBranches(), which charges the
// parent the deepest branch, not the sum, and aligns the branches' rounds so
// max_queries_per_round reflects queries issued concurrently.
class Executor {
 public:
  explicit Executor(ExecutorOptions options = {});

  std::vector<double> SubmitRound(const ValueOracle& oracle,
                                  const QueryBatch& batch);

  // A round consisting of the single query f(set).
  double Evaluate(const ValueOracle& oracle, const ElementSet& set);

  const ExecutorOptions& options() const { return options_; }

  // Fresh accounting, same options.
  Executor Fork() const;
  void JoinBranches(std::span<const Executor> branches);

  void AddIndependenceChecks(std::uint64_t n) { independence_checks_ += n; }

  std::uint64_t rounds() const { return per_round_.size(); }
  std::uint64_t queries() const { return queries_; }
  std::uint64_t max_queries_per_round() const;
  std::uint64_t independence_checks() const { return independence_checks_; }
  std::span<const std::uint64_t> queries_per_round() const {
    return per_round_;
  }

  // Counters as RunMetrics; utility and wall_ms are left for the caller.
  RunMetrics Snapshot() const;

 private:
  ExecutorOptions options_;
  std::vector<std::uint64_t> per_round_;
  std::uint64_t queries_ = 0;
  std::uint64_t independence_checks_ = 0;
};

// f(u | S) = f(S ∪ {u}) - f(S), in one round of two queries, or one query
// when the caller already knows f(S). Returns 0 without querying if u ∈ S.
double Marginal(const ValueOracle& oracle, Executor& executor, ElementId u,
                const ElementSet& set,
                std::optional<double> known_set_value = std::nullopt);

}  // namespace parsubmod

#endif  // PARSUBMOD_EXECUTOR_H_
