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

#include "parsubmod/executor.h"

#include <algorithm>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

namespace parsubmod {

std::size_t QueryBatch::Add(ElementSet set) {
  Group g;
  g.base = std::move(set);
  g.plain = true;
  g.offset = num_queries_;
  groups_.push_back(std::move(g));
  return num_queries_++;
}

std::size_t QueryBatch::AddExtensions(ElementSet base,
                                      std::vector<ElementId> adds) {
  const std::size_t first = num_queries_;
  if (adds.empty()) return first;
  Group g;
  g.base = std::move(base);
  g.adds = std::move(adds);
  g.offset = num_queries_;
  num_queries_ += g.adds.size();
  groups_.push_back(std::move(g));
  return first;
}

Executor::Executor(ExecutorOptions options) : options_(options) {
  if (options_.grain == 0) options_.grain = 1;
}

std::vector<double> Executor::SubmitRound(const ValueOracle& oracle,
                                          const QueryBatch& batch) {
  std::vector<double> results(batch.size());
  if (batch.empty()) return results;

  const std::size_t n = oracle.ground_size();
  for (const auto& g : batch.groups_) {
    g.base.CheckRange(n);
    for (ElementId u : g.adds) {
      if (u >= n) {
        throw InputError("element id " + std::to_string(u) +
                         " out of range for ground set of size " +
                         std::to_string(n));
      }
    }
  }

  // A task is one plain query or a chunk of one extension group.
  struct Task {
    std::size_t group;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < batch.groups_.size(); ++gi) {
    const auto& g = batch.groups_[gi];
    if (g.plain) {
      tasks.push_back({gi, 0, 1});
      continue;
    }
    for (std::size_t b = 0; b < g.adds.size(); b += options_.grain) {
      tasks.push_back({gi, b, std::min(g.adds.size(), b + options_.grain)});
    }
  }

  auto run_task = [&](const Task& t) {
    const auto& g = batch.groups_[t.group];
    if (g.plain) {
      results[g.offset] = oracle.Value(g.base.ids());
      return;
    }
    ElementSpan adds(g.adds.data() + t.begin, t.end - t.begin);
    oracle.ExtensionValues(
        g.base.ids(), adds,
        std::span<double>(results.data() + g.offset + t.begin, adds.size()));
  };

  if (options_.parallel && tasks.size() > 1) {
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, tasks.size()),
                      [&](const tbb::blocked_range<std::size_t>& r) {
                        for (std::size_t i = r.begin(); i != r.end(); ++i) {
                          run_task(tasks[i]);
                        }
                      });
  } else {
    for (const auto& t : tasks) run_task(t);
  }

  per_round_.push_back(batch.size());
  queries_ += batch.size();
  return results;
}

double Executor::Evaluate(const ValueOracle& oracle, const ElementSet& set) {
  QueryBatch batch;
  batch.Add(set);
  return SubmitRound(oracle, batch)[0];
}

Executor Executor::Fork() const { return Executor(options_); }

void Executor::JoinBranches(std::span<const Executor> branches) {
  std::vector<std::uint64_t> merged;
  for (const auto& b : branches) {
    if (b.per_round_.size() > merged.size()) {
      merged.resize(b.per_round_.size(), 0);
    }
    for (std::size_t r = 0; r < b.per_round_.size(); ++r) {
      merged[r] += b.per_round_[r];
    }
    queries_ += b.queries_;
    independence_checks_ += b.independence_checks_;
  }
  per_round_.insert(per_round_.end(), merged.begin(), merged.end());
}

std::uint64_t Executor::max_queries_per_round() const {
  if (per_round_.empty()) return 0;
  return *std::max_element(per_round_.begin(), per_round_.end());
}

RunMetrics Executor::Snapshot() const {
  RunMetrics m;
  m.rounds = rounds();
  m.queries = queries_;
  m.max_queries_per_round = max_queries_per_round();
  m.independence_checks = independence_checks_;
  return m;
}

double Marginal(const ValueOracle& oracle, Executor& executor, ElementId u,
                const ElementSet& set, std::optional<double> known_set_value) {
  if (u >= oracle.ground_size()) {
    throw InputError("element id " + std::to_string(u) + " out of range");
  }
  if (set.contains(u)) return 0.0;
  QueryBatch batch;
  const std::size_t with_u = batch.AddExtensions(set, {u});
  std::size_t without = 0;
  if (!known_set_value) without = batch.Add(set);
  const auto values = executor.SubmitRound(oracle, batch);
  const double base = known_set_value ? *known_set_value : values[without];
  return values[with_u] - base;
}

}  // namespace parsubmod
