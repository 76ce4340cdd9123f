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

#ifndef PARSUBMOD_CONSTRAINTS_H_
#define PARSUBMOD_CONSTRAINTS_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parsubmod/element_set.h"

namespace parsubmod {

// Relative slack on budget comparisons so that incremental and batch cost
// sums agree on sets whose cost equals the budget.
inline constexpr double kBudgetSlack = 1e-12;

struct CostModel {
  std::vector<double> costs;
  double budget = 0.0;

  std::size_t size() const { return costs.size(); }
  double operator()(ElementId u) const { return costs[u]; }
  double Total(ElementSpan set) const;
  bool Affordable(double total) const {
    return total <= budget * (1.0 + kBudgetSlack);
  }
  // Positive costs and budget; with `require_affordable`, also c(u) <= B.
  void Validate(bool require_affordable) const;
};

CostModel UnitCosts(std::size_t n, double budget);

enum class SystemKind {
  kMatroid,   // a 1-system
  kKSystem,   // bounded k
  kUnbounded  // e.g. knapsack: no useful k
};

// Incremental feasibility test from a fixed starting independent set.
class FeasibleSetBuilder {
 public:
  virtual ~FeasibleSetBuilder() = default;
  // Is current ∪ {u} independent? `u` must not already be in the set.
  virtual bool CanAdd(ElementId u) const = 0;
  // Adds `u` unconditionally.
  virtual void Add(ElementId u) = 0;
};

// A downward-closed family of feasible subsets of {0..n-1}, given as an
// oracle, together with its declared k-system parameter.
class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;

  std::size_t ground_size() const { return n_; }
  int k() const { return k_; }
  SystemKind kind() const { return kind_; }
  bool k_bounded() const { return kind_ != SystemKind::kUnbounded; }
  // Set when k is a product of constituent k's rather than a known bound.
  bool k_is_heuristic() const { return k_heuristic_; }
  // Known maximum feasible cardinality, if any.
  std::optional<std::size_t> r_hint() const { return r_hint_; }

  // `set` is canonical (sorted, unique).
  virtual bool IsIndependent(ElementSpan set) const = 0;

  // `start` must be canonical and independent.
  virtual std::unique_ptr<FeasibleSetBuilder> NewBuilder(
      ElementSpan start) const;

  virtual std::string Describe() const = 0;

  // True only for the system in which every set is independent.
  virtual bool IsFree() const { return false; }
  // True only for plain cardinality constraints |X| <= m.
  virtual bool IsCardinality() const { return false; }

 protected:
  IndependenceSystem(std::size_t n, int k, SystemKind kind,
                     std::optional<std::size_t> r_hint, bool heuristic = false)
      : n_(n), k_(k), kind_(kind), r_hint_(r_hint), k_heuristic_(heuristic) {}

 private:
  std::size_t n_;
  int k_;
  SystemKind kind_;
  std::optional<std::size_t> r_hint_;
  bool k_heuristic_;
};

using SystemPtr = std::shared_ptr<const IndependenceSystem>;

// X independent iff c(X) <= B. Declared k = n, kind kUnbounded.
SystemPtr BuildKnapsack(CostModel costs);

// X independent iff |X| <= m.
SystemPtr BuildCardinality(std::size_t n, std::size_t m);

// Every set independent.
SystemPtr BuildFreeSystem(std::size_t n);

// labels[u] is the group of element u; groups are 0..caps.size()-1.
SystemPtr BuildPartitionMatroid(std::vector<int> labels,
                                std::vector<std::size_t> caps,
                                std::optional<std::size_t> total_cap = {});

// Independent iff independent in every constituent. k is the number of
// non-free matroids when all constituents are matroids; otherwise the
// product of constituent k's, flagged heuristic.
SystemPtr BuildIntersection(std::vector<SystemPtr> systems);

// Elements carry one or more labels; per-label caps plus a total cap.
// k = number of distinct labels in use.
SystemPtr BuildLabelSystem(std::vector<std::vector<int>> labels,
                           std::vector<std::size_t> caps,
                           std::size_t total_cap);

// X -> base.IsIndependent(root ∪ X). `root` must be independent in `base`
// and X is expected to be disjoint from it.
SystemPtr Contract(SystemPtr base, ElementSet root);

// Brute-force check of the k-system property: for every Y ⊆ N and every two
// bases X1, X2 of Y, |X1| <= k_claim * |X2|. Refuses (InputError) n > 12.
bool VerifyKParameter(const IndependenceSystem& system, int k_claim);

// Convenience: IsIndependent on an ElementSet.
inline bool IsIndependent(const IndependenceSystem& s, const ElementSet& x) {
  return s.IsIndependent(x.ids());
}

}  // namespace parsubmod

#endif  // PARSUBMOD_CONSTRAINTS_H_
