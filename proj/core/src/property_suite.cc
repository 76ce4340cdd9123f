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

#include "parsubmod/property_suite.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <utility>

#include "parsubmod/datasets.h"
#include "parsubmod/executor.h"
#include "parsubmod/greedy.h"
#include "parsubmod/objectives.h"
#include "parsubmod/par_skp.h"
#include "parsubmod/par_ssp.h"
#include "parsubmod/rand_batch.h"
#include "parsubmod/usm.h"

namespace parsubmod {

ElementSet RandomSubset(std::size_t n, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<ElementId> ids;
  for (std::size_t u = 0; u < n; ++u) {
    if (coin(rng)) ids.push_back(static_cast<ElementId>(u));
  }
  return ElementSet::FromSorted(std::move(ids));
}

ElementSet RandomIndependentSet(const IndependenceSystem& system, Rng& rng,
                                double keep) {
  std::vector<ElementId> order(system.ground_size());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution take(keep);
  auto builder = system.NewBuilder({});
  ElementSet out;
  for (ElementId u : order) {
    if (take(rng) && builder->CanAdd(u)) {
      builder->Add(u);
      out.Insert(u);
    }
  }
  return out;
}

std::optional<std::string> CheckSubmodular(const ValueOracle& oracle, Rng& rng,
                                           std::size_t pairs, double tol) {
  const std::size_t n = oracle.ground_size();
  std::vector<ElementId> all(n);
  std::iota(all.begin(), all.end(), ElementId{0});
  std::vector<double> ext(n);
  for (std::size_t i = 0; i < pairs; ++i) {
    const ElementSet x = RandomSubset(n, rng);
    const ElementSet y = RandomSubset(n, rng);
    const double fx = oracle.Value(x.ids());
    const double fy = oracle.Value(y.ids());
    const double fu = oracle.Value(Union(x, y).ids());
    const double fi = oracle.Value(Intersection(x, y).ids());
    if (fx < -tol || fy < -tol || fu < -tol || fi < -tol) {
      return "negative value on " + x.DebugString() + " or " + y.DebugString();
    }
    if (fx + fy < fu + fi - tol) {
      return "submodularity fails for X=" + x.DebugString() +
             " Y=" + y.DebugString();
    }
    oracle.ExtensionValues(x.ids(), all, ext);
    for (ElementId u : all) {
      const double direct = oracle.Value(x.With(u).ids());
      if (std::abs(direct - ext[u]) > 1e-9 * std::max(1.0, std::abs(direct))) {
        return "ExtensionValues disagrees with Value at X=" + x.DebugString() +
               " u=" + std::to_string(u);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckDownwardClosed(const IndependenceSystem& system,
                                               Rng& rng, std::size_t samples) {
  if (!system.IsIndependent({})) return "empty set not independent";
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < samples; ++i) {
    const ElementSet x = RandomIndependentSet(system, rng);
    if (!IsIndependent(system, x)) {
      return "builder produced dependent set " + x.DebugString();
    }
    std::vector<ElementId> sub;
    for (ElementId u : x) {
      if (coin(rng)) sub.push_back(u);
    }
    const ElementSet y = ElementSet::FromSorted(std::move(sub));
    if (!IsIndependent(system, y)) {
      return "subset " + y.DebugString() + " of independent " +
             x.DebugString() + " is dependent";
    }
  }
  return std::nullopt;
}

namespace {

class Suite {
 public:
  Suite(std::ostream& log) : log_(log) {}

  void Run(const std::string& name,
           const std::function<std::optional<std::string>()>& check) {
    PropertyResult r{name, true, ""};
    try {
      if (auto failure = check()) {
        r.passed = false;
        r.detail = *failure;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    log_ << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) log_ << ": " << r.detail;
    log_ << '\n';
    results_.push_back(std::move(r));
  }

  std::vector<PropertyResult> Take() { return std::move(results_); }

 private:
  std::ostream& log_;
  std::vector<PropertyResult> results_;
};

std::vector<int> RandomLabels(std::size_t n, int groups, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, groups - 1);
  std::vector<int> labels(n);
  for (int& l : labels) l = pick(rng);
  return labels;
}

std::vector<std::size_t> RandomCaps(int groups, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, 3);
  std::vector<std::size_t> caps(groups);
  for (auto& c : caps) c = pick(rng);
  return caps;
}

}  // namespace

std::vector<PropertyResult> RunPropertySuite(std::uint64_t seed,
                                             std::ostream& log) {
  Suite suite(log);
  constexpr std::size_t kPairs = 1000;
  constexpr std::size_t kInstances = 5;

  // Objectives.
  using OracleFactory = std::function<std::unique_ptr<ValueOracle>(std::uint64_t)>;
  const std::vector<std::pair<std::string, OracleFactory>> oracles = {
      {"cut",
       [](std::uint64_t s) {
         return std::make_unique<CutOracle>(SyntheticCutGraph(10, s));
       }},
      {"revenue",
       [](std::uint64_t s) {
         return std::make_unique<RevenueOracle>(SyntheticRevenueGraph(5, s), 2);
       }},
      {"image",
       [](std::uint64_t s) {
         return std::make_unique<ImageSummaryOracle>(
             CosineSimilarity(SyntheticPixels(10, s).pixels));
       }},
      {"movie",
       [](std::uint64_t s) {
         return std::make_unique<MovieOracle>(
             MovieSimilarity(SyntheticMovies(10, s), kDefaultMovieLambda));
       }},
  };
  for (const auto& [name, make] : oracles) {
    suite.Run("oracle " + name + " submodular and non-negative", [&] {
      for (std::size_t i = 0; i < kInstances; ++i) {
        Rng rng(DeriveSeed(seed, {1, i}));
        auto oracle = make(DeriveSeed(seed, {2, i}));
        if (auto f = CheckSubmodular(*oracle, rng, kPairs)) return f;
      }
      return std::optional<std::string>();
    });
  }
  suite.Run("oracle shifted-cut submodular and non-negative", [&] {
    for (std::size_t i = 0; i < kInstances; ++i) {
      Rng rng(DeriveSeed(seed, {3, i}));
      CutOracle cut(SyntheticCutGraph(10, DeriveSeed(seed, {4, i})));
      ShiftedOracle shifted(cut, RandomSubset(10, rng));
      if (auto f = CheckSubmodular(shifted, rng, kPairs)) return f;
    }
    return std::optional<std::string>();
  });
  suite.Run("costs normalized to mean 1", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < kInstances; ++i) {
      const auto s = DeriveSeed(seed, {5, i});
      for (const auto& costs : {MovieCosts(SyntheticMovies(30, s)),
                                ImageCosts(SyntheticPixels(30, s).pixels)}) {
        const double mean = std::accumulate(costs.begin(), costs.end(), 0.0) /
                            static_cast<double>(costs.size());
        if (std::abs(mean - 1.0) > 1e-12) return "mean cost " + std::to_string(mean);
      }
    }
    return std::nullopt;
  });

  // Constraints.
  using SystemFactory = std::function<std::pair<SystemPtr, int>(std::size_t, Rng&)>;
  const std::vector<std::pair<std::string, SystemFactory>> systems = {
      {"cardinality",
       [](std::size_t n, Rng& rng) {
         std::uniform_int_distribution<std::size_t> m(0, n);
         return std::pair(BuildCardinality(n, m(rng)), 1);
       }},
      {"partition",
       [](std::size_t n, Rng& rng) {
         return std::pair(BuildPartitionMatroid(RandomLabels(n, 3, rng),
                                                RandomCaps(3, rng)),
                          1);
       }},
      {"truncated partition",
       [](std::size_t n, Rng& rng) {
         std::uniform_int_distribution<std::size_t> m(1, n);
         return std::pair(BuildPartitionMatroid(RandomLabels(n, 3, rng),
                                                RandomCaps(3, rng), m(rng)),
                          1);
       }},
      {"intersection of two partitions",
       [](std::size_t n, Rng& rng) {
         auto a = BuildPartitionMatroid(RandomLabels(n, 3, rng), RandomCaps(3, rng));
         auto b = BuildPartitionMatroid(RandomLabels(n, 2, rng), RandomCaps(2, rng));
         return std::pair(BuildIntersection({a, b}), 2);
       }},
      {"label system",
       [](std::size_t n, Rng& rng) {
         std::uniform_int_distribution<int> pick(0, 2);
         std::vector<std::vector<int>> labels(n);
         for (auto& l : labels) {
           l = {pick(rng), pick(rng)};
         }
         std::uniform_int_distribution<std::size_t> m(1, n);
         auto sys = BuildLabelSystem(labels, RandomCaps(3, rng), m(rng));
         return std::pair(sys, sys->k());
       }},
      {"knapsack",
       [](std::size_t n, Rng& rng) {
         std::uniform_real_distribution<double> c(0.1, 1.0);
         CostModel costs;
         for (std::size_t u = 0; u < n; ++u) costs.costs.push_back(c(rng));
         costs.budget = 1.5;
         return std::pair(BuildKnapsack(costs), 0);
       }},
  };
  for (const auto& [name, make] : systems) {
    suite.Run("system " + name + " downward closed", [&] {
      for (std::size_t i = 0; i < kInstances; ++i) {
        Rng rng(DeriveSeed(seed, {6, i}));
        auto [sys, k] = make(10, rng);
        if (auto f = CheckDownwardClosed(*sys, rng, 200)) return f;
      }
      return std::optional<std::string>();
    });
    if (name == "knapsack") continue;
    suite.Run("system " + name + " k parameter", [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i < kInstances; ++i) {
        Rng rng(DeriveSeed(seed, {7, i}));
        auto [sys, k] = make(8, rng);
        if (sys->k() != k) return "declared k " + std::to_string(sys->k());
        if (!VerifyKParameter(*sys, sys->k())) {
          return "k = " + std::to_string(sys->k()) + " refuted on " + sys->Describe();
        }
      }
      return std::nullopt;
    });
  }

  // Solvers.
  suite.Run("ParSKP output within budget", [&]() -> std::optional<std::string> {
    const RandomSubsetUsm usm;
    for (std::size_t i = 0; i < kInstances; ++i) {
      const auto s = DeriveSeed(seed, {8, i});
      CutOracle cut(SyntheticCutGraph(12, s));
      CostModel costs{SyntheticCutCosts(12, s), 0.0};
      costs.budget = std::accumulate(costs.costs.begin(), costs.costs.end(), 0.0) / 2;
      for (SearchMode mode : {SearchMode::kLinear, SearchMode::kBinary}) {
        SkpConfig c;
        c.search_mode = mode;
        c.seed = s;
        Executor exec;
        const Solution sol = ParSkp(c, cut, costs, usm, exec);
        if (!costs.Affordable(costs.Total(sol.set.ids()))) {
          return "over budget: " + sol.set.DebugString();
        }
      }
    }
    return std::nullopt;
  });
  suite.Run("ParSSP output independent", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < kInstances; ++i) {
      Rng rng(DeriveSeed(seed, {9, i}));
      CutOracle cut(SyntheticCutGraph(10, DeriveSeed(seed, {10, i})));
      auto a = BuildPartitionMatroid(RandomLabels(10, 3, rng), {2, 2, 2});
      auto b = BuildPartitionMatroid(RandomLabels(10, 2, rng), {2, 2});
      SystemPtr sys = BuildIntersection({a, b});
      SspConfig c;
      c.epsilon = 0.3;
      c.seed = DeriveSeed(seed, {11, i});
      Executor exec;
      const Solution sol = ParSsp(c, cut, sys, exec);
      if (!IsIndependent(*sys, sol.set)) return "dependent: " + sol.set.DebugString();
    }
    return std::nullopt;
  });
  suite.Run("density greedy output feasible", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < kInstances; ++i) {
      const auto s = DeriveSeed(seed, {12, i});
      CutOracle cut(SyntheticCutGraph(12, s));
      CostModel costs{SyntheticCutCosts(12, s), 2.0};
      auto knapsack = BuildKnapsack(costs);
      Executor exec;
      const Solution sol = DensityGreedy(cut, *knapsack, &costs.costs, exec);
      if (!IsIndependent(*knapsack, sol.set)) return "over budget: " + sol.set.DebugString();
    }
    return std::nullopt;
  });
  suite.Run("RandBatch search modes agree", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < 20; ++i) {
      const auto s = DeriveSeed(seed, {13, i});
      CutOracle cut(SyntheticCutGraph(12, s));
      CostModel costs{SyntheticCutCosts(12, s), 2.5};
      auto knapsack = BuildKnapsack(costs);
      RandBatchParams params;
      params.rho = 0.5;
      params.max_count = 3;
      params.p = 0.5;
      params.epsilon = 0.2;
      RandBatchResult out[2];
      for (int m = 0; m < 2; ++m) {
        params.search_mode = m == 0 ? SearchMode::kLinear : SearchMode::kBinary;
        Rng rng(s);
        Executor exec;
        out[m] = RandBatch(params, ElementSet::Range(12), cut, costs.costs,
                           *knapsack, exec, rng);
      }
      if (out[0].accepted != out[1].accepted ||
          out[0].considered != out[1].considered ||
          out[0].remaining != out[1].remaining) {
        return "modes diverge at run " + std::to_string(i);
      }
    }
    return std::nullopt;
  });
  return suite.Take();
}

}  // namespace parsubmod
