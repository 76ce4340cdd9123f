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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. `acceptance 5 9` runs only 5 and 9.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "parsubmod/constraints.h"
#include "parsubmod/datasets.h"
#include "parsubmod/executor.h"
#include "parsubmod/experiment.h"
#include "parsubmod/greedy.h"
#include "parsubmod/objectives.h"
#include "parsubmod/oracle.h"
#include "parsubmod/par_skp.h"
#include "parsubmod/par_ssp.h"
#include "parsubmod/rand_batch.h"
#include "parsubmod/random.h"
#include "parsubmod/usm.h"
#include "support/reference.h"

namespace {

namespace ps = parsubmod;
using reftest::Set;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are reported.
class Verdict {
 public:
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << " [" << what << "]";
  }
  void Note(const std::string& s) { notes_ << ' ' << s; }
  Outcome Done() const {
    std::ostringstream d;
    d << checks_ - failures_ << "/" << checks_ << " checks hold;" << notes_.str();
    return {failures_ == 0 && checks_ > 0, d.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

Set ToSet(const ps::ElementSet& s) { return Set(s.begin(), s.end()); }

std::vector<reftest::Edge> RefEdges(const ps::WeightedGraph& g) {
  std::vector<reftest::Edge> out;
  for (const auto& e : g.edges()) out.push_back({e.from, e.to, e.weight});
  return out;
}

reftest::Matrix RefMatrix(const ps::SimilarityMatrix& s) {
  reftest::Matrix m(s.size(), std::vector<double>(s.size()));
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t v = 0; v < s.size(); ++v) m[u][v] = s(u, v);
  }
  return m;
}

double RefCost(const std::vector<double>& c, const Set& s) {
  double t = 0.0;
  for (auto u : s) t += c[u];
  return t;
}

bool WithinBudget(const std::vector<double>& c, double budget, const Set& s) {
  return RefCost(c, s) <= budget * (1 + 1e-12);
}

// Random cut instance with U(0.1, 1) costs and B = half the total cost.
struct CutKnapsack {
  ps::WeightedGraph graph;
  ps::CostModel costs;
  std::vector<reftest::Edge> edges;
};

CutKnapsack MakeCutKnapsack(std::size_t n, std::uint64_t seed,
                            double budget_fraction = 0.5) {
  CutKnapsack k;
  k.graph = ps::SyntheticCutGraph(n, seed);
  k.costs.costs = ps::SyntheticCutCosts(n, seed);
  k.costs.budget = budget_fraction *
                   std::accumulate(k.costs.costs.begin(), k.costs.costs.end(), 0.0);
  k.edges = RefEdges(k.graph);
  return k;
}

ps::ExecutorOptions Serial() {
  ps::ExecutorOptions o;
  o.parallel = false;
  return o;
}

// -------------------------------------------------------------- 1

// Per-problem reference feasibility for the k-system variants.
struct LabeledInstance {
  std::string problem;
  std::function<bool(const Set&, std::size_t m)> feasible;
};

Outcome Feasibility() {
  Verdict v;
  const ps::RandomSubsetUsm usm;
  std::size_t outputs = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    // Knapsack variants.
    for (const std::string problem : {"synthetic-cut", "revenue", "image", "movie"}) {
      const std::size_t n = 24;
      ps::Instance inst = ps::BuildInstance(problem, true, std::nullopt, n, seed);
      const double total = std::accumulate(inst.costs.begin(), inst.costs.end(), 0.0);
      const double max_cost = *std::max_element(inst.costs.begin(), inst.costs.end());
      for (double frac : {0.1, 0.3}) {
        ps::CostModel costs{inst.costs, std::max(max_cost, frac * total)};
        auto knapsack = ps::BuildKnapsack(costs);
        for (auto mode : {ps::SearchMode::kLinear, ps::SearchMode::kBinary}) {
          ps::SkpConfig c;
          c.search_mode = mode;
          c.seed = ps::DeriveSeed(seed, {1});
          ps::Executor exec;
          const auto sol = ps::ParSkp(c, *inst.oracle, costs, usm, exec);
          v.Check(WithinBudget(costs.costs, costs.budget, ToSet(sol.set)),
                  "parskp " + problem);
          ++outputs;
        }
        ps::Executor exec;
        const auto g = ps::DensityGreedy(*inst.oracle, *knapsack, &costs.costs, exec);
        v.Check(WithinBudget(costs.costs, costs.budget, ToSet(g.set)), "greedy " + problem);
        ++outputs;
      }
    }
    // k-system variants, checked against label counts recomputed here.
    std::vector<LabeledInstance> labeled;
    {
      const std::size_t nodes = 8;
      labeled.push_back({"revenue", [nodes](const Set& s, std::size_t m) {
                           std::vector<std::size_t> per_node(nodes), per_product(5);
                           for (auto e : s) {
                             ++per_node[e % nodes];
                             ++per_product[e / nodes];
                           }
                           for (auto c : per_node) if (c > 2) return false;
                           for (auto c : per_product) if (c > m) return false;
                           return true;
                         }});
    }
    {
      const auto cats = ps::SyntheticPixels(24, seed).categories;
      labeled.push_back({"image", [cats](const Set& s, std::size_t m) {
                           std::vector<std::size_t> per(3);
                           for (auto e : s) ++per[cats[e]];
                           for (auto c : per) if (c > 5) return false;
                           return s.size() <= m;
                         }});
    }
    {
      const auto genres = ps::SyntheticMovies(24, seed).genres;
      labeled.push_back({"movie", [genres](const Set& s, std::size_t m) {
                           std::vector<std::size_t> per(3);
                           for (auto e : s) for (int g : genres[e]) ++per[g];
                           for (auto c : per) if (c > (m + 1) / 2) return false;
                           return s.size() <= m;
                         }});
    }
    labeled.push_back({"synthetic-cut", [](const Set& s, std::size_t m) {
                         return s.size() <= m;
                       }});
    for (const auto& li : labeled) {
      const std::size_t n = li.problem == "revenue" ? 8 : 24;
      ps::Instance inst = ps::BuildInstance(li.problem, false, std::nullopt, n, seed);
      for (std::size_t m : {2, 4, 7}) {
        auto system = inst.system_for(m);
        for (auto mode : {ps::SearchMode::kLinear, ps::SearchMode::kBinary}) {
          ps::SspConfig c;
          c.search_mode = mode;
          c.seed = ps::DeriveSeed(seed, {2, m});
          for (double eps : {0.4, 0.2}) {
            c.epsilon = eps;
            ps::Executor exec;
            const auto sol = ps::ParSsp(c, *inst.oracle, system, exec);
            v.Check(li.feasible(ToSet(sol.set), m), "parssp " + li.problem);
            ++outputs;
          }
        }
        ps::Executor exec;
        const auto g = ps::DensityGreedy(*inst.oracle, *system, nullptr, exec);
        v.Check(li.feasible(ToSet(g.set), m), "greedy " + li.problem);
        ++outputs;
      }
    }
  }
  // RandBatch on its own, under knapsack and matroid systems.
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto k = MakeCutKnapsack(12, seed, 0.3);
    auto knapsack = ps::BuildKnapsack(k.costs);
    ps::CutOracle cut(k.graph);
    ps::RandBatchParams params;
    params.rho = 0.3;
    params.max_count = 2;
    params.p = 0.5;
    params.epsilon = 0.2;
    ps::Rng rng(seed);
    ps::Executor exec;
    const auto r = ps::RandBatch(params, ps::ElementSet::Range(12), cut,
                                 k.costs.costs, *knapsack, exec, rng);
    v.Check(WithinBudget(k.costs.costs, k.costs.budget, ToSet(r.accepted)),
            "randbatch knapsack");
    ++outputs;
  }
  v.Note(std::to_string(outputs) + " outputs");
  return v.Done();
}

// -------------------------------------------------------------- 2

Outcome Submodularity() {
  Verdict v;
  constexpr std::size_t kPairs = 1000;
  constexpr double kTol = 1e-9;
  auto check = [&](const std::string& name, std::size_t n,
                   const reftest::SetFn& ref, const ps::ValueOracle& oracle,
                   std::uint64_t seed) {
    ps::Rng rng(seed);
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    bool ok = true;
    for (std::size_t i = 0; i < kPairs && ok; ++i) {
      const Set x = reftest::FromMask(mask(rng), n);
      const Set y = reftest::FromMask(mask(rng), n);
      Set uni, inter;
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(uni));
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(inter));
      const double fx = oracle.Value(x), fy = oracle.Value(y);
      const double fu = oracle.Value(uni), fi = oracle.Value(inter);
      ok = fx >= -kTol && fy >= -kTol && fu >= -kTol && fi >= -kTol &&
           fx + fy >= fu + fi - kTol &&
           std::abs(fx - ref(x)) <= 1e-9 * std::max(1.0, std::abs(fx));
    }
    v.Check(ok, name);
  };
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto cut_graph = ps::SyntheticCutGraph(10, seed);
    const auto edges = RefEdges(cut_graph);
    ps::CutOracle cut(cut_graph);
    check("cut", 10, [&](const Set& s) { return reftest::CutValue(edges, s); }, cut, seed);

    const auto rev_graph = ps::SyntheticRevenueGraph(5, seed);
    const auto arcs = RefEdges(rev_graph);
    ps::RevenueOracle revenue(rev_graph, 2);
    check("revenue", 10,
          [&](const Set& s) { return reftest::RevenueValue(arcs, 5, 2, s); }, revenue, seed);

    const auto img_sim = ps::CosineSimilarity(ps::SyntheticPixels(10, seed).pixels);
    const auto img_ref = RefMatrix(img_sim);
    ps::ImageSummaryOracle image(img_sim);
    check("image", 10, [&](const Set& s) { return reftest::ImageValue(img_ref, s); },
          image, seed);

    const auto mov_sim = ps::MovieSimilarity(ps::SyntheticMovies(10, seed), 2.0);
    const auto mov_ref = RefMatrix(mov_sim);
    ps::MovieOracle movie(mov_sim);
    check("movie", 10, [&](const Set& s) { return reftest::MovieValue(mov_ref, s); },
          movie, seed);

    const ps::ElementSet shift{1, 4, 7};
    ps::ShiftedOracle shifted(cut, shift);
    check("shifted cut", 10,
          [&](const Set& s) {
            Set t = s;
            for (auto u : shift) t = reftest::Add(t, u);
            return reftest::CutValue(edges, t);
          },
          shifted, seed);
    ps::ShiftedOracle shifted_movie(movie, ps::ElementSet{0, 9});
    check("shifted movie", 10,
          [&](const Set& s) {
            return reftest::MovieValue(mov_ref, reftest::Add(reftest::Add(s, 0), 9));
          },
          shifted_movie, seed);
  }
  return v.Done();
}

// -------------------------------------------------------------- 3

Outcome DensityBound() {
  Verdict v;
  constexpr std::size_t kRuns = 2000;
  constexpr double kEps = 0.2;
  const auto k = MakeCutKnapsack(10, 3, 0.5);
  ps::CutOracle cut(k.graph);
  auto knapsack = ps::BuildKnapsack(k.costs);
  // rho: the median singleton density, so L starts with about half of N.
  std::vector<double> dens;
  for (std::uint32_t u = 0; u < 10; ++u) {
    dens.push_back(reftest::CutValue(k.edges, {u}) / k.costs.costs[u]);
  }
  std::sort(dens.begin(), dens.end());
  const double rho = dens[5];
  for (double p : {1.0, 0.5}) {
    std::vector<double> diff, fa, ca;
    for (std::size_t r = 0; r < kRuns; ++r) {
      ps::RandBatchParams params;
      params.rho = rho;
      params.max_count = 25;
      params.p = p;
      params.epsilon = kEps;
      ps::Rng rng(ps::DeriveSeed(33, {static_cast<std::uint64_t>(p * 10), r}));
      ps::Executor exec(Serial());
      const auto out = ps::RandBatch(params, ps::ElementSet::Range(10), cut,
                                     k.costs.costs, *knapsack, exec, rng);
      const Set a = ToSet(out.accepted);
      const double f = reftest::CutValue(k.edges, a);
      const double c = RefCost(k.costs.costs, a);
      fa.push_back(f);
      ca.push_back(c);
      diff.push_back(f - (1 - kEps) * (1 - kEps) * rho * c);
    }
    const auto s = reftest::Summarize(diff);
    v.Check(s.mean >= -3 * s.se, Fmt("p=%.1f", p));
    v.Note(Fmt("p=%.1f: mean f(A)=%.4f, (1-eps)^2 rho mean c(A)=%.4f;", p,
               reftest::Summarize(fa).mean,
               (1 - kEps) * (1 - kEps) * rho * reftest::Summarize(ca).mean));
  }
  return v.Done();
}

// -------------------------------------------------------------- 4

Outcome LeftoverBound() {
  Verdict v;
  std::size_t runs = 0, truncated = 0;
  double tightest = 0.0;
  for (std::uint64_t inst = 0; inst < 20; ++inst) {
    const std::size_t n = 10 + inst % 3;
    const auto k = MakeCutKnapsack(n, 100 + inst, 0.5);
    ps::CutOracle cut(k.graph);
    auto knapsack = ps::BuildKnapsack(k.costs);
    const auto opt = reftest::BruteForce(
        n, [&](const Set& s) { return reftest::CutValue(k.edges, s); },
        [&](const Set& s) { return WithinBudget(k.costs.costs, k.costs.budget, s); });
    double min_density = std::numeric_limits<double>::infinity();
    for (std::uint32_t u = 0; u < n; ++u) {
      const double d = reftest::CutValue(k.edges, {u}) / k.costs.costs[u];
      if (d > 0) min_density = std::min(min_density, d);
    }
    for (std::size_t r = 0; r < 100; ++r) {
      ps::RandBatchParams params;
      // A low threshold keeps many elements valuable; large eps and M = 1
      // make the value condition bind early, so runs stop at count = M.
      params.rho = 0.05 * min_density;
      params.max_count = 1 + r % 2;
      params.p = r % 3 == 0 ? 1.0 : 0.5;
      params.epsilon = 0.5 + 0.1 * static_cast<double>(r % 5);
      ps::Rng rng(ps::DeriveSeed(44, {inst, r}));
      ps::Executor exec(Serial());
      const auto out = ps::RandBatch(params, ps::ElementSet::Range(n), cut,
                                     k.costs.costs, *knapsack, exec, rng);
      ++runs;
      if (out.remaining.empty()) continue;
      ++truncated;
      const Set a = ToSet(out.accepted);
      const double fa = reftest::CutValue(k.edges, a);
      double leftover = 0.0;
      for (auto u : out.remaining) {
        leftover += reftest::CutValue(k.edges, reftest::Add(a, u)) - fa;
      }
      const double lhs =
          params.epsilon * static_cast<double>(params.max_count) * leftover;
      tightest = std::max(tightest, lhs / opt.value);
      v.Check(lhs <= opt.value * (1 + 1e-12), "instance " + std::to_string(inst));
    }
  }
  v.Note(std::to_string(truncated) + " of " + std::to_string(runs) +
         " runs exited with L nonempty;" +
         Fmt(" largest lhs/OPT %.4f", tightest));
  if (truncated == 0) v.Check(false, "no run exited at count = M");
  return v.Done();
}

// -------------------------------------------------------------- 5

Outcome KnapsackRatio() {
  Verdict v;
  constexpr std::size_t kRuns = 200;
  const ps::RandomSubsetUsm usm;
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t inst = 0; inst < 20; ++inst) {
    const auto k = MakeCutKnapsack(12, 500 + inst, 0.5);
    ps::CutOracle cut(k.graph);
    const auto opt = reftest::BruteForce(
        12, [&](const Set& s) { return reftest::CutValue(k.edges, s); },
        [&](const Set& s) { return WithinBudget(k.costs.costs, k.costs.budget, s); });
    std::vector<double> ratios;
    for (std::size_t r = 0; r < kRuns; ++r) {
      ps::SkpConfig c;
      c.alpha = 0.25;
      c.epsilon = 0.1;
      c.seed = ps::DeriveSeed(55, {inst, r});
      ps::Executor exec(Serial());
      const auto sol = ps::ParSkp(c, cut, k.costs, usm, exec);
      ratios.push_back(reftest::CutValue(k.edges, ToSet(sol.set)) / opt.value);
    }
    const auto s = reftest::Summarize(ratios);
    worst = std::min(worst, s.mean);
    v.Check(s.mean >= 1.0 / 8 - 0.1 - 3 * s.se, "instance " + std::to_string(inst));
  }
  v.Note(Fmt("worst per-instance mean ratio %.4f vs bound %.4f", worst, 1.0 / 8 - 0.1));
  return v.Done();
}

// -------------------------------------------------------------- 6

Outcome KSystemRatio() {
  Verdict v;
  constexpr std::size_t kRuns = 500;
  constexpr double kEps = 0.3;
  const double p = ps::DefaultP(2, false);
  const double bound = std::pow(1 - kEps, 5) / std::pow(std::sqrt(3.0) + 1, 2);
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t inst = 0; inst < 10; ++inst) {
    const std::size_t n = 10;
    ps::Rng gen(ps::DeriveSeed(66, {inst}));
    std::uniform_int_distribution<int> g3(0, 2), g2(0, 1);
    std::vector<int> la(n), lb(n);
    for (auto& x : la) x = g3(gen);
    for (auto& x : lb) x = g2(gen);
    const std::vector<std::size_t> ca{2, 1, 2}, cb{2, 2};
    auto system = ps::BuildIntersection({ps::BuildPartitionMatroid(la, ca),
                                         ps::BuildPartitionMatroid(lb, cb)});
    const auto graph = ps::SyntheticCutGraph(n, 600 + inst);
    const auto edges = RefEdges(graph);
    ps::CutOracle cut(graph);
    auto feasible = [&](const Set& s) {
      std::vector<std::size_t> a(3), b(2);
      for (auto u : s) {
        ++a[la[u]];
        ++b[lb[u]];
      }
      for (int g = 0; g < 3; ++g) if (a[g] > ca[g]) return false;
      for (int g = 0; g < 2; ++g) if (b[g] > cb[g]) return false;
      return true;
    };
    const auto opt = reftest::BruteForce(
        n, [&](const Set& s) { return reftest::CutValue(edges, s); }, feasible);
    std::vector<double> ratios;
    for (std::size_t r = 0; r < kRuns; ++r) {
      ps::SspConfig c;
      c.p = p;
      c.epsilon = kEps;
      c.seed = ps::DeriveSeed(67, {inst, r});
      ps::Executor exec(Serial());
      const auto sol = ps::ParSsp(c, cut, system, exec);
      const Set s = ToSet(sol.set);
      v.Check(feasible(s), "feasible");
      ratios.push_back(reftest::CutValue(edges, s) / opt.value);
    }
    const auto s = reftest::Summarize(ratios);
    worst = std::min(worst, s.mean);
    v.Check(s.mean >= bound - 3 * s.se, "instance " + std::to_string(inst));
  }
  v.Note(Fmt("worst mean ratio %.4f vs bound %.4f (k=2, p=%.4f)", worst, bound, p));
  return v.Done();
}

// -------------------------------------------------------------- 7

Outcome CardinalityRatio() {
  Verdict v;
  constexpr std::size_t kRuns = 500;
  constexpr double kEps = 0.3;
  const double bound = 0.25 - kEps;
  double worst = std::numeric_limits<double>::infinity();
  auto run = [&](const ps::ValueOracle& oracle, const reftest::SetFn& ref,
                 std::size_t n, std::size_t m, std::uint64_t seed) {
    auto system = ps::BuildCardinality(n, m);
    const auto opt = reftest::BruteForce(
        n, ref, [m](const Set& s) { return s.size() <= m; });
    std::vector<double> ratios;
    for (std::size_t r = 0; r < kRuns; ++r) {
      ps::SspConfig c;
      c.p = ps::DefaultP(1, true);
      c.epsilon = kEps;
      c.seed = ps::DeriveSeed(seed, {r});
      ps::Executor exec(Serial());
      const auto sol = ps::ParSsp(c, oracle, system, exec);
      v.Check(sol.set.size() <= m, "cardinality");
      ratios.push_back(opt.value > 0 ? ref(ToSet(sol.set)) / opt.value : 1.0);
    }
    const auto s = reftest::Summarize(ratios);
    worst = std::min(worst, s.mean);
    v.Check(s.mean >= bound - 3 * s.se, "seed " + std::to_string(seed));
  };
  ps::ModularOracle modular({3, 2, 1});
  run(modular, [](const Set& s) {
        double t = 0;
        for (auto u : s) t += 3.0 - u;
        return t;
      }, 3, 2, 70);
  for (std::uint64_t inst = 0; inst < 8; ++inst) {
    const std::size_t n = 10 + inst % 3;
    const auto graph = ps::SyntheticCutGraph(n, 700 + inst);
    const auto edges = RefEdges(graph);
    ps::CutOracle cut(graph);
    run(cut, [&](const Set& s) { return reftest::CutValue(edges, s); }, n,
        2 + inst % 4, 71 + inst);
  }
  v.Note(Fmt("worst mean ratio %.4f vs bound %.2f", worst, bound));
  return v.Done();
}

// -------------------------------------------------------------- 8

Outcome UsmRatio() {
  Verdict v;
  constexpr std::size_t kRuns = 4000;
  const ps::RandomSubsetUsm usm;
  double worst = std::numeric_limits<double>::infinity();
  auto run = [&](const ps::ValueOracle& oracle, const reftest::SetFn& ref,
                 std::size_t n, const Set& domain, std::uint64_t seed) {
    const auto opt = reftest::BruteForce(n, ref, [&](const Set& s) {
      return std::includes(domain.begin(), domain.end(), s.begin(), s.end());
    });
    std::vector<double> diffs, ratios;
    for (std::size_t r = 0; r < kRuns; ++r) {
      ps::Rng rng(ps::DeriveSeed(seed, {r}));
      ps::Executor exec(Serial());
      const auto out = usm.Solve(ps::ElementSet::FromSorted(domain), oracle, exec, rng);
      const Set s = ToSet(out.set);
      v.Check(std::includes(domain.begin(), domain.end(), s.begin(), s.end()),
              "subset of X");
      const double f = ref(s);
      diffs.push_back(f - opt.value / 4);
      ratios.push_back(opt.value > 0 ? f / opt.value : 1.0);
    }
    const auto d = reftest::Summarize(diffs);
    worst = std::min(worst, reftest::Summarize(ratios).mean);
    v.Check(d.mean >= -3 * d.se, "seed " + std::to_string(seed));
  };
  for (std::uint64_t inst = 0; inst < 4; ++inst) {
    const std::size_t n = 12;
    const auto graph = ps::SyntheticCutGraph(n, 800 + inst);
    const auto edges = RefEdges(graph);
    ps::CutOracle cut(graph);
    const auto fn = [&](const Set& s) { return reftest::CutValue(edges, s); };
    Set all(n);
    std::iota(all.begin(), all.end(), 0u);
    run(cut, fn, n, all, 81 + inst);
    run(cut, fn, n, Set{0, 2, 3, 5, 8, 9, 11}, 91 + inst);

    const auto sim = ps::MovieSimilarity(ps::SyntheticMovies(n, 850 + inst), 2.0);
    const auto ref = RefMatrix(sim);
    ps::MovieOracle movie(sim);
    run(movie, [&](const Set& s) { return reftest::MovieValue(ref, s); }, n, all,
        95 + inst);
  }
  v.Note(Fmt("worst mean f/OPT_X %.4f vs 0.25", worst));
  return v.Done();
}

// -------------------------------------------------------------- 9

Outcome AdaptivityScaling() {
  Verdict v;
  const ps::RandomSubsetUsm usm;
  const std::vector<std::size_t> sizes{100, 400, 1600};
  constexpr std::uint64_t kSeeds = 3;
  // Mean rounds over kSeeds instances per size; B = 5% of the total cost.
  std::vector<double> skp_rounds(sizes.size()), greedy_rounds(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::size_t n = sizes[i];
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
      const auto k = MakeCutKnapsack(n, 9000 + 10 * n + seed, 0.05);
      ps::CutOracle cut(k.graph);
      ps::SkpConfig c;
      c.epsilon = 0.3;
      c.search_mode = ps::SearchMode::kBinary;
      c.seed = 99 + seed;
      ps::Executor exec;
      const auto sol = ps::ParSkp(c, cut, k.costs, usm, exec);
      v.Check(WithinBudget(k.costs.costs, k.costs.budget, ToSet(sol.set)), "budget");
      skp_rounds[i] += static_cast<double>(exec.rounds()) / kSeeds;
      auto knapsack = ps::BuildKnapsack(k.costs);
      ps::Executor gexec;
      ps::DensityGreedy(cut, *knapsack, &k.costs.costs, gexec);
      greedy_rounds[i] += static_cast<double>(gexec.rounds()) / kSeeds;
    }
    v.Note(Fmt("n=%.0f: parskp %.1f rounds, greedy %.1f;", static_cast<double>(n),
               skp_rounds[i], greedy_rounds[i]));
  }
  const double skp_growth = skp_rounds.back() / skp_rounds.front();
  const double greedy_growth = greedy_rounds.back() / greedy_rounds.front();
  v.Check(skp_growth <= 4.0, "parskp growth > 4");
  v.Check(greedy_growth >= 16.0, "greedy growth < 16");
  v.Note(Fmt("growth 100->1600: parskp %.2fx, greedy %.2fx", skp_growth, greedy_growth));
  return v.Done();
}

// -------------------------------------------------------------- 10

Outcome SearchModes() {
  Verdict v;
  for (std::uint64_t run = 0; run < 100; ++run) {
    const std::size_t n = 12;
    const auto k = MakeCutKnapsack(n, 1000 + run, 0.4);
    ps::CutOracle cut(k.graph);
    ps::SystemPtr system;
    std::vector<double> costs = k.costs.costs;
    if (run % 2 == 0) {
      system = ps::BuildKnapsack(k.costs);
    } else {
      std::vector<int> labels(n);
      for (std::size_t u = 0; u < n; ++u) labels[u] = static_cast<int>(u % 3);
      system = ps::BuildPartitionMatroid(labels, {2, 2, 1});
      costs.assign(n, 1.0);
    }
    ps::RandBatchParams params;
    params.rho = 0.2 + 0.02 * static_cast<double>(run % 10);
    params.max_count = 1 + run % 4;
    params.p = run % 3 == 0 ? 1.0 : 0.5;
    params.epsilon = 0.1 + 0.05 * static_cast<double>(run % 5);
    ps::RandBatchResult out[2];
    for (int m = 0; m < 2; ++m) {
      params.search_mode = m == 0 ? ps::SearchMode::kLinear : ps::SearchMode::kBinary;
      ps::Rng rng(ps::DeriveSeed(110, {run}));
      ps::Executor exec;
      out[m] = ps::RandBatch(params, ps::ElementSet::Range(n), cut, costs, *system,
                             exec, rng);
    }
    v.Check(out[0].accepted == out[1].accepted &&
                out[0].considered == out[1].considered &&
                out[0].remaining == out[1].remaining,
            "run " + std::to_string(run));
  }
  return v.Done();
}

// -------------------------------------------------------------- 11

Outcome KParameter() {
  Verdict v;
  for (std::uint64_t inst = 0; inst < 10; ++inst) {
    ps::Rng rng(ps::DeriveSeed(120, {inst}));
    const std::size_t n = 6 + inst % 3;
    std::uniform_int_distribution<int> g3(0, 2), cap(0, 2);
    std::vector<int> la(n), lb(n);
    for (auto& x : la) x = g3(rng);
    for (auto& x : lb) x = g3(rng);
    std::vector<std::size_t> ca(3), cb(3);
    for (auto& c : ca) c = 1 + cap(rng);
    for (auto& c : cb) c = 1 + cap(rng);

    auto part = ps::BuildPartitionMatroid(la, ca);
    auto ref_part = [&](const Set& s) {
      std::vector<std::size_t> a(3);
      for (auto u : s) ++a[la[u]];
      for (int g = 0; g < 3; ++g) if (a[g] > ca[g]) return false;
      return true;
    };
    v.Check(part->k() == 1 && ps::VerifyKParameter(*part, 1) &&
                reftest::KSystemHolds(n, ref_part, 1),
            "partition k=1");

    auto inter = ps::BuildIntersection({part, ps::BuildPartitionMatroid(lb, cb)});
    auto ref_inter = [&](const Set& s) {
      std::vector<std::size_t> a(3), b(3);
      for (auto u : s) {
        ++a[la[u]];
        ++b[lb[u]];
      }
      for (int g = 0; g < 3; ++g) if (a[g] > ca[g] || b[g] > cb[g]) return false;
      return true;
    };
    v.Check(inter->k() == 2 && ps::VerifyKParameter(*inter, 2) &&
                reftest::KSystemHolds(n, ref_inter, 2),
            "intersection k=2");

    // Movies carry one or two of three genres.
    std::vector<std::vector<int>> genres(n);
    std::bernoulli_distribution two(0.4);
    for (auto& g : genres) {
      g = {g3(rng)};
      if (two(rng)) g.push_back((g[0] + 1) % 3);
    }
    const std::size_t total = 2 + inst % 4;
    auto labels = ps::BuildLabelSystem(genres, ca, total);
    auto ref_labels = [&](const Set& s) {
      std::vector<std::size_t> a(3);
      for (auto u : s) for (int g : genres[u]) ++a[g];
      for (int g = 0; g < 3; ++g) if (a[g] > ca[g]) return false;
      return s.size() <= total;
    };
    std::set<int> used;
    for (const auto& g : genres) used.insert(g.begin(), g.end());
    const int k = static_cast<int>(used.size());
    v.Check(labels->k() == k && ps::VerifyKParameter(*labels, k) &&
                reftest::KSystemHolds(n, ref_labels, k),
            "label system k=|G|");
  }
  // The verifier must also refute false claims.
  auto card = ps::BuildCardinality(6, 3);
  v.Check(!ps::VerifyKParameter(*card, 0), "k=0 refuted");
  {
    // Two bases of sizes 1 and 2 inside {0,1,2}: not a 1-system.
    std::vector<int> la{0, 0, 1}, lb{0, 1, 1};
    auto inter = ps::BuildIntersection({ps::BuildPartitionMatroid(la, {1, 1}),
                                        ps::BuildPartitionMatroid(lb, {1, 1})});
    v.Check(!ps::VerifyKParameter(*inter, 1) && ps::VerifyKParameter(*inter, 2),
            "intersection is not a 1-system");
  }
  return v.Done();
}

// -------------------------------------------------------------- 12

Outcome Determinism() {
  Verdict v;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "parsubmod_acceptance";
  fs::create_directories(dir);
  auto read = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  std::vector<ps::ExperimentConfig> configs(3);
  configs[0].problem = "synthetic-cut";
  configs[0].algorithms = {"parskp", "greedy"};
  configs[0].budgets = {3, 6};
  configs[0].synthetic_n = 60;
  configs[1].problem = "revenue";
  configs[1].algorithms = {"parssp", "greedy"};
  configs[1].cardinalities = {3, 6};
  configs[1].synthetic_n = 30;
  configs[1].search_mode = ps::SearchMode::kBinary;
  configs[2].problem = "movie";
  configs[2].algorithms = {"parskp", "greedy"};
  configs[2].budgets = {5};
  configs[2].synthetic_n = 80;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    configs[i].repeats = 3;
    configs[i].seed = 2026 + i;
    std::string first;
    for (int pass = 0; pass < 2; ++pass) {
      auto rows = ps::RunExperiment(configs[i]);
      ps::NormalizeUtilities(rows);
      const fs::path out = dir / ("run" + std::to_string(i) + "_" + std::to_string(pass) + ".csv");
      ps::WriteCsv(rows, out);
      const std::string bytes = read(out);
      if (pass == 0) {
        first = bytes;
        v.Check(!bytes.empty() && bytes.find('\r') == std::string::npos, "LF only");
      } else {
        v.Check(bytes == first, configs[i].problem + " byte-identical");
      }
    }
  }
  fs::remove_all(dir);
  return v.Done();
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "feasibility of every output", Feasibility},
      {2, "submodularity and non-negativity of all oracles", Submodularity},
      {3, "RandBatch density bound E[f(A)] >= (1-eps)^2 rho E[c(A)]", DensityBound},
      {4, "RandBatch leftover bound eps M sum_L f(u|A) <= OPT", LeftoverBound},
      {5, "ParSKP ratio >= 1/8 - eps", KnapsackRatio},
      {6, "ParSSP k-system ratio", KSystemRatio},
      {7, "ParSSP cardinality ratio >= 1/4 - eps", CardinalityRatio},
      {8, "random-subset USM >= OPT/4", UsmRatio},
      {9, "adaptivity scaling of ParSKP vs greedy", AdaptivityScaling},
      {10, "binary and linear search agree", SearchModes},
      {11, "k-system parameter verification", KParameter},
      {12, "deterministic CSV output", Determinism},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL",
                c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
