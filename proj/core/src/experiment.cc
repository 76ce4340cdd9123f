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

#include "parsubmod/experiment.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "parsubmod/datasets.h"
#include "parsubmod/greedy.h"
#include "parsubmod/objectives.h"
#include "parsubmod/par_skp.h"
#include "parsubmod/par_ssp.h"
#include "parsubmod/random.h"
#include "parsubmod/usm.h"

namespace parsubmod {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string>& KnownProblems() {
  static const std::vector<std::string> kProblems = {"revenue", "image",
                                                     "movie", "synthetic-cut"};
  return kProblems;
}

const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> kAlgorithms = {
      "parskp", "parssp", "usm", "greedy", "bruteforce"};
  return kAlgorithms;
}

bool Contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string FormatParam(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

fs::path Require(const fs::path& dir, const char* name) {
  fs::path p = dir / name;
  if (!fs::exists(p)) throw InputError("missing data file " + p.string());
  return p;
}

// Every element belongs to exactly one group of a caps-uniform partition.
SystemPtr UniformPartition(std::vector<int> labels, std::size_t groups,
                           std::size_t cap,
                           std::optional<std::size_t> total = {}) {
  return BuildPartitionMatroid(std::move(labels),
                               std::vector<std::size_t>(groups, cap), total);
}

std::size_t MaxLabel(const std::vector<int>& labels) {
  int m = -1;
  for (int l : labels) m = std::max(m, l);
  return static_cast<std::size_t>(m + 1);
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (!Contains(KnownProblems(), problem)) {
    throw InputError("unknown problem '" + problem +
                     "' (expected revenue, image, movie or synthetic-cut)");
  }
  if (algorithms.empty()) throw InputError("no algorithm given");
  for (const auto& a : algorithms) {
    if (!Contains(KnownAlgorithms(), a)) {
      throw InputError("unknown algorithm '" + a +
                       "' (expected parskp, parssp, usm, greedy or bruteforce)");
    }
  }
  if (repeats < 1) throw InputError("repeats must be >= 1");
  if (!budgets.empty() && !cardinalities.empty()) {
    throw InputError("give either budgets or cardinalities, not both");
  }
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (!(budgets[i] > 0.0) || (i > 0 && budgets[i] <= budgets[i - 1])) {
      throw InputError("budgets must be positive and increasing");
    }
  }
  for (std::size_t i = 0; i < cardinalities.size(); ++i) {
    if (cardinalities[i] < 1 ||
        (i > 0 && cardinalities[i] <= cardinalities[i - 1])) {
      throw InputError("cardinalities must be positive and increasing");
    }
  }
  const bool constrained = !budgets.empty() || !cardinalities.empty();
  for (const auto& a : algorithms) {
    if (a == "usm" && constrained) {
      throw InputError("usm is unconstrained; drop --budget/--m");
    }
    if (a != "usm" && !constrained) {
      throw InputError(a + " needs --budget or --m");
    }
    if (a == "parssp" && !budgets.empty()) {
      throw InputError("parssp takes --m, not --budget");
    }
    if (a == "parskp" && !cardinalities.empty() && problem != "synthetic-cut") {
      throw InputError("parskp takes --budget (--m only for synthetic-cut)");
    }
  }
  if (epsilon && !(*epsilon > 0.0 && *epsilon < 1.0)) {
    throw InputError("epsilon must be in (0, 1)");
  }
  if (p && !(*p > 0.0 && *p <= 1.0)) throw InputError("p must be in (0, 1]");
  if (!data_dir && synthetic_n < 1) throw InputError("n must be >= 1");
}

Instance BuildInstance(const std::string& problem, bool knapsack,
                       const std::optional<fs::path>& data_dir, std::size_t n,
                       std::uint64_t seed) {
  Instance inst;
  inst.problem = problem;
  if (problem == "revenue") {
    WeightedGraph g = data_dir ? ReadGraphTsv(Require(*data_dir, kGraphFile), true)
                               : SyntheticRevenueGraph(n, seed);
    const std::size_t nodes = g.num_nodes();
    if (knapsack) {
      inst.costs = RevenueCosts(g, kDefaultRevenueMu);
      inst.oracle = std::make_unique<RevenueOracle>(std::move(g),
                                                    kRevenueKnapsackProducts);
    } else {
      inst.oracle =
          std::make_unique<RevenueOracle>(std::move(g), kRevenueProducts);
      inst.system_for = [nodes](std::size_t m) {
        const std::size_t total = nodes * kRevenueProducts;
        std::vector<int> by_node(total), by_product(total);
        for (std::size_t e = 0; e < total; ++e) {
          by_node[e] = static_cast<int>(e % nodes);
          by_product[e] = static_cast<int>(e / nodes);
        }
        return BuildIntersection(
            {UniformPartition(std::move(by_node), nodes, kRevenuePerNodeCap),
             UniformPartition(std::move(by_product), kRevenueProducts, m)});
      };
    }
  } else if (problem == "image") {
    PixelTable px = data_dir ? ReadPixelsCsv(Require(*data_dir, kPixelsFile))
                             : SyntheticPixels(n, seed);
    SimilarityMatrix sim;
    if (data_dir && fs::exists(*data_dir / kSimilarityFile)) {
      sim = ReadSimilarityCsv(*data_dir / kSimilarityFile);
      if (sim.size() != px.size()) {
        throw InputError("similarity.csv and pixels.csv disagree on n");
      }
    } else {
      sim = CosineSimilarity(px.pixels);
    }
    inst.oracle = std::make_unique<ImageSummaryOracle>(std::move(sim));
    if (knapsack) {
      inst.costs = ImageCosts(px.pixels);
    } else {
      inst.system_for = [cats = px.categories](std::size_t m) {
        return UniformPartition(cats, MaxLabel(cats), kImagePerCategoryCap, m);
      };
    }
  } else if (problem == "movie") {
    FeatureTable t = data_dir ? ReadFeaturesCsv(Require(*data_dir, kFeaturesFile))
                              : SyntheticMovies(n, seed);
    t.Validate();
    inst.oracle = std::make_unique<MovieOracle>(
        MovieSimilarity(t, kDefaultMovieLambda));
    if (knapsack) {
      inst.costs = MovieCosts(t);
    } else {
      inst.system_for = [genres = t.genres,
                         count = t.genre_names.size()](std::size_t m) {
        // Per-genre caps m_g = ceil(m / 2) alongside |S| <= m.
        return BuildLabelSystem(genres,
                                std::vector<std::size_t>(count, (m + 1) / 2), m);
      };
    }
  } else if (problem == "synthetic-cut") {
    WeightedGraph g = data_dir ? ReadGraphTsv(Require(*data_dir, kGraphFile), false)
                               : SyntheticCutGraph(n, seed);
    const std::size_t nodes = g.num_nodes();
    if (knapsack) {
      inst.costs = data_dir ? ReadCostsCsv(Require(*data_dir, kCostsFile))
                            : SyntheticCutCosts(nodes, seed);
      if (inst.costs.size() != nodes) {
        throw InputError("costs.csv and graph.tsv disagree on n");
      }
    } else {
      inst.system_for = [nodes](std::size_t m) {
        return BuildCardinality(nodes, m);
      };
    }
    inst.oracle = std::make_unique<CutOracle>(std::move(g));
  } else {
    throw InputError("unknown problem '" + problem + "'");
  }
  return inst;
}

std::vector<ResultRow> RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  const bool knapsack = !config.budgets.empty();
  const bool unconstrained = config.budgets.empty() && config.cardinalities.empty();
  // Unconstrained runs use the knapsack-form objective without its costs.
  const Instance inst = BuildInstance(config.problem, knapsack || unconstrained,
                                      config.data_dir, config.synthetic_n,
                                      config.seed);
  const ValueOracle& oracle = *inst.oracle;
  const std::size_t n = oracle.ground_size();

  std::vector<double> params;
  if (knapsack) params = config.budgets;
  for (std::size_t m : config.cardinalities) params.push_back(static_cast<double>(m));
  if (unconstrained) params.push_back(0.0);

  if (knapsack) {
    const double max_cost =
        inst.costs.empty() ? 0.0 : *std::max_element(inst.costs.begin(), inst.costs.end());
    if (max_cost > config.budgets.front() * (1.0 + kBudgetSlack)) {
      throw InputError("budget " + FormatParam(config.budgets.front()) +
                       " is below the largest element cost " +
                       FormatParam(max_cost));
    }
  }

  const RandomSubsetUsm usm;
  std::vector<ResultRow> rows;
  for (std::size_t s = 0; s < params.size(); ++s) {
    CostModel costs;
    SystemPtr system;
    if (knapsack) {
      costs = CostModel{inst.costs, params[s]};
      system = BuildKnapsack(costs);
    } else if (!unconstrained) {
      const auto m = static_cast<std::size_t>(params[s]);
      system = inst.system_for(m);
      costs = UnitCosts(n, params[s]);
    }
    for (std::size_t r = 0; r < config.repeats; ++r) {
      const std::uint64_t run_seed = DeriveSeed(config.seed, {s, r});
      for (const std::string& algo : config.algorithms) {
        Executor exec;
        const auto start = std::chrono::steady_clock::now();
        Solution sol;
        if (algo == "parskp") {
          SkpConfig c;
          c.alpha = config.alpha;
          c.epsilon = config.epsilon.value_or(kDefaultSkpEpsilon);
          c.search_mode = config.search_mode;
          c.seed = run_seed;
          // Under a cardinality sweep the knapsack has unit costs, B = m.
          sol = ParSkp(c, oracle, costs, usm, exec);
        } else if (algo == "parssp") {
          SspConfig c;
          c.p = config.p;
          c.epsilon = config.epsilon.value_or(kDefaultSspEpsilon);
          c.search_mode = config.search_mode;
          c.seed = run_seed;
          sol = ParSsp(c, oracle, system, exec);
        } else if (algo == "usm") {
          Rng rng(run_seed);
          UsmResult u = usm.Solve(ElementSet::Range(n), oracle, exec, rng);
          sol = Solution{std::move(u.set), u.value, {}};
        } else if (algo == "greedy") {
          sol = DensityGreedy(oracle, *system, knapsack ? &inst.costs : nullptr,
                              exec);
        } else {  // bruteforce
          sol = BruteForceOpt(oracle, system.get());
        }
        const auto elapsed = std::chrono::steady_clock::now() - start;

        if (system && !IsIndependent(*system, sol.set)) {
          throw AssertionFailure(algo + " returned an infeasible set " +
                                 sol.set.DebugString());
        }
        const double value = oracle.Value(sol.set.ids());
        if (std::abs(value - sol.value) > 1e-6 * std::max(1.0, std::abs(value))) {
          throw AssertionFailure(algo + " reported value " +
                                 FormatParam(sol.value) + " but f(S) = " +
                                 FormatParam(value));
        }
        ResultRow row;
        row.algorithm = algo;
        row.problem = config.problem;
        row.n = n;
        row.param = params[s];
        row.seed = run_seed;
        row.metrics = exec.Snapshot();
        row.metrics.utility = value;
        if (config.record_time) {
          row.metrics.wall_ms =
              std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void NormalizeUtilities(std::vector<ResultRow>& rows) {
  std::map<std::pair<std::string, double>, double> best;
  for (const ResultRow& r : rows) {
    auto [it, inserted] = best.emplace(std::pair(r.problem, r.param), r.metrics.utility);
    if (!inserted) it->second = std::max(it->second, r.metrics.utility);
  }
  for (ResultRow& r : rows) {
    const double b = best.at({r.problem, r.param});
    r.normalized = b > 0.0 ? std::max(0.0, r.metrics.utility / b) : 1.0;
  }
}

std::string FormatCsv(const std::vector<ResultRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  char utility[64];
  for (const ResultRow& r : rows) {
    std::snprintf(utility, sizeof(utility), "%.6f", r.metrics.utility);
    out += r.algorithm + ',' + r.problem + ',' + std::to_string(r.n) + ',' +
           FormatParam(r.param) + ',' + std::to_string(r.seed) + ',' + utility +
           ',' + std::to_string(r.metrics.rounds) + ',' +
           std::to_string(r.metrics.queries) + ',' +
           std::to_string(r.metrics.max_queries_per_round) + ',' +
           std::to_string(r.metrics.independence_checks) + ',' +
           std::to_string(r.metrics.wall_ms) + '\n';
  }
  return out;
}

void WriteCsv(const std::vector<ResultRow>& rows, const fs::path& path) {
  if (rows.empty()) throw InputError("no rows to write");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << FormatCsv(rows);
  if (!out) throw InputError("write failed: " + path.string());
}

std::vector<ResultRow> ReadCsv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw InputError(path.string() + ":1: unexpected header");
  }
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 11) {
      throw InputError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 11 fields");
    }
    try {
      ResultRow r;
      r.algorithm = f[0];
      r.problem = f[1];
      r.n = std::stoull(f[2]);
      r.param = std::stod(f[3]);
      r.seed = std::stoull(f[4]);
      r.metrics.utility = std::stod(f[5]);
      r.metrics.rounds = std::stoull(f[6]);
      r.metrics.queries = std::stoull(f[7]);
      r.metrics.max_queries_per_round = std::stoull(f[8]);
      r.metrics.independence_checks = std::stoull(f[9]);
      r.metrics.wall_ms = std::stoll(f[10]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw InputError(path.string() + ":" + std::to_string(line_no) +
                       ": malformed number");
    }
  }
  return rows;
}

std::string Summarize(const std::vector<ResultRow>& rows) {
  struct Acc {
    double utility = 0, normalized = 0, rounds = 0, queries = 0;
    std::size_t count = 0;
  };
  std::vector<std::pair<std::string, double>> order;
  std::map<std::pair<std::string, double>, Acc> acc;
  for (const ResultRow& r : rows) {
    const auto key = std::pair(r.algorithm, r.param);
    if (!acc.count(key)) order.push_back(key);
    Acc& a = acc[key];
    a.utility += r.metrics.utility;
    a.normalized += r.normalized;
    a.rounds += static_cast<double>(r.metrics.rounds);
    a.queries += static_cast<double>(r.metrics.queries);
    ++a.count;
  }
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-10s %10s %14s %10s %10s %12s\n",
                "algorithm", "param", "utility", "normalized", "rounds",
                "queries");
  out << buf;
  for (const auto& key : order) {
    const Acc& a = acc.at(key);
    const double c = static_cast<double>(a.count);
    std::snprintf(buf, sizeof(buf), "%-10s %10s %14.4f %10.4f %10.1f %12.1f\n",
                  key.first.c_str(), FormatParam(key.second).c_str(),
                  a.utility / c, a.normalized / c, a.rounds / c, a.queries / c);
    out << buf;
  }
  return out.str();
}

}  // namespace parsubmod
