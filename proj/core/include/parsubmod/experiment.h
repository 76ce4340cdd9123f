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

#ifndef PARSUBMOD_EXPERIMENT_H_
#define PARSUBMOD_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parsubmod/constraints.h"
#include "parsubmod/executor.h"
#include "parsubmod/oracle.h"
#include "parsubmod/rand_batch.h"

namespace parsubmod {

// An algorithm produced an infeasible set or misreported its value.
class AssertionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr double kDefaultSkpEpsilon = 0.1;
inline constexpr double kDefaultSspEpsilon = 0.4;

// Experiment-time constraint parameters of the applications.
inline constexpr std::size_t kRevenueKnapsackProducts = 1;
inline constexpr std::size_t kRevenueProducts = 5;
inline constexpr std::size_t kRevenuePerNodeCap = 2;   // q
inline constexpr std::size_t kImagePerCategoryCap = 5;  // q

struct ExperimentConfig {
  std::string problem;                  // revenue|image|movie|synthetic-cut
  std::vector<std::string> algorithms;  // parskp|parssp|usm|greedy|bruteforce
  std::optional<double> epsilon;        // per-algorithm default when unset
  double alpha = 0.25;
  std::optional<double> p;
  std::vector<double> budgets;          // knapsack sweep
  std::vector<std::size_t> cardinalities;  // k-system sweep (m)
  std::size_t repeats = 1;
  std::uint64_t seed = 0;
  SearchMode search_mode = SearchMode::kLinear;
  std::optional<std::filesystem::path> data_dir;
  std::size_t synthetic_n = 100;  // instance size when data_dir is unset
  bool record_time = false;       // wall_ms stays 0 otherwise

  void Validate() const;
};

struct ResultRow {
  std::string algorithm;
  std::string problem;
  std::size_t n = 0;
  double param = 0.0;  // B or m; 0 for unconstrained runs
  std::uint64_t seed = 0;
  RunMetrics metrics;
  double normalized = 0.0;  // filled by NormalizeUtilities
};

// One loaded application instance.
struct Instance {
  std::string problem;
  std::unique_ptr<ValueOracle> oracle;
  // Knapsack costs, one per ground element (only for knapsack instances).
  std::vector<double> costs;
  // The k-system for a cardinality parameter m (only for k-system instances).
  std::function<SystemPtr(std::size_t m)> system_for;
};

// Loads `problem` from `data_dir`, or generates it with `n` and `seed`. The
// knapsack and k-system variants of revenue differ in their ground sets.
Instance BuildInstance(const std::string& problem, bool knapsack,
                       const std::optional<std::filesystem::path>& data_dir,
                       std::size_t n, std::uint64_t seed);

// Runs every (sweep point, repeat, algorithm). Each returned set is checked
// for feasibility and its value recomputed; violations throw
// AssertionFailure. Rows are not yet normalized.
std::vector<ResultRow> RunExperiment(const ExperimentConfig& config);

// normalized = utility / max utility among rows of the same problem and
// param (1 when that max is not positive).
void NormalizeUtilities(std::vector<ResultRow>& rows);

inline constexpr char kCsvHeader[] =
    "algorithm,problem,n,param,seed,utility,rounds,queries,"
    "max_queries_per_round,independence_checks,wall_ms";

void WriteCsv(const std::vector<ResultRow>& rows,
              const std::filesystem::path& path);
std::string FormatCsv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> ReadCsv(const std::filesystem::path& path);

// Per (algorithm, param) means, for console output.
std::string Summarize(const std::vector<ResultRow>& rows);

}  // namespace parsubmod

#endif  // PARSUBMOD_EXPERIMENT_H_
