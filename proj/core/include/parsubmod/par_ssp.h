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

#ifndef PARSUBMOD_PAR_SSP_H_
#define PARSUBMOD_PAR_SSP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "parsubmod/constraints.h"
#include "parsubmod/executor.h"
#include "parsubmod/oracle.h"
#include "parsubmod/rand_batch.h"
#include "parsubmod/random.h"
#include "parsubmod/solution.h"

namespace parsubmod {

// Batch acceptance probability: 1/2 for cardinality constraints, otherwise
// 1 / (1 + sqrt(k + 1)).
double DefaultP(int k, bool cardinality);

struct SspConfig {
  std::optional<double> p;  // DefaultP() of the system when unset
  double epsilon = 0.4;     // in (0, 0.4]
  SearchMode search_mode = SearchMode::kLinear;
  std::uint64_t seed = 0;
  std::optional<std::size_t> r_override;
};

// rho_i = rho_max (1-eps)^{i-1} for i = 1..ell, with
// ell = ceil(log_{1-eps}(eps/r)) + 1 and
// M = ceil((log_{1-eps}(eps/r) + 2) / eps^2).
struct ThresholdSchedule {
  double rho_max = 0.0;
  std::size_t phases = 0;     // ell
  std::size_t max_count = 0;  // M
  std::vector<double> thresholds;
};

ThresholdSchedule MakeThresholdSchedule(double rho_max, double epsilon,
                                        std::size_t r);

// Upper bound on the largest feasible cardinality: the override, else the
// system's hint, else k times the size of one random maximal set.
std::size_t EffectiveR(const IndependenceSystem& system, Rng& rng,
                       std::optional<std::size_t> r_override,
                       Executor& executor);

struct SspPhase {
  double rho = 0.0;
  std::size_t candidates_before = 0;
  std::size_t accepted = 0;
};

// k-system constrained maximization with unit costs. Runs RandBatch at
// decreasing thresholds against the shifted oracle f_T and the system
// contracted at T, splicing the accepted batches into T; returns the better
// of T and the best feasible singleton.
Solution ParSsp(const SspConfig& config, const ValueOracle& oracle,
                const SystemPtr& system, Executor& executor,
                std::vector<SspPhase>* trace = nullptr);

}  // namespace parsubmod

#endif  // PARSUBMOD_PAR_SSP_H_
