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

#ifndef PARSUBMOD_PROPERTY_SUITE_H_
#define PARSUBMOD_PROPERTY_SUITE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "parsubmod/constraints.h"
#include "parsubmod/oracle.h"
#include "parsubmod/random.h"

namespace parsubmod {

// Each subset of the ground set with probability 1/2 per element.
ElementSet RandomSubset(std::size_t n, Rng& rng);

// A random independent set: elements offered in random order, each kept
// with probability `keep` when feasible.
ElementSet RandomIndependentSet(const IndependenceSystem& system, Rng& rng,
                                double keep = 0.7);

// Checks f(X) + f(Y) >= f(X ∪ Y) + f(X ∩ Y) - tol and f(X) >= -tol over
// `pairs` random pairs, and that ExtensionValues agrees with Value. Returns
// a description of the first violation.
std::optional<std::string> CheckSubmodular(const ValueOracle& oracle, Rng& rng,
                                           std::size_t pairs,
                                           double tol = 1e-9);

// ∅ independent, and every subset of `samples` random independent sets is
// independent (one random subset each). Returns the first violation.
std::optional<std::string> CheckDownwardClosed(const IndependenceSystem& system,
                                               Rng& rng, std::size_t samples);

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The `verify` command: property checks over every oracle, constraint
// constructor and solver on small random instances.
std::vector<PropertyResult> RunPropertySuite(std::uint64_t seed,
                                             std::ostream& log);

}  // namespace parsubmod

#endif  // PARSUBMOD_PROPERTY_SUITE_H_
