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

#ifndef PARSUBMOD_SOLUTION_H_
#define PARSUBMOD_SOLUTION_H_

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "parsubmod/element_set.h"

namespace parsubmod {

struct Solution {
  ElementSet set;
  double value = 0.0;
  std::vector<std::string> warnings;
};

// ceil(x), ignoring floating-point noise just above an integer, so that
// e.g. ceil(1 / 0.1^2) is 100 and not 101.
inline std::size_t CeilTol(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return static_cast<std::size_t>(std::max(0.0, r));
  }
  return static_cast<std::size_t>(std::max(0.0, std::ceil(x)));
}

// log base `base` of x.
inline double LogBase(double base, double x) {
  return std::log(x) / std::log(base);
}

}  // namespace parsubmod

#endif  // PARSUBMOD_SOLUTION_H_
