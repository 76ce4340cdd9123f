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

#include "parsubmod/oracle.h"

#include <algorithm>
#include <iterator>
#include <vector>

namespace parsubmod {

void ValueOracle::ExtensionValues(ElementSpan base, ElementSpan adds,
                                  std::span<double> out) const {
  std::vector<ElementId> scratch;
  scratch.reserve(base.size() + 1);
  for (std::size_t j = 0; j < adds.size(); ++j) {
    const ElementId u = adds[j];
    scratch.assign(base.begin(), base.end());
    auto it = std::lower_bound(scratch.begin(), scratch.end(), u);
    if (it == scratch.end() || *it != u) scratch.insert(it, u);
    out[j] = Value(scratch);
  }
}

ShiftedOracle::ShiftedOracle(const ValueOracle& base, ElementSet shift)
    : base_(base), shift_(std::move(shift)) {
  shift_.CheckRange(base_.ground_size());
}

namespace {

std::vector<ElementId> MergeSorted(ElementSpan a, ElementSpan b) {
  std::vector<ElementId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

double ShiftedOracle::Value(ElementSpan set) const {
  if (shift_.empty()) return base_.Value(set);
  return base_.Value(MergeSorted(shift_.ids(), set));
}

void ShiftedOracle::ExtensionValues(ElementSpan base, ElementSpan adds,
                                    std::span<double> out) const {
  if (shift_.empty()) {
    base_.ExtensionValues(base, adds, out);
    return;
  }
  base_.ExtensionValues(MergeSorted(shift_.ids(), base), adds, out);
}

}  // namespace parsubmod
