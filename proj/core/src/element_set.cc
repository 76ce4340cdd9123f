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

#include "parsubmod/element_set.h"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace parsubmod {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(FromUnsorted(std::vector<ElementId>(ids))) {}

ElementSet ElementSet::FromUnsorted(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  ElementSet s;
  s.ids_ = std::move(ids);
  return s;
}

ElementSet ElementSet::FromSorted(std::vector<ElementId> ids) {
  if (std::adjacent_find(ids.begin(), ids.end(),
                         [](ElementId a, ElementId b) { return a >= b; }) !=
      ids.end()) {
    throw std::logic_error("ElementSet::FromSorted: ids not strictly sorted");
  }
  ElementSet s;
  s.ids_ = std::move(ids);
  return s;
}

ElementSet ElementSet::Range(std::size_t n) {
  ElementSet s;
  s.ids_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.ids_[i] = static_cast<ElementId>(i);
  return s;
}

bool ElementSet::contains(ElementId u) const {
  return std::binary_search(ids_.begin(), ids_.end(), u);
}

void ElementSet::Insert(ElementId u) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), u);
  if (it == ids_.end() || *it != u) ids_.insert(it, u);
}

void ElementSet::InsertAll(ElementSpan more) {
  if (more.empty()) return;
  std::vector<ElementId> sorted(more.begin(), more.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ElementId> merged;
  merged.reserve(ids_.size() + sorted.size());
  std::set_union(ids_.begin(), ids_.end(), sorted.begin(), sorted.end(),
                 std::back_inserter(merged));
  ids_ = std::move(merged);
}

ElementSet ElementSet::With(ElementId u) const {
  ElementSet s = *this;
  s.Insert(u);
  return s;
}

void ElementSet::CheckRange(std::size_t n) const {
  if (!ids_.empty() && ids_.back() >= n) {
    throw InputError("element id " + std::to_string(ids_.back()) +
                     " out of range for ground set of size " +
                     std::to_string(n));
  }
}

std::string ElementSet::DebugString() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out << ",";
    out << ids_[i];
  }
  out << "}";
  return out.str();
}

ElementSet Union(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return ElementSet::FromSorted(std::move(out));
}

ElementSet Difference(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ElementSet::FromSorted(std::move(out));
}

ElementSet Intersection(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ElementSet::FromSorted(std::move(out));
}

}  // namespace parsubmod
