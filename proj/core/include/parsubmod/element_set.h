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

#ifndef PARSUBMOD_ELEMENT_SET_H_
#define PARSUBMOD_ELEMENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parsubmod {

// Elements of the ground set are dense ids 0..n-1.
using ElementId = std::uint32_t;
using ElementSpan = std::span<const ElementId>;

// Raised for malformed user input: out-of-range ids, invalid parameters,
// unparsable data files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set of elements kept in canonical (sorted, duplicate-free) form, so two
// equal sets always have identical representations.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);

  static ElementSet FromUnsorted(std::vector<ElementId> ids);
  // `ids` must already be strictly increasing.
  static ElementSet FromSorted(std::vector<ElementId> ids);
  // {0, 1, ..., n-1}.
  static ElementSet Range(std::size_t n);

  bool contains(ElementId u) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  ElementSpan ids() const { return ids_; }
  const std::vector<ElementId>& vec() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  ElementId operator[](std::size_t i) const { return ids_[i]; }

  void Insert(ElementId u);
  void InsertAll(ElementSpan more);
  ElementSet With(ElementId u) const;

  // Throws InputError if some id is >= n.
  void CheckRange(std::size_t n) const;

  std::string DebugString() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<ElementId> ids_;
};

ElementSet Union(const ElementSet& a, const ElementSet& b);
ElementSet Difference(const ElementSet& a, const ElementSet& b);
ElementSet Intersection(const ElementSet& a, const ElementSet& b);

}  // namespace parsubmod

#endif  // PARSUBMOD_ELEMENT_SET_H_
