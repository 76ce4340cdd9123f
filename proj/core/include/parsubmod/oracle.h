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

#ifndef PARSUBMOD_ORACLE_H_
#define PARSUBMOD_ORACLE_H_

#include <cstddef>
#include <memory>
#include <span>

#include "parsubmod/element_set.h"

namespace parsubmod {

// A non-negative set function f: 2^N -> R evaluated on canonical sets.
//
// Implementations must be pure and safe for concurrent calls: the executor
// evaluates independent queries of one round from several threads.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual std::size_t ground_size() const = 0;

  // f(set). `set` is sorted and duplicate-free with ids < ground_size().
  virtual double Value(ElementSpan set) const = 0;

  // out[j] = f(base ∪ {adds[j]}). A bulk form of Value() that oracles may
  // specialize with incremental arithmetic; each entry is still one query
  // for accounting purposes. The default calls Value() once per entry.
  virtual void ExtensionValues(ElementSpan base, ElementSpan adds,
                               std::span<double> out) const;
};

// g(Y) = f(T ∪ Y). Keeps a reference to `base`, which must outlive it.
class ShiftedOracle final : public ValueOracle {
 public:
  ShiftedOracle(const ValueOracle& base, ElementSet shift);

  std::size_t ground_size() const override { return base_.ground_size(); }
  double Value(ElementSpan set) const override;
  void ExtensionValues(ElementSpan base, ElementSpan adds,
                       std::span<double> out) const override;

  const ElementSet& shift() const { return shift_; }

 private:
  const ValueOracle& base_;
  ElementSet shift_;
};

}  // namespace parsubmod

#endif  // PARSUBMOD_ORACLE_H_
