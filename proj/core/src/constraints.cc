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

#include "parsubmod/constraints.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace parsubmod {

double CostModel::Total(ElementSpan set) const {
  double total = 0.0;
  for (ElementId u : set) total += costs[u];
  return total;
}

void CostModel::Validate(bool require_affordable) const {
  if (!(budget > 0.0) || !std::isfinite(budget)) {
    throw InputError("budget must be positive and finite");
  }
  for (std::size_t u = 0; u < costs.size(); ++u) {
    if (!(costs[u] > 0.0) || !std::isfinite(costs[u])) {
      throw InputError("cost of element " + std::to_string(u) +
                       " must be positive and finite");
    }
    if (require_affordable && costs[u] > budget) {
      throw InputError("cost of element " + std::to_string(u) +
                       " exceeds the budget");
    }
  }
}

CostModel UnitCosts(std::size_t n, double budget) {
  return CostModel{std::vector<double>(n, 1.0), budget};
}

namespace {

class GenericBuilder final : public FeasibleSetBuilder {
 public:
  GenericBuilder(const IndependenceSystem& system, ElementSpan start)
      : system_(system), current_(start.begin(), start.end()) {}

  bool CanAdd(ElementId u) const override {
    scratch_ = current_;
    scratch_.insert(std::lower_bound(scratch_.begin(), scratch_.end(), u), u);
    return system_.IsIndependent(scratch_);
  }
  void Add(ElementId u) override {
    current_.insert(std::lower_bound(current_.begin(), current_.end(), u), u);
  }

 private:
  const IndependenceSystem& system_;
  std::vector<ElementId> current_;
  mutable std::vector<ElementId> scratch_;
};

// --- knapsack ---------------------------------------------------------------

class KnapsackSystem final : public IndependenceSystem {
 public:
  explicit KnapsackSystem(CostModel costs)
      : IndependenceSystem(costs.size(),
                           static_cast<int>(std::max<std::size_t>(1, costs.size())),
                           SystemKind::kUnbounded, std::nullopt),
        costs_(std::move(costs)) {}

  bool IsIndependent(ElementSpan set) const override {
    return costs_.Affordable(costs_.Total(set));
  }

  class Builder final : public FeasibleSetBuilder {
   public:
    Builder(const CostModel& costs, double start)
        : costs_(costs), total_(start) {}
    bool CanAdd(ElementId u) const override {
      return costs_.Affordable(total_ + costs_(u));
    }
    void Add(ElementId u) override { total_ += costs_(u); }

   private:
    const CostModel& costs_;
    double total_;
  };

  std::unique_ptr<FeasibleSetBuilder> NewBuilder(
      ElementSpan start) const override {
    return std::make_unique<Builder>(costs_, costs_.Total(start));
  }

  std::string Describe() const override {
    std::ostringstream out;
    out << "knapsack(B=" << costs_.budget << ")";
    return out.str();
  }

 private:
  CostModel costs_;
};

// --- cardinality / free -----------------------------------------------------

class CardinalitySystem final : public IndependenceSystem {
 public:
  CardinalitySystem(std::size_t n, std::size_t m)
      : IndependenceSystem(n, 1, SystemKind::kMatroid, std::min(n, m)),
        m_(m) {}

  bool IsIndependent(ElementSpan set) const override {
    return set.size() <= m_;
  }

  class Builder final : public FeasibleSetBuilder {
   public:
    Builder(std::size_t m, std::size_t count) : m_(m), count_(count) {}
    bool CanAdd(ElementId) const override { return count_ + 1 <= m_; }
    void Add(ElementId) override { ++count_; }

   private:
    std::size_t m_;
    std::size_t count_;
  };

  std::unique_ptr<FeasibleSetBuilder> NewBuilder(
      ElementSpan start) const override {
    return std::make_unique<Builder>(m_, start.size());
  }

  bool IsCardinality() const override { return true; }
  std::string Describe() const override {
    return "cardinality(m=" + std::to_string(m_) + ")";
  }

 private:
  std::size_t m_;
};

class FreeSystem final : public IndependenceSystem {
 public:
  explicit FreeSystem(std::size_t n)
      : IndependenceSystem(n, 1, SystemKind::kMatroid, n) {}

  bool IsIndependent(ElementSpan) const override { return true; }

  class Builder final : public FeasibleSetBuilder {
   public:
    bool CanAdd(ElementId) const override { return true; }
    void Add(ElementId) override {}
  };

  std::unique_ptr<FeasibleSetBuilder> NewBuilder(ElementSpan) const override {
    return std::make_unique<Builder>();
  }

  bool IsFree() const override { return true; }
  std::string Describe() const override { return "free"; }
};

// --- label counting (partition matroid and overlapping labels) --------------

// Counts, per label, how many chosen elements carry it, against caps, plus an
// optional cap on the total size.
class LabelCountSystem final : public IndependenceSystem {
 public:
  LabelCountSystem(std::vector<std::vector<int>> labels,
                   std::vector<std::size_t> caps,
                   std::optional<std::size_t> total_cap, int k,
                   SystemKind kind, std::optional<std::size_t> r_hint,
                   std::string name)
      : IndependenceSystem(labels.size(), k, kind, r_hint),
        labels_(std::move(labels)),
        caps_(std::move(caps)),
        total_cap_(total_cap),
        name_(std::move(name)) {}

  bool IsIndependent(ElementSpan set) const override {
    if (total_cap_ && set.size() > *total_cap_) return false;
    std::vector<std::size_t> counts(caps_.size(), 0);
    for (ElementId u : set) {
      for (int g : labels_[u]) {
        if (++counts[g] > caps_[g]) return false;
      }
    }
    return true;
  }

  class Builder final : public FeasibleSetBuilder {
   public:
    Builder(const LabelCountSystem& s, ElementSpan start)
        : s_(s), counts_(s.caps_.size(), 0), size_(0) {
      for (ElementId u : start) Add(u);
    }
    bool CanAdd(ElementId u) const override {
      if (s_.total_cap_ && size_ + 1 > *s_.total_cap_) return false;
      for (int g : s_.labels_[u]) {
        if (counts_[g] + 1 > s_.caps_[g]) return false;
      }
      return true;
    }
    void Add(ElementId u) override {
      for (int g : s_.labels_[u]) ++counts_[g];
      ++size_;
    }

   private:
    const LabelCountSystem& s_;
    std::vector<std::size_t> counts_;
    std::size_t size_;
  };

  std::unique_ptr<FeasibleSetBuilder> NewBuilder(
      ElementSpan start) const override {
    return std::make_unique<Builder>(*this, start);
  }

  std::string Describe() const override { return name_; }

 private:
  std::vector<std::vector<int>> labels_;
  std::vector<std::size_t> caps_;
  std::optional<std::size_t> total_cap_;
  std::string name_;
};

// --- intersection -----------------------------------------------------------

class IntersectionSystem final : public IndependenceSystem {
 public:
  IntersectionSystem(std::vector<SystemPtr> parts, int k, SystemKind kind,
                     std::optional<std::size_t> r_hint, bool heuristic)
      : IndependenceSystem(parts.front()->ground_size(), k, kind, r_hint,
                           heuristic),
        parts_(std::move(parts)) {}

  bool IsIndependent(ElementSpan set) const override {
    for (const auto& p : parts_) {
      if (!p->IsIndependent(set)) return false;
    }
    return true;
  }

  class Builder final : public FeasibleSetBuilder {
   public:
    explicit Builder(std::vector<std::unique_ptr<FeasibleSetBuilder>> parts)
        : parts_(std::move(parts)) {}
    bool CanAdd(ElementId u) const override {
      for (const auto& p : parts_) {
        if (!p->CanAdd(u)) return false;
      }
      return true;
    }
    void Add(ElementId u) override {
      for (auto& p : parts_) p->Add(u);
    }

   private:
    std::vector<std::unique_ptr<FeasibleSetBuilder>> parts_;
  };

  std::unique_ptr<FeasibleSetBuilder> NewBuilder(
      ElementSpan start) const override {
    std::vector<std::unique_ptr<FeasibleSetBuilder>> builders;
    for (const auto& p : parts_) builders.push_back(p->NewBuilder(start));
    return std::make_unique<Builder>(std::move(builders));
  }

  std::string Describe() const override {
    std::string out = "intersection(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ",";
      out += parts_[i]->Describe();
    }
    return out + ")";
  }

 private:
  std::vector<SystemPtr> parts_;
};

// --- contraction ------------------------------------------------------------

class ContractedSystem final : public IndependenceSystem {
 public:
  ContractedSystem(SystemPtr base, ElementSet root)
      : IndependenceSystem(base->ground_size(), base->k(), base->kind(),
                           base->r_hint(), base->k_is_heuristic()),
        base_(std::move(base)),
        root_(std::move(root)) {}

  bool IsIndependent(ElementSpan set) const override {
    if (root_.empty()) return base_->IsIndependent(set);
    std::vector<ElementId> merged;
    merged.reserve(root_.size() + set.size());
    std::set_union(root_.begin(), root_.end(), set.begin(), set.end(),
                   std::back_inserter(merged));
    return base_->IsIndependent(merged);
  }

  std::unique_ptr<FeasibleSetBuilder> NewBuilder(
      ElementSpan start) const override {
    std::vector<ElementId> merged;
    merged.reserve(root_.size() + start.size());
    std::set_union(root_.begin(), root_.end(), start.begin(), start.end(),
                   std::back_inserter(merged));
    return base_->NewBuilder(merged);
  }

  std::string Describe() const override {
    return "contract(" + base_->Describe() + ", |T|=" +
           std::to_string(root_.size()) + ")";
  }

 private:
  SystemPtr base_;
  ElementSet root_;
};

}  // namespace

std::unique_ptr<FeasibleSetBuilder> IndependenceSystem::NewBuilder(
    ElementSpan start) const {
  return std::make_unique<GenericBuilder>(*this, start);
}

SystemPtr BuildKnapsack(CostModel costs) {
  costs.Validate(/*require_affordable=*/false);
  return std::make_shared<KnapsackSystem>(std::move(costs));
}

SystemPtr BuildCardinality(std::size_t n, std::size_t m) {
  return std::make_shared<CardinalitySystem>(n, m);
}

SystemPtr BuildFreeSystem(std::size_t n) {
  return std::make_shared<FreeSystem>(n);
}

SystemPtr BuildPartitionMatroid(std::vector<int> labels,
                                std::vector<std::size_t> caps,
                                std::optional<std::size_t> total_cap) {
  std::vector<std::size_t> group_sizes(caps.size(), 0);
  std::vector<std::vector<int>> as_sets;
  as_sets.reserve(labels.size());
  for (std::size_t u = 0; u < labels.size(); ++u) {
    const int g = labels[u];
    if (g < 0 || static_cast<std::size_t>(g) >= caps.size()) {
      throw InputError("element " + std::to_string(u) +
                       " has no valid partition group");
    }
    ++group_sizes[g];
    as_sets.push_back({g});
  }
  std::size_t rank = 0;
  for (std::size_t g = 0; g < caps.size(); ++g) {
    rank += std::min(caps[g], group_sizes[g]);
  }
  if (total_cap) rank = std::min(rank, *total_cap);
  return std::make_shared<LabelCountSystem>(
      std::move(as_sets), std::move(caps), total_cap, 1, SystemKind::kMatroid,
      rank, "partition_matroid");
}

SystemPtr BuildIntersection(std::vector<SystemPtr> systems) {
  if (systems.empty()) throw InputError("intersection of zero systems");
  const std::size_t n = systems.front()->ground_size();
  bool all_matroids = true;
  bool unbounded = false;
  int matroid_count = 0;
  long long product = 1;
  std::optional<std::size_t> r_hint;
  for (const auto& s : systems) {
    if (!s) throw InputError("null independence system");
    if (s->ground_size() != n) {
      throw InputError("intersected systems have different ground sets");
    }
    if (s->kind() == SystemKind::kUnbounded) unbounded = true;
    if (s->kind() != SystemKind::kMatroid) all_matroids = false;
    // The free matroid adds no constraint.
    if (s->kind() == SystemKind::kMatroid && !s->IsFree()) ++matroid_count;
    product = std::min<long long>(product * s->k(), 1LL << 30);
    if (s->r_hint()) {
      r_hint = r_hint ? std::min(*r_hint, *s->r_hint()) : *s->r_hint();
    }
  }
  if (unbounded) {
    return std::make_shared<IntersectionSystem>(
        std::move(systems), static_cast<int>(std::max<std::size_t>(1, n)),
        SystemKind::kUnbounded, r_hint, false);
  }
  if (all_matroids) {
    const int k = std::max(1, matroid_count);
    return std::make_shared<IntersectionSystem>(
        std::move(systems), k,
        k == 1 ? SystemKind::kMatroid : SystemKind::kKSystem, r_hint, false);
  }
  return std::make_shared<IntersectionSystem>(
      std::move(systems), static_cast<int>(product), SystemKind::kKSystem,
      r_hint, /*heuristic=*/true);
}

SystemPtr BuildLabelSystem(std::vector<std::vector<int>> labels,
                           std::vector<std::size_t> caps,
                           std::size_t total_cap) {
  std::set<int> used;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    auto& l = labels[u];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.empty()) {
      throw InputError("element " + std::to_string(u) + " has no label");
    }
    for (int g : l) {
      if (g < 0 || static_cast<std::size_t>(g) >= caps.size()) {
        throw InputError("element " + std::to_string(u) +
                         " has an unknown label " + std::to_string(g));
      }
      used.insert(g);
    }
  }
  const int k = std::max<int>(1, static_cast<int>(used.size()));
  const std::size_t n = labels.size();
  return std::make_shared<LabelCountSystem>(
      std::move(labels), std::move(caps), total_cap, k,
      k == 1 ? SystemKind::kMatroid : SystemKind::kKSystem,
      std::min(n, total_cap), "label_system");
}

SystemPtr Contract(SystemPtr base, ElementSet root) {
  return std::make_shared<ContractedSystem>(std::move(base), std::move(root));
}

bool VerifyKParameter(const IndependenceSystem& system, int k_claim) {
  const std::size_t n = system.ground_size();
  if (n > 12) {
    throw InputError("VerifyKParameter enumerates 2^n sets; n=" +
                     std::to_string(n) + " exceeds 12");
  }
  if (k_claim < 1) return false;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> independent(full + 1);
  std::vector<ElementId> members;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    members.clear();
    for (std::size_t u = 0; u < n; ++u) {
      if (mask >> u & 1u) members.push_back(static_cast<ElementId>(u));
    }
    independent[mask] = system.IsIndependent(members) ? 1 : 0;
  }
  constexpr int kNone = -1;
  std::vector<int> min_base(full + 1, kNone), max_base(full + 1, kNone);
  for (std::uint32_t x = 0; x <= full; ++x) {
    if (!independent[x]) continue;
    std::uint32_t extendable = 0;
    for (std::size_t u = 0; u < n; ++u) {
      const std::uint32_t bit = 1u << u;
      if (!(x & bit) && independent[x | bit]) extendable |= bit;
    }
    // x is a base of every Y = x ∪ z with z avoiding x and its extensions.
    const std::uint32_t free_bits = full & ~(x | extendable);
    const int size = std::popcount(x);
    for (std::uint32_t z = free_bits;; z = (z - 1) & free_bits) {
      const std::uint32_t y = x | z;
      if (min_base[y] == kNone || size < min_base[y]) min_base[y] = size;
      if (max_base[y] == kNone || size > max_base[y]) max_base[y] = size;
      if (z == 0) break;
    }
  }
  for (std::uint32_t y = 0; y <= full; ++y) {
    if (max_base[y] == kNone) continue;
    if (static_cast<long long>(max_base[y]) >
        static_cast<long long>(k_claim) * min_base[y]) {
      return false;
    }
  }
  return true;
}

}  // namespace parsubmod
