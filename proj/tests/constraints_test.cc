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

#include <gtest/gtest.h>

#include <vector>

#include "parsubmod/property_suite.h"
#include "parsubmod/random.h"
#include "support/reference.h"

namespace parsubmod {
namespace {

constexpr ElementId kA = 0, kB = 1, kC = 2;

TEST(KnapsackTest, BudgetComparison) {
  auto s = BuildKnapsack({{1, 1, 1}, 2});
  EXPECT_TRUE(IsIndependent(*s, {0, 1}));
  EXPECT_FALSE(IsIndependent(*s, {0, 1, 2}));
  EXPECT_TRUE(IsIndependent(*s, {}));
  EXPECT_EQ(s->k(), 3);
  EXPECT_FALSE(s->k_bounded());
}

TEST(KnapsackTest, RejectsNonPositiveCostsOrBudget) {
  EXPECT_THROW(BuildKnapsack({{1, 0, 1}, 2}), InputError);
  EXPECT_THROW(BuildKnapsack({{1, -1}, 2}), InputError);
  EXPECT_THROW(BuildKnapsack({{1, 1}, 0}), InputError);
}

TEST(KnapsackTest, BuilderAgreesWithBatchSumAtTheBoundary) {
  // 0.1 + 0.2 + 0.3 != 0.6 in floating point; both paths must accept it.
  const CostModel costs{{0.1, 0.2, 0.3}, 0.6};
  auto s = BuildKnapsack(costs);
  EXPECT_TRUE(IsIndependent(*s, {0, 1, 2}));
  auto b = s->NewBuilder({});
  for (ElementId u : {0u, 1u, 2u}) {
    ASSERT_TRUE(b->CanAdd(u));
    b->Add(u);
  }
}

TEST(CardinalityTest, Examples) {
  auto zero = BuildCardinality(3, 0);
  EXPECT_TRUE(IsIndependent(*zero, {}));
  EXPECT_FALSE(IsIndependent(*zero, {1}));
  auto all = BuildCardinality(3, 3);
  EXPECT_TRUE(IsIndependent(*all, {0, 1, 2}));
  auto two = BuildCardinality(4, 2);
  EXPECT_TRUE(IsIndependent(*two, {1, 3}));
  EXPECT_FALSE(IsIndependent(*two, {0, 1, 3}));
  EXPECT_EQ(two->k(), 1);
  EXPECT_EQ(two->r_hint(), 2u);
  EXPECT_TRUE(two->IsCardinality());
}

TEST(PartitionMatroidTest, Examples) {
  // Groups {a,b} | {c}, caps 1 each.
  auto s = BuildPartitionMatroid({0, 0, 1}, {1, 1});
  EXPECT_TRUE(IsIndependent(*s, {kA, kC}));
  EXPECT_FALSE(IsIndependent(*s, {kA, kB}));
  EXPECT_EQ(s->k(), 1);
  EXPECT_EQ(s->r_hint(), 2u);
  auto truncated = BuildPartitionMatroid({0, 0, 1}, {1, 1}, 1);
  EXPECT_FALSE(IsIndependent(*truncated, {kA, kC}));
  EXPECT_EQ(truncated->r_hint(), 1u);
}

TEST(PartitionMatroidTest, RejectsUnlabeledElements) {
  EXPECT_THROW(BuildPartitionMatroid({0, -1}, {1}), InputError);
  EXPECT_THROW(BuildPartitionMatroid({0, 2}, {1, 1}), InputError);
}

TEST(IntersectionTest, TwoPartitionMatroidsGiveKTwo) {
  auto a = BuildPartitionMatroid({0, 0, 1}, {1, 1});
  auto b = BuildPartitionMatroid({0, 1, 1}, {1, 1});
  auto both = BuildIntersection({a, b});
  EXPECT_EQ(both->k(), 2);
  EXPECT_FALSE(both->k_is_heuristic());
  // {b, c} is independent in a but not in b.
  EXPECT_TRUE(IsIndependent(*a, {kB, kC}));
  EXPECT_FALSE(IsIndependent(*both, {kB, kC}));
  EXPECT_TRUE(IsIndependent(*both, {kA, kC}));
}

TEST(IntersectionTest, FreeSystemIsIdentity) {
  auto a = BuildPartitionMatroid({0, 0, 1}, {1, 1});
  auto with_free = BuildIntersection({a, BuildFreeSystem(3)});
  EXPECT_EQ(with_free->k(), 1);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const auto ids = reftest::FromMask(mask, 3);
    EXPECT_EQ(with_free->IsIndependent(ids), a->IsIndependent(ids));
  }
}

TEST(IntersectionTest, RejectsEmptyListAndFlagsNonMatroids) {
  EXPECT_THROW(BuildIntersection({}), InputError);
  auto labels = BuildLabelSystem({{0, 1}, {1}, {2}}, {1, 1, 1}, 3);
  auto mixed = BuildIntersection({labels, BuildCardinality(3, 2)});
  EXPECT_TRUE(mixed->k_is_heuristic());
  EXPECT_EQ(mixed->k(), 3);
  auto with_knapsack = BuildIntersection({labels, BuildKnapsack({{1, 1, 1}, 2})});
  EXPECT_FALSE(with_knapsack->k_bounded());
}

TEST(LabelSystemTest, Examples) {
  auto three = BuildLabelSystem({{0}, {1}, {2}, {0, 2}}, {2, 2, 2}, 4);
  EXPECT_EQ(three->k(), 3);
  EXPECT_TRUE(IsIndependent(*three, {}));
  auto blocked = BuildLabelSystem({{0, 1}, {1}}, {0, 5}, 2);
  EXPECT_FALSE(IsIndependent(*blocked, {0}));
  EXPECT_FALSE(IsIndependent(*blocked, {0, 1}));
  EXPECT_TRUE(IsIndependent(*blocked, {1}));
  auto capped = BuildLabelSystem({{0}, {0}, {1}}, {5, 5}, 2);
  EXPECT_FALSE(IsIndependent(*capped, {0, 1, 2}));
}

TEST(LabelSystemTest, RejectsMissingLabels) {
  EXPECT_THROW(BuildLabelSystem({{0}, {}}, {1}, 2), InputError);
  EXPECT_THROW(BuildLabelSystem({{0}, {3}}, {1}, 2), InputError);
}

TEST(ContractTest, ViewsTheSystemAboveARoot) {
  auto card = BuildCardinality(5, 3);
  auto view = Contract(card, {0, 1});
  EXPECT_TRUE(IsIndependent(*view, {2}));
  EXPECT_FALSE(IsIndependent(*view, {2, 3}));
  auto b = view->NewBuilder({});
  EXPECT_TRUE(b->CanAdd(4));
  b->Add(4);
  EXPECT_FALSE(b->CanAdd(3));
}

TEST(VerifyKTest, Examples) {
  auto part = BuildPartitionMatroid({0, 0, 1, 1, 2, 2, 2, 0}, {1, 2, 1});
  EXPECT_TRUE(VerifyKParameter(*part, 1));
  auto other = BuildPartitionMatroid({0, 1, 0, 1, 0, 1, 0, 1}, {2, 1});
  auto both = BuildIntersection({part, other});
  EXPECT_TRUE(VerifyKParameter(*both, 2));
  EXPECT_FALSE(VerifyKParameter(*BuildCardinality(4, 2), 0));
  EXPECT_THROW(VerifyKParameter(*BuildCardinality(13, 2), 1), InputError);
}

TEST(VerifyKTest, RefutesFalseClaims) {
  // Y = {0,1,2}: bases {1} and {0,2} have sizes 1 and 2.
  auto both = BuildIntersection({BuildPartitionMatroid({0, 0, 1}, {1, 1}),
                                 BuildPartitionMatroid({0, 1, 1}, {1, 1})});
  EXPECT_FALSE(VerifyKParameter(*both, 1));
  EXPECT_TRUE(VerifyKParameter(*both, 2));
}

TEST(VerifyKTest, AgreesWithIndependentEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> g(0, 2), cap(0, 2);
    const std::size_t n = 7;
    std::vector<int> la(n), lb(n);
    for (auto& x : la) x = g(rng);
    for (auto& x : lb) x = g(rng);
    auto sys = BuildIntersection(
        {BuildPartitionMatroid(la, {std::size_t(cap(rng)), 1, 2}),
         BuildPartitionMatroid(lb, {1, std::size_t(cap(rng)), 1})});
    for (int k = 1; k <= 2; ++k) {
      const bool ref = reftest::KSystemHolds(
          n, [&](const reftest::Set& s) { return sys->IsIndependent(s); }, k);
      EXPECT_EQ(VerifyKParameter(*sys, k), ref) << "seed " << seed << " k " << k;
    }
  }
}

TEST(ConstraintPropertyTest, DownwardClosureAndBuilders) {
  Rng rng(7);
  std::vector<SystemPtr> systems = {
      BuildKnapsack({{0.5, 0.7, 0.2, 0.9, 0.4, 0.3, 0.8, 0.6, 0.1, 0.5}, 1.5}),
      BuildCardinality(10, 4),
      BuildPartitionMatroid({0, 1, 2, 0, 1, 2, 0, 1, 2, 0}, {2, 1, 2}, 4),
      BuildIntersection({BuildCardinality(10, 5),
                         BuildPartitionMatroid({0, 0, 0, 0, 0, 1, 1, 1, 1, 1}, {2, 3})}),
      BuildLabelSystem({{0}, {1}, {2}, {0, 1}, {1, 2}, {0}, {1}, {2}, {0, 2}, {1}},
                       {2, 2, 2}, 5),
      Contract(BuildCardinality(10, 6), {0, 5}),
  };
  // Contracted views are only queried on sets disjoint from the root.
  const ElementSet root{0, 5};
  for (const auto& s : systems) {
    const bool contracted = s == systems.back();
    EXPECT_EQ(CheckDownwardClosed(*s, rng, 1000), std::nullopt) << s->Describe();
    // Builders agree with IsIndependent on random extension chains.
    for (int trial = 0; trial < 100; ++trial) {
      ElementSet x = RandomIndependentSet(*s, rng, 0.5);
      if (contracted) x = Difference(x, root);
      auto b = s->NewBuilder(x.ids());
      for (ElementId u = 0; u < 10; ++u) {
        if (x.contains(u) || (contracted && root.contains(u))) continue;
        EXPECT_EQ(b->CanAdd(u), IsIndependent(*s, x.With(u))) << s->Describe();
      }
    }
  }
}

TEST(ConstraintPropertyTest, DeclaredKHoldsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> g(0, 2);
    std::uniform_int_distribution<std::size_t> cap(0, 3);
    std::vector<int> la(8), lb(8);
    for (auto& x : la) x = g(rng);
    for (auto& x : lb) x = g(rng);
    std::vector<std::vector<int>> labels(8);
    for (auto& l : labels) l = {g(rng), g(rng)};
    const std::vector<SystemPtr> systems = {
        BuildCardinality(8, cap(rng)),
        BuildPartitionMatroid(la, {cap(rng), cap(rng), cap(rng)}),
        BuildPartitionMatroid(la, {cap(rng), cap(rng), cap(rng)}, cap(rng)),
        BuildIntersection({BuildPartitionMatroid(la, {cap(rng), 2, 2}),
                           BuildPartitionMatroid(lb, {1, cap(rng), 2})}),
        BuildLabelSystem(labels, {cap(rng), cap(rng), cap(rng)}, 1 + cap(rng)),
    };
    for (const auto& s : systems) {
      EXPECT_TRUE(VerifyKParameter(*s, s->k())) << s->Describe();
    }
  }
}

}  // namespace
}  // namespace parsubmod
