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

#include "parsubmod/rand_batch.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace parsubmod {

void RandBatchParams::Validate() const {
  if (!(rho > 0.0)) throw InputError("RandBatch: rho must be positive");
  if (max_count < 1) throw InputError("RandBatch: M must be at least 1");
  if (!(p > 0.0 && p <= 1.0)) throw InputError("RandBatch: p must be in (0,1]");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("RandBatch: epsilon must be in (0,1)");
  }
}

std::vector<ElementId> GetSeq(const ElementSet& base,
                              const ElementSet& candidates,
                              const IndependenceSystem& system, Rng& rng,
                              Executor& executor) {
  auto builder = system.NewBuilder(base.ids());
  std::vector<ElementId> sequence;
  std::vector<ElementId> pool(candidates.begin(), candidates.end());
  std::uint64_t checks = 0;
  while (!pool.empty()) {
    std::shuffle(pool.begin(), pool.end(), rng);
    // Feasible prefixes of a downward-closed family form an interval, so the
    // longest feasible prefix ends at the first failure.
    std::size_t s = 0;
    while (s < pool.size()) {
      ++checks;
      if (!builder->CanAdd(pool[s])) break;
      builder->Add(pool[s]);
      sequence.push_back(pool[s]);
      ++s;
    }
    std::vector<ElementId> next;
    // pool[s] just failed against the current set, which is final for it.
    for (std::size_t j = s + 1; j < pool.size(); ++j) {
      ++checks;
      if (builder->CanAdd(pool[j])) next.push_back(pool[j]);
    }
    pool = std::move(next);
  }
  executor.AddIndependenceChecks(checks);
  return sequence;
}

namespace {

struct PrefixScore {
  std::vector<double> gains;  // aligned with L
  double eplus_cost = 0.0;
  double eplus_gain = 0.0;
  double eminus_abs = 0.0;
};

// Scores prefixes G_i = A ∪ {v_1..v_i} of one GetSeq draw.
class PrefixScorer {
 public:
  PrefixScorer(const TStarInput& in, const ValueOracle& oracle,
               std::span<const double> costs,
               const IndependenceSystem& system, Executor& executor)
      : in_(in),
        oracle_(oracle),
        costs_(costs),
        system_(system),
        executor_(executor),
        d_(in.sequence.size()),
        position_(oracle.ground_size(), 0),
        prefix_values_(d_ + 1, 0.0),
        removed_(d_ + 1, 0.0) {
    for (std::size_t j = 0; j < d_; ++j) position_[in.sequence[j]] = j + 1;
    prefix_values_[0] = in.base_value;
    for (ElementId u : in.valuable) cost_l_ += costs_[u];
  }

  std::size_t d() const { return d_; }

  ElementSet Prefix(std::size_t i) const {
    ElementSet g = in_.base;
    g.InsertAll(in_.sequence.first(i));
    return g;
  }

  bool InPrefix(ElementId u, std::size_t i) const {
    return position_[u] > 0 && position_[u] <= i;
  }

  // One adaptive round: optionally all prefix values f(G_1..G_d), plus the
  // extension values f(G_i ∪ {u}) for every requested i.
  void Round(bool with_prefix_values, const std::vector<std::size_t>& wanted) {
    QueryBatch batch;
    std::vector<std::size_t> prefix_slot(d_ + 1, 0);
    if (with_prefix_values) {
      for (std::size_t i = 1; i <= d_; ++i) prefix_slot[i] = batch.Add(Prefix(i));
    }
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::vector<ElementId>> adds_for;
    for (std::size_t i : wanted) {
      std::vector<ElementId> adds;
      for (ElementId u : in_.valuable) {
        if (!InPrefix(u, i)) adds.push_back(u);
      }
      adds_for.push_back(adds);
      slots.emplace_back(i, batch.AddExtensions(Prefix(i), std::move(adds)));
    }
    if (batch.empty()) return;
    const auto values = executor_.SubmitRound(oracle_, batch);

    if (with_prefix_values) {
      for (std::size_t i = 1; i <= d_; ++i) {
        prefix_values_[i] = values[prefix_slot[i]];
      }
      // removed_[i] = Σ_{j<=i} |f(v_j | G_{j-1})| over negative steps.
      for (std::size_t j = 1; j <= d_; ++j) {
        const double step = prefix_values_[j] - prefix_values_[j - 1];
        removed_[j] = removed_[j - 1] + (step < 0.0 ? -step : 0.0);
      }
    }

    for (std::size_t w = 0; w < slots.size(); ++w) {
      const auto [i, offset] = slots[w];
      std::vector<double> extension(in_.valuable.size(), 0.0);
      std::size_t next = offset;
      for (std::size_t k = 0; k < in_.valuable.size(); ++k) {
        if (!InPrefix(in_.valuable[k], i)) extension[k] = values[next++];
      }
      Score(i, extension);
    }
  }

  bool Scored(std::size_t i) const { return scores_.count(i) > 0; }
  const PrefixScore& score(std::size_t i) const { return scores_.at(i); }
  double prefix_value(std::size_t i) const { return prefix_values_[i]; }

  // c(E_i^+) <= (1 - eps) c(L).
  bool CostCondition(std::size_t i) const {
    if (i == d_) return true;
    return score(i).eplus_cost <= (1.0 - in_.epsilon) * cost_l_;
  }

  // eps Σ_{E_i^+} f(u|G_i) <= Σ_{E_i^-} |f(u|G_i)| + Σ_{D_i} |f(v_j|G_{j-1})|.
  bool ValueCondition(std::size_t i) const {
    if (i == d_) return true;
    const auto& s = score(i);
    return in_.epsilon * s.eplus_gain <= s.eminus_abs + removed_[i];
  }

 private:
  void Score(std::size_t i, const std::vector<double>& extension) {
    PrefixScore s;
    s.gains.assign(in_.valuable.size(), 0.0);
    const ElementSet prefix = Prefix(i);
    auto builder = system_.NewBuilder(prefix.ids());
    std::uint64_t checks = 0;
    for (std::size_t k = 0; k < in_.valuable.size(); ++k) {
      const ElementId u = in_.valuable[k];
      if (InPrefix(u, i)) continue;
      const double gain = extension[k] - prefix_values_[i];
      s.gains[k] = gain;
      if (gain < 0.0) s.eminus_abs += -gain;
      if (gain / costs_[u] >= in_.rho) {
        ++checks;
        if (builder->CanAdd(u)) {
          s.eplus_cost += costs_[u];
          s.eplus_gain += gain;
        }
      }
    }
    executor_.AddIndependenceChecks(checks);
    scores_[i] = std::move(s);
  }

  const TStarInput& in_;
  const ValueOracle& oracle_;
  std::span<const double> costs_;
  const IndependenceSystem& system_;
  Executor& executor_;
  std::size_t d_;
  std::vector<std::size_t> position_;
  std::vector<double> prefix_values_;
  std::vector<double> removed_;
  double cost_l_ = 0.0;
  std::map<std::size_t, PrefixScore> scores_;
};

}  // namespace

// At i = d the sequence is maximal, so E_d^+ is empty and both conditions
// hold; the scorer answers them for i = d without queries.
TStarResult FindTStar(const TStarInput& in, const ValueOracle& oracle,
                      std::span<const double> costs,
                      const IndependenceSystem& system, Executor& executor,
                      SearchMode mode) {
  TStarResult result;
  const std::size_t d = in.sequence.size();
  if (d == 0) {
    result.value_at_tstar = in.base_value;
    return result;
  }
  PrefixScorer scorer(in, oracle, costs, system, executor);

  if (mode == SearchMode::kLinear) {
    std::vector<std::size_t> all(d);
    for (std::size_t i = 0; i < d; ++i) all[i] = i;
    scorer.Round(/*with_prefix_values=*/true, all);
    result.t1 = d;
    result.t2 = d;
    for (std::size_t i = 0; i < d; ++i) {
      if (result.t1 == d && scorer.CostCondition(i)) result.t1 = i;
      if (result.t2 == d && scorer.ValueCondition(i)) result.t2 = i;
    }
  } else {
    std::size_t lo1 = 0, hi1 = d, lo2 = 0, hi2 = d;
    bool first = true;
    while (lo1 < hi1 || lo2 < hi2) {
      const std::size_t mid1 = lo1 + (hi1 - lo1) / 2;
      const std::size_t mid2 = lo2 + (hi2 - lo2) / 2;
      std::vector<std::size_t> wanted;
      if (lo1 < hi1 && !scorer.Scored(mid1)) wanted.push_back(mid1);
      if (lo2 < hi2 && !scorer.Scored(mid2) &&
          std::find(wanted.begin(), wanted.end(), mid2) == wanted.end()) {
        wanted.push_back(mid2);
      }
      if (first || !wanted.empty()) scorer.Round(first, wanted);
      first = false;
      if (lo1 < hi1) {
        if (scorer.CostCondition(mid1)) hi1 = mid1; else lo1 = mid1 + 1;
      }
      if (lo2 < hi2) {
        if (scorer.ValueCondition(mid2)) hi2 = mid2; else lo2 = mid2 + 1;
      }
    }
    result.t1 = lo1;
    result.t2 = lo2;
  }

  result.tstar = std::min(result.t1, result.t2);
  result.value_at_tstar = scorer.prefix_value(result.tstar);
  if (scorer.Scored(result.tstar)) {
    result.gains_at_tstar = scorer.score(result.tstar).gains;
  }
  return result;
}

RandBatchResult RandBatch(const RandBatchParams& params,
                          const ElementSet& candidates,
                          const ValueOracle& oracle,
                          std::span<const double> costs,
                          const IndependenceSystem& system, Executor& executor,
                          Rng& rng) {
  params.Validate();
  candidates.CheckRange(oracle.ground_size());
  RandBatchResult out;
  if (candidates.empty()) return out;

  // Initial valuable set w.r.t. A = ∅.
  ElementSet valuable;
  {
    QueryBatch batch;
    const std::size_t empty_slot = batch.Add(ElementSet());
    const std::size_t first = batch.AddExtensions(ElementSet(), candidates.vec());
    const auto values = executor.SubmitRound(oracle, batch);
    out.accepted_value = values[empty_slot];
    auto builder = system.NewBuilder({});
    std::vector<ElementId> kept;
    std::uint64_t checks = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const ElementId u = candidates[k];
      const double gain = values[first + k] - out.accepted_value;
      if (gain / costs[u] < params.rho) continue;
      ++checks;
      if (builder->CanAdd(u)) kept.push_back(u);
    }
    executor.AddIndependenceChecks(checks);
    valuable = ElementSet::FromSorted(std::move(kept));
  }

  std::bernoulli_distribution accept(params.p);
  while (!valuable.empty() && out.count < params.max_count) {
    ++out.iterations;
    const auto sequence =
        GetSeq(out.accepted, valuable, system, rng, executor);
    const TStarInput in{out.accepted, out.accepted_value, valuable, sequence,
                        params.rho, params.epsilon};
    const TStarResult ts =
        FindTStar(in, oracle, costs, system, executor, params.search_mode);
    if (ts.tstar == 0) {
      throw std::logic_error("RandBatch: empty batch with valuable elements");
    }
    const std::span<const ElementId> batch_elems(sequence.data(), ts.tstar);
    out.considered.insert(out.considered.end(), batch_elems.begin(),
                          batch_elems.end());
    const ElementSet drawn =
        ElementSet::FromUnsorted({batch_elems.begin(), batch_elems.end()});

    const bool accepted = params.p >= 1.0 || accept(rng);
    if (!accepted) {
      // A is unchanged, so every other element of L is still valuable.
      valuable = Difference(valuable, drawn);
      continue;
    }

    out.accepted.InsertAll(batch_elems);
    out.accepted_value = ts.value_at_tstar;
    if (ts.t2 < ts.t1) ++out.count;

    // L <- {u in L \ U : f(u|A)/c(u) >= rho and A ∪ {u} independent}.
    auto builder = system.NewBuilder(out.accepted.ids());
    std::uint64_t checks = 0;
    std::vector<ElementId> kept;
    if (ts.gains_at_tstar) {
      const auto& gains = *ts.gains_at_tstar;
      for (std::size_t k = 0; k < valuable.size(); ++k) {
        const ElementId u = valuable[k];
        if (drawn.contains(u) || gains[k] / costs[u] < params.rho) continue;
        ++checks;
        if (builder->CanAdd(u)) kept.push_back(u);
      }
    } else {
      std::vector<ElementId> feasible;
      for (ElementId u : valuable) {
        if (drawn.contains(u)) continue;
        ++checks;
        if (builder->CanAdd(u)) feasible.push_back(u);
      }
      if (!feasible.empty()) {
        QueryBatch batch;
        const std::size_t first = batch.AddExtensions(out.accepted, feasible);
        const auto values = executor.SubmitRound(oracle, batch);
        for (std::size_t k = 0; k < feasible.size(); ++k) {
          const double gain = values[first + k] - out.accepted_value;
          if (gain / costs[feasible[k]] >= params.rho) {
            kept.push_back(feasible[k]);
          }
        }
      }
    }
    executor.AddIndependenceChecks(checks);
    valuable = ElementSet::FromSorted(std::move(kept));
  }
  out.remaining = std::move(valuable);
  return out;
}

}  // namespace parsubmod
