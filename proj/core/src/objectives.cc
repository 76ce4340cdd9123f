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

#include "parsubmod/objectives.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace parsubmod {
namespace {

void CheckSquare(std::size_t n, std::size_t values) {
  if (values != n * n) {
    throw InputError("similarity matrix has " + std::to_string(values) +
                     " entries, expected " + std::to_string(n * n));
  }
}

// Membership bitmap of a canonical set.
std::vector<char> Mask(std::size_t n, ElementSpan set) {
  std::vector<char> m(n, 0);
  for (ElementId u : set) m[u] = 1;
  return m;
}

}  // namespace

WeightedGraph WeightedGraph::Directed(std::size_t n,
                                      std::vector<WeightedEdge> edges) {
  return Build(n, std::move(edges), true);
}

WeightedGraph WeightedGraph::Undirected(std::size_t n,
                                        std::vector<WeightedEdge> edges) {
  return Build(n, std::move(edges), false);
}

WeightedGraph WeightedGraph::Build(std::size_t n,
                                   std::vector<WeightedEdge> edges,
                                   bool directed) {
  for (const WeightedEdge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw InputError("edge endpoint out of range: " +
                       std::to_string(e.from) + " -> " + std::to_string(e.to));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw InputError("edge weight must be finite and non-negative");
    }
  }
  if (!directed) {
    for (WeightedEdge& e : edges) {
      if (e.from > e.to) std::swap(e.from, e.to);
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::pair(a.from, a.to) < std::pair(b.from, b.to);
            });
  std::vector<WeightedEdge> merged;
  for (const WeightedEdge& e : edges) {
    if (!merged.empty() && merged.back().from == e.from &&
        merged.back().to == e.to) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  WeightedGraph g;
  g.directed_ = directed;
  g.offsets_.assign(n + 1, 0);
  for (const WeightedEdge& e : merged) {
    ++g.offsets_[e.from + 1];
    if (!directed && e.from != e.to) ++g.offsets_[e.to + 1];
  }
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
  g.arcs_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const WeightedEdge& e : merged) {
    g.arcs_[fill[e.from]++] = {e.to, e.weight};
    if (!directed && e.from != e.to) g.arcs_[fill[e.to]++] = {e.from, e.weight};
  }
  g.edges_ = std::move(merged);
  return g;
}

double WeightedGraph::OutWeight(ElementId u) const {
  double total = 0.0;
  for (const Arc& a : out(u)) total += a.weight;
  return total;
}

SimilarityMatrix::SimilarityMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  CheckSquare(n_, values_.size());
  for (double v : values_) {
    if (!std::isfinite(v)) throw InputError("similarity entry is not finite");
  }
}

void FeatureTable::Validate() const {
  const std::size_t n = features.size();
  if (ratings.size() != n || genres.size() != n) {
    throw InputError("feature table columns have inconsistent lengths");
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (features[u].size() != features[0].size()) {
      throw InputError("feature vectors must share one dimension (row " +
                       std::to_string(u) + ")");
    }
    if (!(ratings[u] >= 0.0 && ratings[u] <= 10.0)) {
      throw InputError("rating out of [0, 10] at row " + std::to_string(u));
    }
    for (int g : genres[u]) {
      if (g < 0 || static_cast<std::size_t>(g) >= genre_names.size()) {
        throw InputError("unknown genre index at row " + std::to_string(u));
      }
    }
  }
}

// ---------------------------------------------------------------- cut

CutOracle::CutOracle(WeightedGraph graph) : graph_(std::move(graph)) {}

double CutOracle::Value(ElementSpan set) const {
  const std::vector<char> in = Mask(ground_size(), set);
  double total = 0.0;
  for (ElementId u : set) {
    for (const auto& a : graph_.out(u)) {
      if (!in[a.to]) total += a.weight;
    }
  }
  return total;
}

void CutOracle::ExtensionValues(ElementSpan base, ElementSpan adds,
                                std::span<double> out) const {
  const std::vector<char> in = Mask(ground_size(), base);
  double base_value = 0.0;
  for (ElementId u : base) {
    for (const auto& a : graph_.out(u)) {
      if (!in[a.to]) base_value += a.weight;
    }
  }
  for (std::size_t j = 0; j < adds.size(); ++j) {
    const ElementId u = adds[j];
    double v = base_value;
    if (!in[u]) {
      for (const auto& a : graph_.out(u)) {
        if (a.to == u) continue;
        v += in[a.to] ? -a.weight : a.weight;
      }
    }
    out[j] = v;
  }
}

// ------------------------------------------------------------ revenue

RevenueOracle::RevenueOracle(WeightedGraph graph, std::size_t products)
    : graph_(std::move(graph)), products_(products) {
  if (products_ < 1) throw InputError("revenue oracle needs t >= 1 products");
}

std::size_t RevenueOracle::ground_size() const {
  return graph_.num_nodes() * products_;
}

namespace {

// Influence received by each node from the seeds of one product slice.
struct SliceState {
  std::vector<char> seed;
  std::vector<double> inflow;
  double value = 0.0;
};

SliceState MakeSlice(const WeightedGraph& g, ElementSpan set, std::size_t lo,
                     std::size_t hi) {
  const std::size_t nv = g.num_nodes();
  SliceState s;
  s.seed.assign(nv, 0);
  s.inflow.assign(nv, 0.0);
  auto first = std::lower_bound(set.begin(), set.end(), lo);
  auto last = std::lower_bound(first, set.end(), hi);
  for (auto it = first; it != last; ++it) s.seed[*it - lo] = 1;
  for (auto it = first; it != last; ++it) {
    for (const auto& a : g.out(static_cast<ElementId>(*it - lo))) {
      s.inflow[a.to] += a.weight;
    }
  }
  for (std::size_t u = 0; u < nv; ++u) {
    if (!s.seed[u]) s.value += std::sqrt(s.inflow[u]);
  }
  return s;
}

}  // namespace

double RevenueOracle::Value(ElementSpan set) const {
  const std::size_t nv = num_nodes();
  double total = 0.0;
  for (std::size_t i = 0; i < products_; ++i) {
    auto first = std::lower_bound(set.begin(), set.end(), i * nv);
    auto last = std::lower_bound(first, set.end(), (i + 1) * nv);
    if (first == last) continue;
    total += MakeSlice(graph_, set, i * nv, (i + 1) * nv).value;
  }
  return total;
}

void RevenueOracle::ExtensionValues(ElementSpan base, ElementSpan adds,
                                    std::span<double> out) const {
  const std::size_t nv = num_nodes();
  std::vector<SliceState> slices(products_);
  std::vector<char> built(products_, 0);
  double base_value = 0.0;
  for (std::size_t i = 0; i < products_; ++i) {
    auto first = std::lower_bound(base.begin(), base.end(), i * nv);
    auto last = std::lower_bound(first, base.end(), (i + 1) * nv);
    if (first == last) continue;
    slices[i] = MakeSlice(graph_, base, i * nv, (i + 1) * nv);
    built[i] = 1;
    base_value += slices[i].value;
  }
  for (std::size_t j = 0; j < adds.size(); ++j) {
    const std::size_t i = adds[j] / nv;
    const ElementId v = static_cast<ElementId>(adds[j] % nv);
    if (!built[i]) {
      slices[i] = MakeSlice(graph_, {}, i * nv, (i + 1) * nv);
      built[i] = 1;
    }
    const SliceState& s = slices[i];
    if (s.seed[v]) {
      out[j] = base_value;
      continue;
    }
    double delta = -std::sqrt(s.inflow[v]);
    for (const auto& a : graph_.out(v)) {
      if (a.to == v || s.seed[a.to]) continue;
      delta += std::sqrt(s.inflow[a.to] + a.weight) - std::sqrt(s.inflow[a.to]);
    }
    out[j] = base_value + delta;
  }
}

// -------------------------------------------------------------- image

ImageSummaryOracle::ImageSummaryOracle(SimilarityMatrix similarity)
    : sim_(std::move(similarity)) {}

double ImageSummaryOracle::Value(ElementSpan set) const {
  if (set.empty()) return 0.0;
  const std::size_t n = sim_.size();
  double cover = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    double best = -std::numeric_limits<double>::infinity();
    for (ElementId v : set) best = std::max(best, sim_(u, v));
    cover += best;
  }
  double penalty = 0.0;
  for (ElementId u : set) {
    for (ElementId v : set) penalty += sim_(u, v);
  }
  return cover - penalty / static_cast<double>(n);
}

void ImageSummaryOracle::ExtensionValues(ElementSpan base, ElementSpan adds,
                                         std::span<double> out) const {
  const std::size_t n = sim_.size();
  std::vector<double> best(n, -std::numeric_limits<double>::infinity());
  double penalty = 0.0;
  for (ElementId v : base) {
    for (std::size_t u = 0; u < n; ++u) best[u] = std::max(best[u], sim_(u, v));
    for (ElementId w : base) penalty += sim_(v, w);
  }
  const std::vector<char> in = Mask(n, base);
  double base_cover = 0.0;
  if (!base.empty()) {
    for (double b : best) base_cover += b;
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < adds.size(); ++j) {
    const ElementId v = adds[j];
    if (in[v]) {
      out[j] = base_cover - penalty * scale;
      continue;
    }
    double cover = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      cover += base.empty() ? sim_(u, v) : std::max(best[u], sim_(u, v));
    }
    double extra = sim_(v, v);
    for (ElementId w : base) extra += sim_(w, v) + sim_(v, w);
    out[j] = cover - (penalty + extra) * scale;
  }
}

// -------------------------------------------------------------- movie

MovieOracle::MovieOracle(SimilarityMatrix similarity)
    : sim_(std::move(similarity)), row_sums_(sim_.size(), 0.0) {
  const std::size_t n = sim_.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) row_sums_[u] += sim_(u, v);
  }
}

double MovieOracle::Value(ElementSpan set) const {
  double total = 0.0;
  for (ElementId u : set) {
    total += row_sums_[u];
    for (ElementId v : set) total -= sim_(u, v);
  }
  return total;
}

void MovieOracle::ExtensionValues(ElementSpan base, ElementSpan adds,
                                  std::span<double> out) const {
  const double base_value = Value(base);
  const std::vector<char> in = Mask(sim_.size(), base);
  for (std::size_t j = 0; j < adds.size(); ++j) {
    const ElementId v = adds[j];
    if (in[v]) {
      out[j] = base_value;
      continue;
    }
    double delta = row_sums_[v] - sim_(v, v);
    for (ElementId w : base) delta -= sim_(w, v) + sim_(v, w);
    out[j] = base_value + delta;
  }
}

// ------------------------------------------------------------ modular

ModularOracle::ModularOracle(std::vector<double> weights)
    : weights_(std::move(weights)) {}

double ModularOracle::Value(ElementSpan set) const {
  double total = 0.0;
  for (ElementId u : set) total += weights_[u];
  return total;
}

void ModularOracle::ExtensionValues(ElementSpan base, ElementSpan adds,
                                    std::span<double> out) const {
  const double base_value = Value(base);
  for (std::size_t j = 0; j < adds.size(); ++j) {
    const bool present = std::binary_search(base.begin(), base.end(), adds[j]);
    out[j] = base_value + (present ? 0.0 : weights_[adds[j]]);
  }
}

// ------------------------------------------------- similarity & costs

SimilarityMatrix MovieSimilarity(const FeatureTable& table, double lambda) {
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  const std::size_t n = table.size();
  std::vector<double> s(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < table.features[u].size(); ++k) {
        const double d = table.features[u][k] - table.features[v][k];
        d2 += d * d;
      }
      s[u * n + v] = std::exp(-lambda * std::sqrt(d2));
    }
  }
  return SimilarityMatrix(n, std::move(s));
}

SimilarityMatrix CosineSimilarity(
    const std::vector<std::vector<double>>& vectors) {
  const std::size_t n = vectors.size();
  std::vector<double> norms(n);
  for (std::size_t u = 0; u < n; ++u) {
    norms[u] = std::sqrt(std::inner_product(
        vectors[u].begin(), vectors[u].end(), vectors[u].begin(), 0.0));
  }
  std::vector<double> s(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (vectors[u].size() != vectors[v].size()) {
        throw InputError("vectors must share one dimension");
      }
      double dot = std::inner_product(vectors[u].begin(), vectors[u].end(),
                                      vectors[v].begin(), 0.0);
      const double denom = norms[u] * norms[v];
      const double c = denom > 0.0 ? dot / denom : 0.0;
      s[u * n + v] = c;
      s[v * n + u] = c;
    }
  }
  return SimilarityMatrix(n, std::move(s));
}

std::vector<double> RevenueCosts(const WeightedGraph& graph, double mu) {
  if (!(mu > 0.0)) throw InputError("mu must be positive");
  std::vector<double> c(graph.num_nodes());
  for (std::size_t u = 0; u < c.size(); ++u) {
    const double x = std::sqrt(graph.OutWeight(static_cast<ElementId>(u)));
    c[u] = std::max(kCostFloor, 1.0 - std::exp(-mu * x));
  }
  return c;
}

std::vector<double> NormalizeMeanOne(std::vector<double> raw) {
  if (raw.empty()) return raw;
  for (double& c : raw) c = std::max(c, kCostFloor);
  const double mean =
      std::accumulate(raw.begin(), raw.end(), 0.0) / static_cast<double>(raw.size());
  for (double& c : raw) c /= mean;
  return raw;
}

std::vector<double> MovieCosts(const FeatureTable& table) {
  std::vector<double> raw(table.size());
  for (std::size_t u = 0; u < raw.size(); ++u) raw[u] = 10.0 - table.ratings[u];
  return NormalizeMeanOne(std::move(raw));
}

std::vector<double> ImageCosts(const std::vector<std::vector<double>>& pixels) {
  std::vector<double> raw(pixels.size(), 0.0);
  for (std::size_t u = 0; u < pixels.size(); ++u) {
    const auto& p = pixels[u];
    if (p.empty()) continue;
    const double mean =
        std::accumulate(p.begin(), p.end(), 0.0) / static_cast<double>(p.size());
    double var = 0.0;
    for (double x : p) var += (x - mean) * (x - mean);
    raw[u] = std::sqrt(var / static_cast<double>(p.size()));
  }
  return NormalizeMeanOne(std::move(raw));
}

// -------------------------------------------------------- brute force

Solution BruteForceOpt(const ValueOracle& oracle,
                       const IndependenceSystem* system,
                       const CostModel* costs) {
  const std::size_t n = oracle.ground_size();
  if (n > 20) {
    throw InputError("brute force refuses n = " + std::to_string(n) +
                     " (limit 20)");
  }
  Solution best;
  best.value = -std::numeric_limits<double>::infinity();
  std::vector<ElementId> ids;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ids.clear();
    for (std::size_t u = 0; u < n; ++u) {
      if (mask >> u & 1) ids.push_back(static_cast<ElementId>(u));
    }
    if (system != nullptr && !system->IsIndependent(ids)) continue;
    if (costs != nullptr && !costs->Affordable(costs->Total(ids))) continue;
    const double v = oracle.Value(ids);
    if (v > best.value) {
      best.value = v;
      best.set = ElementSet::FromSorted(ids);
    }
  }
  return best;
}

}  // namespace parsubmod
