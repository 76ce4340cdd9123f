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

#ifndef PARSUBMOD_OBJECTIVES_H_
#define PARSUBMOD_OBJECTIVES_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "parsubmod/constraints.h"
#include "parsubmod/element_set.h"
#include "parsubmod/oracle.h"
#include "parsubmod/solution.h"

namespace parsubmod {

struct WeightedEdge {
  ElementId from = 0;
  ElementId to = 0;
  double weight = 0.0;
};

// Compressed adjacency. Parallel arcs are merged by summing their weights.
class WeightedGraph {
 public:
  struct Arc {
    ElementId to;
    double weight;
  };

  WeightedGraph() = default;
  // Arcs u -> v as given.
  static WeightedGraph Directed(std::size_t n, std::vector<WeightedEdge> edges);
  // Each edge {u, v} stored in both directions.
  static WeightedGraph Undirected(std::size_t n,
                                  std::vector<WeightedEdge> edges);

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const Arc> out(ElementId u) const {
    return {arcs_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  double OutWeight(ElementId u) const;
  bool directed() const { return directed_; }
  // Edges after merging, each undirected edge listed once with from < to.
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  static WeightedGraph Build(std::size_t n, std::vector<WeightedEdge> edges,
                             bool directed);
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::vector<WeightedEdge> edges_;
  bool directed_ = true;
};

// Dense n x n matrix, row-major.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t n, std::vector<double> values);

  std::size_t size() const { return n_; }
  double operator()(std::size_t u, std::size_t v) const {
    return values_[u * n_ + v];
  }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

inline constexpr std::size_t kMovieFeatureDim = 25;

struct FeatureTable {
  std::vector<std::vector<double>> features;  // uniform dimension
  std::vector<double> ratings;                // in [0, 10]
  std::vector<std::vector<int>> genres;       // indices into genre_names
  std::vector<std::string> genre_names;

  std::size_t size() const { return features.size(); }
  void Validate() const;
};

// Total weight of edges with exactly one endpoint in S.
class CutOracle final : public ValueOracle {
 public:
  explicit CutOracle(WeightedGraph graph);
  std::size_t ground_size() const override { return graph_.num_nodes(); }
  double Value(ElementSpan set) const override;
  void ExtensionValues(ElementSpan base, ElementSpan adds,
                       std::span<double> out) const override;
  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
};

// Revenue over node x product pairs; element id = product * |V| + node.
// f(S) = Σ_i Σ_{u ∉ S_i} sqrt(Σ_{v ∈ S_i} w_{v,u}).
class RevenueOracle final : public ValueOracle {
 public:
  RevenueOracle(WeightedGraph graph, std::size_t products);
  std::size_t ground_size() const override;
  double Value(ElementSpan set) const override;
  void ExtensionValues(ElementSpan base, ElementSpan adds,
                       std::span<double> out) const override;

  std::size_t num_nodes() const { return graph_.num_nodes(); }
  std::size_t products() const { return products_; }
  ElementId Element(ElementId node, std::size_t product) const {
    return static_cast<ElementId>(product * num_nodes() + node);
  }

 private:
  WeightedGraph graph_;
  std::size_t products_;
};

// Coverage minus diversity penalty:
// f(S) = Σ_{u ∈ N} max_{v ∈ S} s(u,v) - (1/n) Σ_{u,v ∈ S} s(u,v),
// with the max over an empty S taken as 0.
class ImageSummaryOracle final : public ValueOracle {
 public:
  explicit ImageSummaryOracle(SimilarityMatrix similarity);
  std::size_t ground_size() const override { return sim_.size(); }
  double Value(ElementSpan set) const override;
  void ExtensionValues(ElementSpan base, ElementSpan adds,
                       std::span<double> out) const override;

 private:
  SimilarityMatrix sim_;
};

// f(S) = Σ_{u ∈ S} Σ_{v ∈ N} s(u,v) - Σ_{u,v ∈ S} s(u,v).
class MovieOracle final : public ValueOracle {
 public:
  explicit MovieOracle(SimilarityMatrix similarity);
  std::size_t ground_size() const override { return sim_.size(); }
  double Value(ElementSpan set) const override;
  void ExtensionValues(ElementSpan base, ElementSpan adds,
                       std::span<double> out) const override;

 private:
  SimilarityMatrix sim_;
  std::vector<double> row_sums_;
};

// f(S) = Σ_{u ∈ S} w(u). Test objective.
class ModularOracle final : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> weights);
  std::size_t ground_size() const override { return weights_.size(); }
  double Value(ElementSpan set) const override;
  void ExtensionValues(ElementSpan base, ElementSpan adds,
                       std::span<double> out) const override;

 private:
  std::vector<double> weights_;
};

// s(u,v) = exp(-lambda * ||q_u - q_v||).
SimilarityMatrix MovieSimilarity(const FeatureTable& table, double lambda);

// Cosine similarity of row vectors.
SimilarityMatrix CosineSimilarity(
    const std::vector<std::vector<double>>& vectors);

inline constexpr double kCostFloor = 1e-9;
inline constexpr double kDefaultRevenueMu = 0.2;
inline constexpr double kDefaultMovieLambda = 2.0;

// c(u) = 1 - exp(-mu * sqrt(Σ_v w_{u,v})), floored at kCostFloor.
std::vector<double> RevenueCosts(const WeightedGraph& graph, double mu);

// Raw costs 10 - rating, floored, then scaled to mean 1.
std::vector<double> MovieCosts(const FeatureTable& table);

// Raw costs = population standard deviation of each image's pixels, floored,
// then scaled to mean 1.
std::vector<double> ImageCosts(const std::vector<std::vector<double>>& pixels);

// Floors non-positive entries at kCostFloor and rescales to mean 1.
std::vector<double> NormalizeMeanOne(std::vector<double> raw);

// Exhaustive max of f over feasible subsets (independent in `system` when
// given, within budget when `costs` given). Ties go to the first subset in
// bitmask order. Refuses (InputError) ground sets above 20 elements.
Solution BruteForceOpt(const ValueOracle& oracle,
                       const IndependenceSystem* system = nullptr,
                       const CostModel* costs = nullptr);

}  // namespace parsubmod

#endif  // PARSUBMOD_OBJECTIVES_H_
