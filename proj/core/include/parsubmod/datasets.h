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

#ifndef PARSUBMOD_DATASETS_H_
#define PARSUBMOD_DATASETS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "parsubmod/objectives.h"

namespace parsubmod {

// On-disk formats. All ids are 0-based; lines starting with '#' are comments.
//
//   graph.tsv       u<TAB>v<TAB>w per line; an optional "# nodes N" comment
//                   fixes the node count (otherwise max id + 1)
//   costs.csv       header "id,cost"
//   similarity.csv  dense n x n, no header
//   pixels.csv      header "id,category,p1..pK"
//   features.csv    header "id,rating,genres,q1..q25"; genres '|'-separated
//
// Parse failures raise InputError naming the file and line.
inline constexpr char kGraphFile[] = "graph.tsv";
inline constexpr char kCostsFile[] = "costs.csv";
inline constexpr char kSimilarityFile[] = "similarity.csv";
inline constexpr char kPixelsFile[] = "pixels.csv";
inline constexpr char kFeaturesFile[] = "features.csv";

struct PixelTable {
  std::vector<int> categories;
  std::vector<std::vector<double>> pixels;
  std::vector<std::string> category_names;

  std::size_t size() const { return pixels.size(); }
};

WeightedGraph ReadGraphTsv(const std::filesystem::path& path, bool directed);
void WriteGraphTsv(const std::filesystem::path& path,
                   const WeightedGraph& graph);

std::vector<double> ReadCostsCsv(const std::filesystem::path& path);
void WriteCostsCsv(const std::filesystem::path& path,
                   const std::vector<double>& costs);

SimilarityMatrix ReadSimilarityCsv(const std::filesystem::path& path);
void WriteSimilarityCsv(const std::filesystem::path& path,
                        const SimilarityMatrix& sim);

// Category labels are stored as integers; names are not persisted.
PixelTable ReadPixelsCsv(const std::filesystem::path& path);
void WritePixelsCsv(const std::filesystem::path& path, const PixelTable& t);

FeatureTable ReadFeaturesCsv(const std::filesystem::path& path);
void WriteFeaturesCsv(const std::filesystem::path& path,
                      const FeatureTable& t);

// Synthetic stand-ins for the application datasets.
WeightedGraph SyntheticRevenueGraph(std::size_t n, std::uint64_t seed);
WeightedGraph SyntheticCutGraph(std::size_t n, std::uint64_t seed);
std::vector<double> SyntheticCutCosts(std::size_t n, std::uint64_t seed);
PixelTable SyntheticPixels(std::size_t n, std::uint64_t seed);
FeatureTable SyntheticMovies(std::size_t n, std::uint64_t seed);

// Writes the files of `kind` (revenue, cut, image, movie) into `out_dir`,
// creating it if needed. Returns the paths written.
std::vector<std::filesystem::path> GenerateSynthetic(
    const std::string& kind, std::size_t n, std::uint64_t seed,
    const std::filesystem::path& out_dir);

}  // namespace parsubmod

#endif  // PARSUBMOD_DATASETS_H_
