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

#include "parsubmod/datasets.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string_view>
#include <system_error>
#include <utility>

#include "parsubmod/random.h"

namespace parsubmod {
namespace {

namespace fs = std::filesystem;

// Line-oriented reader that tags errors with file:line.
class LineReader {
 public:
  explicit LineReader(const fs::path& path) : path_(path), in_(path) {
    if (!in_) throw InputError("cannot open " + path.string());
  }

  // Next non-empty line, comments included. False at end of file.
  bool Next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw InputError(path_.string() + ":" + std::to_string(line_no_) + ": " +
                     what);
  }

  double ParseDouble(std::string_view s) const {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) {
      Fail("not a number: '" + std::string(s) + "'");
    }
    return v;
  }

  long long ParseInt(std::string_view s) const {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      Fail("not an integer: '" + std::string(s) + "'");
    }
    return v;
  }

  ElementId ParseId(std::string_view s) const {
    const long long v = ParseInt(s);
    if (v < 0 || v > static_cast<long long>(UINT32_MAX)) {
      Fail("id out of range: " + std::string(s));
    }
    return static_cast<ElementId>(v);
  }

 private:
  fs::path path_;
  std::ifstream in_;
  std::size_t line_no_ = 0;
};

std::vector<std::string_view> Split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool IsComment(std::string_view line) { return line.front() == '#'; }

std::string FormatDouble(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

// Dense row ids 0..n-1 in order.
void ExpectId(const LineReader& r, ElementId id, std::size_t expected) {
  if (id != expected) {
    r.Fail("expected id " + std::to_string(expected) + ", got " +
           std::to_string(id));
  }
}

double Round6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

WeightedGraph ReadGraphTsv(const fs::path& path, bool directed) {
  LineReader r(path);
  std::string line;
  std::vector<WeightedEdge> edges;
  std::size_t n = 0;
  bool fixed_n = false;
  while (r.Next(line)) {
    if (IsComment(line)) {
      std::istringstream hdr(line.substr(1));
      std::string key;
      long long count = -1;
      if (hdr >> key >> count && key == "nodes") {
        if (count < 0) r.Fail("negative node count");
        n = static_cast<std::size_t>(count);
        fixed_n = true;
      }
      continue;
    }
    const auto f = Split(line, '\t');
    if (f.size() != 3) r.Fail("expected u<TAB>v<TAB>w");
    WeightedEdge e{r.ParseId(f[0]), r.ParseId(f[1]), r.ParseDouble(f[2])};
    if (e.weight < 0.0) r.Fail("negative weight");
    if (fixed_n && (e.from >= n || e.to >= n)) r.Fail("node id >= declared count");
    if (!fixed_n) n = std::max<std::size_t>(n, std::max(e.from, e.to) + 1);
    edges.push_back(e);
  }
  return directed ? WeightedGraph::Directed(n, std::move(edges))
                  : WeightedGraph::Undirected(n, std::move(edges));
}

void WriteGraphTsv(const fs::path& path, const WeightedGraph& graph) {
  std::ofstream out = OpenOut(path);
  out << "# nodes " << graph.num_nodes() << "\n";
  for (const WeightedEdge& e : graph.edges()) {
    out << e.from << '\t' << e.to << '\t' << FormatDouble(e.weight) << '\n';
  }
}

std::vector<double> ReadCostsCsv(const fs::path& path) {
  LineReader r(path);
  std::string line;
  std::vector<double> costs;
  bool header = true;
  while (r.Next(line)) {
    if (IsComment(line)) continue;
    if (header) {
      header = false;
      if (line != "id,cost") r.Fail("expected header 'id,cost'");
      continue;
    }
    const auto f = Split(line, ',');
    if (f.size() != 2) r.Fail("expected id,cost");
    ExpectId(r, r.ParseId(f[0]), costs.size());
    const double c = r.ParseDouble(f[1]);
    if (!(c > 0.0)) r.Fail("cost must be positive");
    costs.push_back(c);
  }
  return costs;
}

void WriteCostsCsv(const fs::path& path, const std::vector<double>& costs) {
  std::ofstream out = OpenOut(path);
  out << "id,cost\n";
  for (std::size_t u = 0; u < costs.size(); ++u) {
    out << u << ',' << FormatDouble(costs[u]) << '\n';
  }
}

SimilarityMatrix ReadSimilarityCsv(const fs::path& path) {
  LineReader r(path);
  std::string line;
  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t width = 0;
  while (r.Next(line)) {
    if (IsComment(line)) continue;
    const auto f = Split(line, ',');
    if (rows == 0) width = f.size();
    if (f.size() != width) r.Fail("ragged row");
    for (auto s : f) values.push_back(r.ParseDouble(s));
    ++rows;
    if (rows > width) r.Fail("more rows than columns");
  }
  if (rows != width) {
    throw InputError(path.string() + ": matrix is " + std::to_string(rows) +
                     " x " + std::to_string(width) + ", expected square");
  }
  return SimilarityMatrix(rows, std::move(values));
}

void WriteSimilarityCsv(const fs::path& path, const SimilarityMatrix& sim) {
  std::ofstream out = OpenOut(path);
  for (std::size_t u = 0; u < sim.size(); ++u) {
    for (std::size_t v = 0; v < sim.size(); ++v) {
      if (v) out << ',';
      out << FormatDouble(sim(u, v));
    }
    out << '\n';
  }
}

PixelTable ReadPixelsCsv(const fs::path& path) {
  LineReader r(path);
  std::string line;
  PixelTable t;
  bool header = true;
  std::size_t width = 0;
  while (r.Next(line)) {
    if (IsComment(line)) continue;
    const auto f = Split(line, ',');
    if (header) {
      header = false;
      if (f.size() < 3 || f[0] != "id" || f[1] != "category") {
        r.Fail("expected header 'id,category,p1..pK'");
      }
      width = f.size();
      continue;
    }
    if (f.size() != width) r.Fail("wrong number of fields");
    ExpectId(r, r.ParseId(f[0]), t.size());
    const long long cat = r.ParseInt(f[1]);
    if (cat < 0) r.Fail("negative category");
    t.categories.push_back(static_cast<int>(cat));
    std::vector<double> px;
    for (std::size_t j = 2; j < f.size(); ++j) px.push_back(r.ParseDouble(f[j]));
    t.pixels.push_back(std::move(px));
  }
  int max_cat = -1;
  for (int c : t.categories) max_cat = std::max(max_cat, c);
  for (int c = 0; c <= max_cat; ++c) {
    t.category_names.push_back("category" + std::to_string(c));
  }
  return t;
}

void WritePixelsCsv(const fs::path& path, const PixelTable& t) {
  std::ofstream out = OpenOut(path);
  const std::size_t k = t.pixels.empty() ? 0 : t.pixels[0].size();
  out << "id,category";
  for (std::size_t j = 1; j <= k; ++j) out << ",p" << j;
  out << '\n';
  for (std::size_t u = 0; u < t.size(); ++u) {
    out << u << ',' << t.categories[u];
    for (double x : t.pixels[u]) out << ',' << FormatDouble(x);
    out << '\n';
  }
}

FeatureTable ReadFeaturesCsv(const fs::path& path) {
  LineReader r(path);
  std::string line;
  FeatureTable t;
  std::map<std::string, int, std::less<>> genre_index;
  bool header = true;
  while (r.Next(line)) {
    if (IsComment(line)) continue;
    const auto f = Split(line, ',');
    if (header) {
      header = false;
      if (f.size() != 3 + kMovieFeatureDim || f[0] != "id" ||
          f[1] != "rating" || f[2] != "genres") {
        r.Fail("expected header 'id,rating,genres,q1..q25'");
      }
      continue;
    }
    if (f.size() != 3 + kMovieFeatureDim) r.Fail("wrong number of fields");
    ExpectId(r, r.ParseId(f[0]), t.size());
    const double rating = r.ParseDouble(f[1]);
    if (rating < 0.0 || rating > 10.0) r.Fail("rating outside [0, 10]");
    std::vector<int> genres;
    for (auto g : Split(f[2], '|')) {
      if (g.empty()) r.Fail("empty genre label");
      auto it = genre_index.find(g);
      if (it == genre_index.end()) {
        it = genre_index.emplace(std::string(g), static_cast<int>(t.genre_names.size())).first;
        t.genre_names.emplace_back(g);
      }
      genres.push_back(it->second);
    }
    std::vector<double> q;
    for (std::size_t j = 3; j < f.size(); ++j) q.push_back(r.ParseDouble(f[j]));
    t.ratings.push_back(rating);
    t.genres.push_back(std::move(genres));
    t.features.push_back(std::move(q));
  }
  return t;
}

void WriteFeaturesCsv(const fs::path& path, const FeatureTable& t) {
  std::ofstream out = OpenOut(path);
  out << "id,rating,genres";
  for (std::size_t j = 1; j <= kMovieFeatureDim; ++j) out << ",q" << j;
  out << '\n';
  for (std::size_t u = 0; u < t.size(); ++u) {
    out << u << ',' << FormatDouble(t.ratings[u]) << ',';
    for (std::size_t g = 0; g < t.genres[u].size(); ++g) {
      if (g) out << '|';
      out << t.genre_names[t.genres[u][g]];
    }
    for (double x : t.features[u]) out << ',' << FormatDouble(x);
    out << '\n';
  }
}

WeightedGraph SyntheticRevenueGraph(std::size_t n, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, {0x7265}));
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  const std::size_t degree = n > 1 ? std::min<std::size_t>(n - 1, 5) : 0;
  std::vector<WeightedEdge> edges;
  std::vector<ElementId> others;
  for (std::size_t u = 0; u < n; ++u) {
    others.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u) others.push_back(static_cast<ElementId>(v));
    }
    std::shuffle(others.begin(), others.end(), rng);
    for (std::size_t j = 0; j < degree; ++j) {
      edges.push_back({static_cast<ElementId>(u), others[j], Round6(weight(rng))});
    }
  }
  return WeightedGraph::Directed(n, std::move(edges));
}

WeightedGraph SyntheticCutGraph(std::size_t n, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, {0x6375}));
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::vector<WeightedEdge> edges;
  if (n <= 32) {
    std::bernoulli_distribution keep(0.5);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (keep(rng)) {
          edges.push_back({static_cast<ElementId>(u),
                           static_cast<ElementId>(v), Round6(weight(rng))});
        }
      }
    }
  } else {
    // Sparse: each node attaches to 4 uniformly random others.
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t u = 0; u < n; ++u) {
      for (int j = 0; j < 4; ++j) {
        std::size_t v = pick(rng);
        if (v == u) v = (v + 1) % n;
        edges.push_back({static_cast<ElementId>(u), static_cast<ElementId>(v),
                         Round6(weight(rng))});
      }
    }
  }
  return WeightedGraph::Undirected(n, std::move(edges));
}

std::vector<double> SyntheticCutCosts(std::size_t n, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, {0x636f}));
  std::uniform_real_distribution<double> cost(0.1, 1.0);
  std::vector<double> c(n);
  for (double& x : c) x = Round6(cost(rng));
  return c;
}

PixelTable SyntheticPixels(std::size_t n, std::uint64_t seed) {
  constexpr std::size_t kPixels = 64;
  Rng rng(DeriveSeed(seed, {0x696d}));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PixelTable t;
  t.category_names = {"Airplane", "Automobile", "Bird"};
  std::vector<std::vector<double>> prototypes(t.category_names.size());
  for (auto& p : prototypes) {
    p.resize(kPixels);
    for (double& x : p) x = unit(rng);
  }
  std::uniform_int_distribution<int> category(0, 2);
  for (std::size_t u = 0; u < n; ++u) {
    const int c = category(rng);
    // Per-image contrast scale, so pixel standard deviations (costs) vary.
    const double contrast = 0.2 + 0.8 * unit(rng);
    std::normal_distribution<double> noise(0.0, 0.15);
    std::vector<double> px(kPixels);
    for (std::size_t j = 0; j < kPixels; ++j) {
      const double x = 0.5 + contrast * (prototypes[c][j] - 0.5) + noise(rng);
      px[j] = Round6(std::clamp(x, 0.0, 1.0));
    }
    t.categories.push_back(c);
    t.pixels.push_back(std::move(px));
  }
  return t;
}

FeatureTable SyntheticMovies(std::size_t n, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, {0x6d6f}));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 0.15);
  FeatureTable t;
  t.genre_names = {"Adventure", "Animation", "Fantasy"};
  std::vector<std::vector<double>> centers(t.genre_names.size());
  for (auto& c : centers) {
    c.resize(kMovieFeatureDim);
    for (double& x : c) x = 0.3 * unit(rng);
  }
  std::uniform_int_distribution<int> genre(0, 2);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<int> g{genre(rng)};
    if (unit(rng) < 0.3) {
      const int second = genre(rng);
      if (second != g[0]) g.push_back(second);
    }
    std::sort(g.begin(), g.end());
    std::vector<double> q(kMovieFeatureDim, 0.0);
    for (std::size_t j = 0; j < kMovieFeatureDim; ++j) {
      for (int x : g) q[j] += centers[x][j] / static_cast<double>(g.size());
      q[j] = Round6(q[j] + noise(rng));
    }
    t.ratings.push_back(std::round(unit(rng) * 18.0 + 2.0) / 2.0);
    t.genres.push_back(std::move(g));
    t.features.push_back(std::move(q));
  }
  return t;
}

std::vector<fs::path> GenerateSynthetic(const std::string& kind, std::size_t n,
                                        std::uint64_t seed,
                                        const fs::path& out_dir) {
  if (n < 1) throw InputError("gen needs n >= 1");
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw InputError("cannot create " + out_dir.string());
  std::vector<fs::path> written;
  auto path = [&](const char* name) {
    written.push_back(out_dir / name);
    return written.back();
  };
  if (kind == "revenue") {
    WriteGraphTsv(path(kGraphFile), SyntheticRevenueGraph(n, seed));
  } else if (kind == "cut") {
    WriteGraphTsv(path(kGraphFile), SyntheticCutGraph(n, seed));
    WriteCostsCsv(path(kCostsFile), SyntheticCutCosts(n, seed));
  } else if (kind == "image") {
    const PixelTable t = SyntheticPixels(n, seed);
    WritePixelsCsv(path(kPixelsFile), t);
    WriteSimilarityCsv(path(kSimilarityFile), CosineSimilarity(t.pixels));
  } else if (kind == "movie") {
    WriteFeaturesCsv(path(kFeaturesFile), SyntheticMovies(n, seed));
  } else {
    throw InputError("unknown kind '" + kind +
                     "' (expected revenue, cut, image or movie)");
  }
  return written;
}

}  // namespace parsubmod
