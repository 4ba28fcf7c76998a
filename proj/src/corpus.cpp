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

#include "lcv/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lcv {
namespace {

std::string edge_label(const std::vector<std::pair<int, int>>& edges) {
  std::string s = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(edges[i].first + 1) + std::to_string(edges[i].second + 1);
  }
  return s + "]";
}

std::vector<std::vector<long>> random_matrix(Rng& rng, int p, int rows, int cols) {
  std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
  for (auto& row : m) {
    for (long& x : row) x = static_cast<long>(rng.below(static_cast<std::uint64_t>(p)));
  }
  return m;
}

std::vector<std::pair<int, int>> complete_graph(int v) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> nonisomorphic_graphs(int vertices) {
  if (vertices < 1 || vertices > 6) throw InvalidArgument("graph enumeration supports 1..6 vertices");
  const auto all = complete_graph(vertices);
  const int m = static_cast<int>(all.size());
  std::vector<std::vector<int>> edge_index(vertices, std::vector<int>(vertices, -1));
  for (int e = 0; e < m; ++e) {
    edge_index[all[e].first][all[e].second] = edge_index[all[e].second][all[e].first] = e;
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<std::pair<int, int>>> out;
  for (Mask g = 0; g < (Mask{1} << m); ++g) {
    bool canonical = true;
    for (const auto& p : perms) {
      Mask image = 0;
      for (int e = 0; e < m; ++e) {
        if (g >> e & 1) image |= Mask{1} << edge_index[p[all[e].first]][p[all[e].second]];
      }
      if (image < g) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e) {
      if (g >> e & 1) edges.push_back(all[e]);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

std::vector<CorpusEntry> matroid_corpus(const MatroidCorpusOptions& options) {
  std::vector<CorpusEntry> base;
  for (const auto& edges : nonisomorphic_graphs(5)) {
    base.push_back({"graph" + edge_label(edges), "graphic", graphic_matroid(5, edges)});
    if (edges.empty() || edges.size() >= 10) continue;
    auto parallel = edges;
    parallel.push_back(edges.front());
    base.push_back({"graph" + edge_label(parallel), "graphic", graphic_matroid(5, parallel)});
    auto looped = edges;
    looped.emplace_back(0, 0);
    base.push_back({"graph" + edge_label(looped), "graphic", graphic_matroid(5, looped)});
  }
  for (int n = 0; n <= options.max_uniform_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      base.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")", "uniform",
                      uniform_matroid(r, n)});
    }
  }
  for (int p : {2, 3}) {
    for (int i = 0; i < options.linear_count_per_field; ++i) {
      Rng rng = Rng::for_item(options.seed * 1000 + p, i);
      const int r = static_cast<int>(rng.between(1, 5));
      const int n = static_cast<int>(rng.between(std::max(r, 2), 11));
      base.push_back({"GF(" + std::to_string(p) + ")#" + std::to_string(i) + ":" +
                          std::to_string(r) + "x" + std::to_string(n),
                      "linear", linear_matroid(p, random_matrix(rng, p, r, n))});
    }
  }
  {
    const std::size_t pool = base.size();
    Rng rng(options.seed * 7919 + 17);
    int made = 0;
    while (made < options.direct_sum_count) {
      const auto& a = base[rng.below(pool)];
      const auto& b = base[rng.below(pool)];
      const int n = a.matroid->ground_size() + b.matroid->ground_size();
      if (a.matroid->ground_size() == 0 || b.matroid->ground_size() == 0 || n > 11) continue;
      base.push_back({a.label + "+" + b.label, "sum", direct_sum({a.matroid, b.matroid})});
      ++made;
    }
  }
  std::vector<CorpusEntry> corpus = base;
  if (options.single_element_minors) {
    for (const auto& entry : base) {
      for (int e = 0; e < entry.matroid->ground_size(); ++e) {
        const std::string tag = std::to_string(e);
        corpus.push_back({entry.label + "\\" + tag, "minor", deletion(entry.matroid, e)});
        corpus.push_back({entry.label + "/" + tag, "minor", contraction(entry.matroid, e)});
      }
    }
  }
  if (options.include_large) {
    Rng rng(options.seed * 104729 + 3);
    corpus.push_back({"K6", "large", graphic_matroid(6, complete_graph(6))});
    corpus.push_back({"Petersen", "large",
                      graphic_matroid(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}})});
    corpus.push_back({"U(6,14)", "large", uniform_matroid(6, 14)});
    corpus.push_back({"U(3,12)", "large", uniform_matroid(3, 12)});
    corpus.push_back({"GF(2):6x14", "large", linear_matroid(2, random_matrix(rng, 2, 6, 14))});
    corpus.push_back({"GF(3):5x13", "large", linear_matroid(3, random_matrix(rng, 3, 5, 13))});
    corpus.push_back({"GF(2):8x16", "large", linear_matroid(2, random_matrix(rng, 2, 8, 16))});
    corpus.push_back({"K4+U(3,6)", "large",
                      direct_sum({graphic_matroid(4, complete_graph(4)), uniform_matroid(3, 6)})});
  }
  return corpus;
}

Json corpus_coverage(const std::vector<CorpusEntry>& corpus) {
  std::map<std::string, int> families;
  std::map<int, int> sizes;
  for (const auto& e : corpus) {
    ++families[e.family];
    ++sizes[e.matroid->ground_size()];
  }
  Json fam = Json::object();
  for (const auto& [k, v] : families) fam[k] = v;
  Json by_size = Json::object();
  for (const auto& [k, v] : sizes) by_size[std::to_string(k)] = v;
  return Json{{"total", corpus.size()},
              {"families", fam},
              {"by_size", by_size},
              {"exhaustive", false},
              {"description",
               "graphic matroids of all simple graphs on 5 vertices with parallel-edge and loop "
               "variants; all uniform matroids up to the size bound; seeded random GF(2) and "
               "GF(3) matroids; seeded direct sums; single-element minors of all of these; "
               "a few matroids on 12-16 elements. A sample, not every matroid of each size."}};
}

}  // namespace lcv
