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

// A reproducible sample of small matroids. It is not every matroid on any
// ground set size; corpus_coverage() says what it does contain.
//
//   graphic   every simple graph on 5 vertices up to isomorphism (graphs on
//             fewer vertices appear with isolated vertices), plus variants
//             with one parallel edge or one loop, at most 10 edges;
//   uniform   U(r, n) for 0 <= r <= n <= max_uniform_n;
//   linear    random r x n matrices over GF(2) and GF(3), r <= 5, n <= 11;
//   sum       random direct sums of the above with at most 11 elements;
//   minor     every single-element deletion and contraction of the above;
//   large     a handful of matroids on 12-16 elements, excluded from the
//             families above so that exhaustive checks stay at n <= 11.

#ifndef LCV_CORPUS_HPP_
#define LCV_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lcv/matroid.hpp"

namespace lcv {

struct CorpusEntry {
  std::string label;
  std::string family;
  MatroidPtr matroid;
};

struct MatroidCorpusOptions {
  int max_uniform_n = 11;
  int linear_count_per_field = 75;
  int direct_sum_count = 40;
  bool single_element_minors = true;
  bool include_large = true;
  std::uint64_t seed = 1;
};

// Simple graphs on `vertices` <= 6 vertices up to isomorphism, as edge lists
// in lexicographic order.
std::vector<std::vector<std::pair<int, int>>> nonisomorphic_graphs(int vertices);

std::vector<CorpusEntry> matroid_corpus(const MatroidCorpusOptions& options = {});

// {"total", "families": {family: count}, "by_size": {n: count},
//  "exhaustive": false, "description": ...}
Json corpus_coverage(const std::vector<CorpusEntry>& corpus);

}  // namespace lcv

#endif  // LCV_CORPUS_HPP_
