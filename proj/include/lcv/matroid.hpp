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

// Matroids given by independence oracles on a ground set {0, ..., n-1}
// (bit i of a Mask is element i), and the counting checks built on them:
// independence numbers, ordered partitions into two independent sets, and
// the degree bounds on the bipartite graph between consecutive partition
// levels.

#ifndef LCV_MATROID_HPP_
#define LCV_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "lcv/exact.hpp"
#include "lcv/measure.hpp"
#include "lcv/report.hpp"
#include "lcv/seq.hpp"

namespace lcv {

// Largest ground set for which independent sets are enumerated.
inline constexpr int kMatroidEnumerationCap = 20;

class Matroid {
 public:
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int ground_size() const { return n_; }

  // Throws IndexOutOfRange if x has bits outside the ground set.
  bool is_independent(Mask x) const;

  // independence_table()[x] != 0 iff x is independent. Built on first use
  // by querying the oracle on every subset; CapExceeded above the cap.
  std::span<const std::uint8_t> independence_table() const;

  // Backend descriptor; parses back through matroid_from_json.
  virtual Json describe() const = 0;

 protected:
  explicit Matroid(int n);
  virtual bool independent_impl(Mask x) const = 0;

 private:
  int n_;
  mutable std::once_flag table_once_;
  mutable std::vector<std::uint8_t> table_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

MatroidPtr uniform_matroid(int r, int n);
// Vertices 0..vertices-1; one ground element per edge, in order. Loops and
// parallel edges are allowed.
MatroidPtr graphic_matroid(int vertices, std::vector<std::pair<int, int>> edges);
// Column matroid of an r x n matrix over GF(p); p must be prime.
MatroidPtr linear_matroid(int p, std::vector<std::vector<long>> matrix);
// Parts occupy consecutive blocks of the ground set.
MatroidPtr direct_sum(std::vector<MatroidPtr> parts);
// M / contracted \ deleted, relabelled onto 0..n'-1 in increasing order of
// the surviving parent elements. `contracted` need not be independent.
MatroidPtr minor(MatroidPtr parent, Mask deleted, Mask contracted);
MatroidPtr deletion(MatroidPtr parent, int e);
MatroidPtr contraction(MatroidPtr parent, int e);
// Flips the oracle's answer on the listed sets. Generally not a matroid;
// used as a negative control.
MatroidPtr corrupted(MatroidPtr base, std::vector<Mask> toggled);

int rank(const Matroid& m);
// a_k = number of independent k-sets, k = 0..n.
Seq independence_numbers(const Matroid& m);
// Elements contained in every basis.
Mask coloop_set(const Matroid& m);

// |Pi_i|: ordered partitions (A, B) of the ground set, |A| = i, both
// independent.
Integer pi_count(const Matroid& m, int i);

// For |E| = 2k: (k+1) |Pi_{k-1}| <= k |Pi_k|. OddGroundSet on odd n.
Report partition_app_check(const Matroid& m);

// partition_app_check on every minor M / C restricted to F with |F| = 2k
// and C independent and disjoint from F.
Report matroid_capp_check(const Matroid& m);

// is_capu of the uniform measure on independent sets, renamed.
Report matroid_capu_check(const Matroid& m);

// Weight 1 on the indicator of every independent set.
Measure uniform_independent_measure(const Matroid& m);

Report mason_check(const Matroid& m);
// LC of (a_i / C(n, i)) for i = 0..min(t, n).
Report mason_prefix_check(const Matroid& m, int t);

struct PartitionDegrees {
  int d1 = 0;  // neighbours (C, D) in Pi_{k-1} with C inside A
  int d2 = 0;  // neighbours with C inside B
  Rational neighbor_weight;  // sum over neighbours in G1 u G2 of 1/d(C, D)
};

// `a` is the A side of a pair in Pi_k of a matroid on 2k elements.
// InvalidArgument unless (a, complement) is in Pi_k.
PartitionDegrees partition_degrees(const Matroid& m, Mask a);

// For |E| = 2k with r >= k+2, or r = k+1 and no coloops: every pair of
// Pi_k satisfies 2 <= d_i <= k,
//   w <= (d1/(d2+1) + d2/(d1+1)) / 2,
// and when d1 < d2
//   w <= ((d1-1)/(d1+1) + (d2-d1+1)/(d1+2) + d1/(d2+1)) / 2.
// Vacuous when the rank hypothesis fails.
Report degree_bounds_check(const Matroid& m);

// For |E| = 2k, r = k+1 and each coloop e:
//   |Pi_{k-1}(M)| = |Pi_{k-1}(M \ e)| and |Pi_k(M)| = 2 |Pi_{k-1}(M \ e)|.
// Vacuous when no coloop is present or the rank is not k+1.
Report coloop_identity_check(const MatroidPtr& m);

struct BipartiteGraph {
  int x_count = 0;
  int y_count = 0;
  std::vector<std::pair<int, int>> edges;  // (x, y); duplicates ignored
};

// If every y has sum_{x ~ y} 1/d(x) <= c then |X| <= c |Y|. Vacuous when
// some y breaks the hypothesis; InvalidArgument on an isolated x.
Report graph_weight_check(const BipartiteGraph& g, const Rational& c);

// For 2 <= d1 < d2 <= k <= k_max:
//   ((d1-1)/(d1+1) + (d2-d1+1)/(d1+2) + d1/(d2+1)) / 2 <= d2/(d2+1),
// and for d1 = d2 <= k the symmetric bound equals d1/(d1+1) <= k/(k+1).
// data.violations lists every failing (k, d1, d2) with both sides.
Report degree_bound_sweep(int k_max);

// Exhaustive hereditary and augmentation checks; n <= 12.
Report axioms_check(const Matroid& m);

}  // namespace lcv

#endif  // LCV_MATROID_HPP_
