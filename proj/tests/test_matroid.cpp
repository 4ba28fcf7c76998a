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

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lcv/corpus.hpp"
#include "lcv/matroid.hpp"

using namespace lcv;

namespace {

using Edges = std::vector<std::pair<int, int>>;

// A set of edges is a forest iff every nonempty subset S of it touches at
// least |S| + 1 vertices.
bool brute_forest(const Edges& edges, Mask x) {
  for (Mask s = x; s != 0; s = (s - 1) & x) {
    std::set<int> touched;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (s >> e & 1) {
        touched.insert(edges[e].first);
        touched.insert(edges[e].second);
      }
    }
    if (static_cast<int>(touched.size()) < popcount(s) + 1) return false;
  }
  return true;
}

// Columns are dependent iff some nonzero coefficient vector kills them.
bool brute_linear_independent(int p, const std::vector<std::vector<long>>& a, Mask x) {
  std::vector<int> cols;
  for (int c = 0; c < static_cast<int>(a[0].size()); ++c) {
    if (x >> c & 1) cols.push_back(c);
  }
  long combos = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) combos *= p;
  for (long code = 1; code < combos; ++code) {
    std::vector<long> coef;
    for (long v = code, i = 0; i < static_cast<long>(cols.size()); ++i, v /= p) coef.push_back(v % p);
    bool zero = true;
    for (const auto& row : a) {
      long s = 0;
      for (std::size_t i = 0; i < cols.size(); ++i) s += coef[i] * (((row[cols[i]] % p) + p) % p);
      if (s % p) {
        zero = false;
        break;
      }
    }
    if (zero) return false;
  }
  return true;
}

int brute_rank_of(const Matroid& m, Mask s) {
  int best = 0;
  for (Mask x = s;; x = (x - 1) & s) {
    if (m.is_independent(x)) best = std::max(best, popcount(x));
    if (x == 0) break;
  }
  return best;
}

long brute_pi(const Matroid& m, int i) {
  const Mask all = full_mask(m.ground_size());
  long c = 0;
  for (Mask a = 0; a <= all; ++a) {
    if (popcount(a) == i && m.is_independent(a) && m.is_independent(all ^ a)) ++c;
  }
  return c;
}

struct BruteDegrees {
  int d1 = 0, d2 = 0;
  Rational w;
};

// Neighbours of a Pi_{k-1} pair (c, d) in Pi_k: move one y from d into c,
// or make c the B side and d - y the A side.
std::set<std::pair<Mask, Mask>> up_neighbours(const Matroid& m, Mask c, Mask d) {
  std::set<std::pair<Mask, Mask>> out;
  for (int y = 0; y < m.ground_size(); ++y) {
    const Mask b = Mask{1} << y;
    if (!(d & b)) continue;
    if (m.is_independent(c | b) && m.is_independent(d ^ b)) {
      out.insert({c | b, d ^ b});
      out.insert({d ^ b, c | b});
    }
  }
  return out;
}

BruteDegrees brute_degrees(const Matroid& m, Mask a) {
  const Mask b = full_mask(m.ground_size()) ^ a;
  BruteDegrees out;
  std::set<std::pair<Mask, Mask>> down;
  for (int x = 0; x < m.ground_size(); ++x) {
    const Mask bit = Mask{1} << x;
    if ((a & bit) && m.is_independent(b | bit)) {
      ++out.d1;
      down.insert({a ^ bit, b | bit});
    }
    if ((b & bit) && m.is_independent(a | bit)) {
      ++out.d2;
      down.insert({b ^ bit, a | bit});
    }
  }
  for (const auto& [c, d] : down) {
    out.w += make_rational(1, static_cast<long>(up_neighbours(m, c, d).size()));
  }
  return out;
}

MatroidPtr k3() { return graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}}); }
MatroidPtr path2() { return graphic_matroid(3, {{0, 1}, {1, 2}}); }

Seq S(std::initializer_list<long> v) {
  Seq out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("independence oracle examples") {
  for (const auto& m : {uniform_matroid(2, 4), k3(), linear_matroid(3, {{1, 0, 1}, {0, 1, 2}}),
                        direct_sum({k3(), uniform_matroid(1, 2)}), minor(k3(), 1, 0)}) {
    CHECK(m->is_independent(0));
  }
  CHECK_FALSE(k3()->is_independent(0b111));
  CHECK(k3()->is_independent(0b011));
  CHECK_FALSE(uniform_matroid(2, 4)->is_independent(0b0111));
  CHECK_THROWS_AS(k3()->is_independent(0b1000), IndexOutOfRange);
  CHECK_THROWS_AS(uniform_matroid(5, 4), InvalidArgument);
  CHECK_THROWS_AS(linear_matroid(4, {{1, 0}}), InvalidArgument);
}

TEST_CASE("graphic oracle agrees with the forest criterion") {
  const Edges k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Edges multi = k4;
  multi.push_back({0, 1});
  multi.push_back({2, 2});
  for (const auto& edges : {k4, multi}) {
    const auto m = graphic_matroid(4, edges);
    for (Mask x = 0; x <= full_mask(static_cast<int>(edges.size())); ++x) {
      CHECK(m->is_independent(x) == brute_forest(edges, x));
    }
  }
}

TEST_CASE("linear oracle agrees with coefficient enumeration") {
  Rng rng(61);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int r = static_cast<int>(rng.between(1, 3));
      const int n = static_cast<int>(rng.between(1, 6));
      std::vector<std::vector<long>> a(r, std::vector<long>(n));
      for (auto& row : a) {
        for (auto& v : row) v = rng.between(-p, 2 * p);
      }
      const auto m = linear_matroid(p, a);
      for (Mask x = 0; x <= full_mask(n); ++x) {
        CHECK(m->is_independent(x) == brute_linear_independent(p, a, x));
      }
    }
  }
}

TEST_CASE("direct sums and minors agree with rank formulas") {
  const auto a = k3();
  const auto b = uniform_matroid(2, 3);
  const auto sum = direct_sum({a, b});
  for (Mask x = 0; x < 64; ++x) {
    CHECK(sum->is_independent(x) == (a->is_independent(x & 7) && b->is_independent(x >> 3)));
  }
  const Edges k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const auto parent = graphic_matroid(4, k4);
  for (Mask del = 0; del < 64; del += 5) {
    for (Mask con = 0; con < 64; con += 3) {
      if (del & con) continue;
      const auto mn = minor(parent, del, con);
      const Mask keep = full_mask(6) ^ del ^ con;
      REQUIRE(mn->ground_size() == popcount(keep));
      const int rc = brute_rank_of(*parent, con);
      for (Mask x = 0; x <= full_mask(mn->ground_size()); ++x) {
        const Mask px = expand_bits(x, keep);
        CHECK(mn->is_independent(x) == (brute_rank_of(*parent, px | con) == popcount(x) + rc));
      }
    }
  }
  CHECK(deletion(parent, 2)->ground_size() == 5);
  CHECK(contraction(parent, 2)->ground_size() == 5);
  CHECK_THROWS_AS(minor(parent, 1, 1), InvalidArgument);
}

TEST_CASE("rank and independence numbers") {
  CHECK(independence_numbers(*uniform_matroid(2, 4)) == S({1, 4, 6, 0, 0}));
  CHECK(independence_numbers(*k3()) == S({1, 3, 3, 0}));
  CHECK(independence_numbers(*uniform_matroid(5, 5)) == S({1, 5, 10, 10, 5, 1}));
  CHECK(rank(*k3()) == 2);
  CHECK(rank(*uniform_matroid(0, 3)) == 0);
}

TEST_CASE("coloops") {
  CHECK(coloop_set(*uniform_matroid(4, 4)) == full_mask(4));
  CHECK(coloop_set(*uniform_matroid(2, 4)) == 0);
  CHECK(coloop_set(*path2()) == 0b11);
  CHECK(coloop_set(*graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}, {0, 0}})) == 0);
}

TEST_CASE("ordered partition counts") {
  const auto u24 = uniform_matroid(2, 4);
  CHECK(pi_count(*u24, 2) == 6);
  CHECK(pi_count(*u24, 1) == 0);
  const auto free2 = uniform_matroid(2, 2);
  CHECK(pi_count(*free2, 0) == 1);
  CHECK(pi_count(*free2, 1) == 2);
  CHECK(pi_count(*free2, 2) == 1);
  CHECK(pi_count(*uniform_matroid(1, 4), 2) == 0);
  Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.between(2, 8));
    const auto m = linear_matroid(2, {{rng.coin(), 1, 0, 1, 1, 0, 1, 1}, {0, rng.coin(), 1, 1, 0, 1, 1, 0},
                                      {1, 1, 1, 0, rng.coin(), 0, 0, 1}});
    const auto sub = minor(m, full_mask(8) ^ full_mask(n), 0);
    for (int i = 0; i <= n; ++i) CHECK(pi_count(*sub, i) == brute_pi(*sub, i));
  }
}

TEST_CASE("partition APP") {
  Report r = partition_app_check(*uniform_matroid(2, 4));
  CHECK(r.passed());
  CHECK(r.data["pi_lower"] == "0");
  CHECK(r.data["pi_upper"] == "6");
  r = partition_app_check(*uniform_matroid(2, 2));
  CHECK(r.passed());
  CHECK(*r.margin == 0);
  r = partition_app_check(*path2());
  CHECK(r.passed());
  CHECK(*r.margin == 0);
  CHECK_THROWS_AS(partition_app_check(*k3()), OddGroundSet);
  CHECK(partition_app_check(*uniform_matroid(0, 0)).verdict == Verdict::kVacuous);
}

TEST_CASE("matroid CAPP agrees with CAPP of the independent-set measure") {
  CHECK(matroid_capp_check(*uniform_matroid(1, 2)).passed());
  CHECK(matroid_capp_check(*k3()).passed());
  MatroidCorpusOptions small;
  small.max_uniform_n = 7;
  small.linear_count_per_field = 6;
  small.direct_sum_count = 4;
  small.single_element_minors = false;
  small.include_large = false;
  int checked = 0;
  for (const auto& entry : matroid_corpus(small)) {
    if (entry.matroid->ground_size() > 8) continue;
    const Matroid& m = *entry.matroid;
    CHECK(matroid_capp_check(m).passed() == has_capp(uniform_independent_measure(m)).passed());
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("both CAPP views agree on set systems that are not matroids") {
  Rng rng(71);
  int failures = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Mask> toggle;
    for (int t = 0; t < 3; ++t) toggle.push_back(static_cast<Mask>(rng.between(1, 63)));
    std::sort(toggle.begin(), toggle.end());
    toggle.erase(std::unique(toggle.begin(), toggle.end()), toggle.end());
    const auto m = corrupted(uniform_matroid(3, 6), toggle);
    const Report r = matroid_capp_check(*m);
    CHECK(r.passed() == has_capp(uniform_independent_measure(*m)).passed());
    if (r.failed()) {
      ++failures;
      CHECK(r.witness.contains("matroid"));
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("independent-set measures") {
  const Measure f = uniform_independent_measure(*uniform_matroid(3, 3));
  CHECK(f.proportional_to(Measure::uniform(3)));
  CHECK(uniform_independent_measure(*uniform_matroid(0, 3)) == Measure::point_mass(3, 0));
  const Measure t = uniform_independent_measure(*k3());
  CHECK(t.support_size() == 7);
  CHECK(t.weight(0b111) == 0);
}

TEST_CASE("Mason checks") {
  CHECK(mason_check(*uniform_matroid(2, 4)).passed());
  CHECK(mason_check(*k3()).passed());
  for (const auto& edges : nonisomorphic_graphs(5)) {
    if (edges.empty()) continue;
    const auto m = graphic_matroid(5, edges);
    CHECK(mason_check(*m).passed());
    CHECK(mason_prefix_check(*m, 6).passed());
  }
  // Not a matroid: one 3-set too many breaks log-concavity of the ratios.
  const auto bad = corrupted(uniform_matroid(1, 3), {0b111});
  CHECK(mason_check(*bad).failed());
  CHECK(mason_prefix_check(*bad, 1).passed());
  CHECK(mason_prefix_check(*bad, 6).failed());
}

TEST_CASE("partition degrees match enumeration") {
  const auto free2 = uniform_matroid(2, 2);
  const PartitionDegrees d = partition_degrees(*free2, 0b01);
  CHECK(d.d1 == 1);
  CHECK(d.d2 == 1);
  const PartitionDegrees u = partition_degrees(*uniform_matroid(2, 4), 0b0011);
  CHECK(u.d1 == 0);
  CHECK(u.d2 == 0);
  CHECK_THROWS_AS(partition_degrees(*uniform_matroid(2, 4), 0b0111), InvalidArgument);

  MatroidCorpusOptions small;
  small.max_uniform_n = 8;
  small.linear_count_per_field = 10;
  small.direct_sum_count = 5;
  small.single_element_minors = false;
  small.include_large = false;
  int pairs = 0;
  for (const auto& entry : matroid_corpus(small)) {
    const Matroid& m = *entry.matroid;
    const int n = m.ground_size();
    if (n % 2 || n == 0 || n > 8) continue;
    const Mask all = full_mask(n);
    for (Mask a = 0; a <= all; ++a) {
      if (popcount(a) != n / 2 || !m.is_independent(a) || !m.is_independent(all ^ a)) continue;
      const PartitionDegrees got = partition_degrees(m, a);
      const BruteDegrees want = brute_degrees(m, a);
      CHECK(got.d1 == want.d1);
      CHECK(got.d2 == want.d2);
      CHECK(got.neighbor_weight == want.w);
      const PartitionDegrees swapped = partition_degrees(m, all ^ a);
      CHECK(swapped.d1 == got.d2);
      CHECK(swapped.d2 == got.d1);
      ++pairs;
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("degree bounds") {
  CHECK(degree_bounds_check(*uniform_matroid(2, 2)).verdict == Verdict::kVacuous);
  CHECK(degree_bounds_check(*uniform_matroid(2, 4)).verdict == Verdict::kVacuous);
  const Report r = degree_bounds_check(*uniform_matroid(4, 6));
  CHECK(r.verdict == Verdict::kPass);
  CHECK(r.data["pairs"] == 20);
  const Edges k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  // rank 3 = k, hypothesis fails
  CHECK(degree_bounds_check(*graphic_matroid(4, k4)).verdict == Verdict::kVacuous);
}

TEST_CASE("coloop identity") {
  // U(2,3) plus a coloop: |E| = 4, r = 3 = k + 1
  const auto m = direct_sum({uniform_matroid(2, 3), uniform_matroid(1, 1)});
  const Report r = coloop_identity_check(m);
  CHECK(r.verdict == Verdict::kPass);
  CHECK(pi_count(*m, 2) == 2 * pi_count(*deletion(m, 3), 1));
  CHECK(pi_count(*m, 1) == pi_count(*deletion(m, 3), 1));
  CHECK(coloop_identity_check(uniform_matroid(2, 4)).verdict == Verdict::kVacuous);
}

TEST_CASE("bipartite weight bound") {
  BipartiteGraph matching{3, 3, {{0, 0}, {1, 1}, {2, 2}}};
  Report r = graph_weight_check(matching, Rational(1));
  CHECK(r.verdict == Verdict::kPass);

  BipartiteGraph k23{2, 3, {}};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 3; ++y) k23.edges.push_back({x, y});
  }
  r = graph_weight_check(k23, make_rational(2, 3));
  CHECK(r.verdict == Verdict::kPass);
  CHECK(*r.margin == 0);
  CHECK(graph_weight_check(k23, make_rational(1, 2)).verdict == Verdict::kVacuous);

  BipartiteGraph star{4, 1, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}};
  CHECK(graph_weight_check(star, Rational(4)).verdict == Verdict::kPass);

  BipartiteGraph isolated{2, 1, {{0, 0}}};
  CHECK_THROWS_AS(graph_weight_check(isolated, Rational(1)), InvalidArgument);
}

TEST_CASE("degree bound sweep") {
  const Report five = degree_bound_sweep(5);
  CHECK(five.verdict == Verdict::kPass);
  CHECK(five.data["violations"].empty());
  CHECK(*five.margin == 0);

  const Report six = degree_bound_sweep(6);
  CHECK(six.failed());
  bool found = false;
  for (const auto& v : six.data["violations"]) {
    CHECK(v["k"] == 6);
    if (v["d1"] == 2 && v["d2"] == 6) found = true;
  }
  CHECK(found);

  // hand substitutions
  auto bound_c = [](long d1, long d2) -> Rational {
    return (make_rational(d1 - 1, d1 + 1) + make_rational(d2 - d1 + 1, d1 + 2) +
            make_rational(d1, d2 + 1)) / 2;
  };
  CHECK(bound_c(2, 3) == make_rational(2, 3));
  CHECK(bound_c(2, 5) == make_rational(5, 6));
  CHECK(bound_c(2, 6) > make_rational(6, 7));
}

TEST_CASE("matroid axioms") {
  const Edges k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (const auto& m : {uniform_matroid(2, 5), graphic_matroid(4, k4),
                        linear_matroid(3, {{1, 0, 1, 2, 0}, {0, 1, 1, 1, 2}}),
                        direct_sum({k3(), uniform_matroid(1, 3)}),
                        minor(graphic_matroid(4, k4), 0b000001, 0b100000)}) {
    CHECK(axioms_check(*m).passed());
  }
  const Report hered = axioms_check(*corrupted(uniform_matroid(2, 4), {0b0001}));
  CHECK(hered.failed());
  CHECK(hered.witness["axiom"] == "hereditary");
  const Report aug = axioms_check(*corrupted(uniform_matroid(2, 4), {0b0111}));
  CHECK(aug.failed());
  const Report empty = axioms_check(*corrupted(uniform_matroid(2, 4), {0}));
  CHECK(empty.witness["axiom"] == "empty");
}

TEST_CASE("corpus") {
  CHECK(nonisomorphic_graphs(4).size() == 11);
  CHECK(nonisomorphic_graphs(5).size() == 34);
  const auto corpus = matroid_corpus();
  CHECK(corpus.size() >= 500);
  const Json cov = corpus_coverage(corpus);
  CHECK(cov["total"] == corpus.size());
  CHECK(cov["exhaustive"] == false);
  const auto again = matroid_corpus();
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); i += 37) {
    CHECK(again[i].label == corpus[i].label);
    CHECK(again[i].matroid->describe() == corpus[i].matroid->describe());
  }
}
