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
#include <vector>

#include "doctest.h"
#include "lcv/exact.hpp"
#include "lcv/seq.hpp"

using namespace lcv;

namespace {

Seq S(std::initializer_list<long> v) {
  Seq out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Direct reading of the definitions, kept deliberately naive.
bool oracle_lc(const Seq& a) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (a[i] != 0) {
      if (first < 0) first = i;
      last = i;
    }
  }
  for (int i = first; first >= 0 && i <= last; ++i) {
    if (a[i] == 0) return false;
  }
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  }
  return true;
}

bool oracle_ulc(const Seq& a, int n) {
  Seq r;
  for (int i = 0; i <= n; ++i) {
    Integer c = 1;
    for (int j = 1; j <= i; ++j) c = c * (n - i + j) / j;
    r.push_back(a[i] / Rational(c));
  }
  return oracle_lc(r);
}

bool oracle_unimodal(const Seq& a) {
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  return i + 1 >= a.size();
}

// f_j by listing every j-subset of S u T; S = low s bits.
Seq brute_f(int s, int t, int k, int l) {
  const int n = s + t;
  std::vector<long> hits(n + 1, 0), totals(n + 1, 0);
  for (Mask z = 0; z < (Mask{1} << n); ++z) {
    const int in_s = popcount(z & full_mask(s));
    const int in_t = popcount(z) - in_s;
    ++totals[popcount(z)];
    if (k <= in_s && in_s <= s - k && l <= in_t && in_t <= t - l) ++hits[popcount(z)];
  }
  Seq f;
  for (int j = 0; j <= n; ++j) f.push_back(make_rational(hits[j], totals[j]));
  return f;
}

}  // namespace

TEST_CASE("unimodality examples") {
  CHECK(is_unimodal(S({1, 2, 1})));
  CHECK_FALSE(is_unimodal(S({1, 0, 1})));
  CHECK(is_unimodal(S({0, 0, 3, 3, 1, 0})));
  CHECK(is_unimodal(Seq{}));
  CHECK(is_unimodal(S({5})));
}

TEST_CASE("log-concavity examples") {
  CHECK(is_lc(S({1, 2, 4})));
  CHECK_FALSE(is_lc(S({1, 0, 1})));
  CHECK(satisfies_lc_inequalities(S({1, 0, 0, 1})));
  CHECK_FALSE(is_lc(S({1, 0, 0, 1})));
  CHECK(is_lc(S({2, 4, 8, 16})));
  CHECK(is_lc(S({0, 0, 1, 1, 0})));
}

TEST_CASE("ultra log-concavity examples") {
  CHECK(is_ulc(S({1, 3, 3, 1}), 3));
  CHECK_FALSE(is_ulc(S({1, 1, 1}), 2));
  CHECK(is_ulc(S({1, 4, 6, 0, 0}), 4));
  CHECK(is_ulc_prefix(S({1, 1, 1}), 2, 1));
  CHECK_FALSE(is_ulc_prefix(S({1, 1, 1}), 2, 2));
  CHECK(is_ulc_prefix(S({1, 3, 3, 1}), 3, 2));
  CHECK(is_ulc_prefix(S({1, 4, 6, 0, 0}), 4, 3));
  CHECK_THROWS_AS(is_ulc(S({1, 2}), 3), LengthMismatch);
  CHECK(binomial_normalized(S({1, 4, 6, 0, 0}), 4) == S({1, 1, 1, 0, 0}));
  CHECK_THROWS_AS(require_nonnegative(S({1, -1})), InvalidArgument);
}

TEST_CASE("predicates agree with the naive oracles on random short sequences") {
  Rng rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = static_cast<int>(rng.between(0, 6));
    Seq a;
    for (int i = 0; i <= n; ++i) a.emplace_back(rng.between(0, 3) == 0 ? 0 : rng.between(1, 12));
    CHECK(is_lc(a) == oracle_lc(a));
    CHECK(is_ulc(a, n) == oracle_ulc(a, n));
    CHECK(is_unimodal(a) == oracle_unimodal(a));
  }
}

TEST_CASE("symmetry and ultra-unimodality") {
  CHECK(is_symmetric(S({1, 4, 6, 4, 1})));
  CHECK(is_ultra_unimodal(S({1, 4, 6, 4, 1})));
  CHECK(binomial_slice(4, 1) == S({0, 4, 6, 4, 0}));
  CHECK(is_symmetric(binomial_slice(4, 1)));
  CHECK(is_ultra_unimodal(binomial_slice(4, 1)));
  CHECK_FALSE(is_symmetric(S({1, 2, 3})));
  CHECK_FALSE(is_ultra_unimodal(S({1, 0, 1})));
}

TEST_CASE("convolution") {
  CHECK(convolve(S({3, 1, 2}), S({1})) == S({3, 1, 2}));
  CHECK(convolve(S({1, 2, 1}), S({1, 2, 1})) == S({1, 4, 6, 4, 1}));
  CHECK(convolve(S({1, 1}), S({1, 2, 3})) == S({1, 3, 5, 3}));
}

TEST_CASE("LC without internal zeros is closed under convolution") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto draw = [&rng] {
      // geometric-ratio walk with decreasing ratios is LC
      Seq a{Rational(rng.between(1, 5))};
      Rational ratio(rng.between(1, 8));
      const int len = static_cast<int>(rng.between(1, 6));
      for (int i = 0; i < len; ++i) {
        ratio = ratio * make_rational(rng.between(1, 4), 4);
        a.push_back(a.back() * ratio);
      }
      return a;
    };
    const Seq a = draw(), b = draw();
    REQUIRE(oracle_lc(a));
    REQUIRE(oracle_lc(b));
    CHECK(oracle_lc(convolve(a, b)));
  }
}

TEST_CASE("binomial slices") {
  CHECK(binomial_slice(2, 0) == S({1, 2, 1}));
  CHECK(binomial_slice(4, 2) == S({0, 0, 6, 0, 0}));
  CHECK_THROWS(binomial_slice(4, 3));
}

TEST_CASE("symmetric ultra-unimodal decomposition") {
  auto terms = symmetric_uu_decompose(S({1, 4, 6, 4, 1}));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0] == SliceTerm{Rational(1), 0});

  terms = symmetric_uu_decompose(S({0, 4, 6, 4, 0}));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0] == SliceTerm{Rational(1), 1});

  terms = symmetric_uu_decompose(S({1, 6, 10, 6, 1}));
  std::sort(terms.begin(), terms.end(), [](auto& x, auto& y) { return x.k < y.k; });
  REQUIRE(terms.size() == 3);
  CHECK(terms[0] == SliceTerm{Rational(1), 0});
  CHECK(terms[1] == SliceTerm{make_rational(1, 2), 1});
  CHECK(terms[2] == SliceTerm{make_rational(1, 6), 2});
  CHECK(recombine_slices(4, terms) == S({1, 6, 10, 6, 1}));

  CHECK_THROWS_AS(symmetric_uu_decompose(S({1, 2, 3})), InvalidArgument);
  CHECK_THROWS_AS(symmetric_uu_decompose(S({2, 1, 2})), InvalidArgument);
}

TEST_CASE("decomposition reconstructs random combinations with nonnegative coefficients") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int s = static_cast<int>(rng.between(0, 10));
    Seq p(s + 1, Rational(0));
    for (int k = 0; 2 * k <= s; ++k) {
      const Rational c(rng.between(0, 3));
      const Seq slice = binomial_slice(s, k);
      for (int i = 0; i <= s; ++i) p[i] += c * slice[i];
    }
    if (std::all_of(p.begin(), p.end(), [](auto& x) { return x == 0; })) continue;
    const auto terms = symmetric_uu_decompose(p);
    for (const auto& term : terms) CHECK(term.coefficient > 0);
    CHECK(recombine_slices(s, terms) == p);
  }
}

TEST_CASE("f sequence examples") {
  const FSequence f = f_sequence(2, 2, 1, 1);
  CHECK(f.values == Seq{0, 0, make_rational(2, 3), 0, 0});
  CHECK(f.monotone);
  for (const auto& x : f_sequence(3, 4, 0, 0).values) CHECK(x == 1);
}

TEST_CASE("f sequence matches subset enumeration") {
  for (int s = 0; s <= 6; ++s) {
    for (int t = 0; t <= 6; ++t) {
      for (int k = 0; 2 * k <= s; ++k) {
        for (int l = 0; 2 * l <= t; ++l) {
          const Seq brute = brute_f(s, t, k, l);
          const FSequence f = f_sequence(s, t, k, l);
          CHECK(f.values == brute);
          bool mono = true;
          for (int j = 0; 2 * j < s + t; ++j) mono = mono && brute[j] <= brute[j + 1];
          CHECK(f.monotone == mono);
        }
      }
    }
  }
  CHECK(brute_f(4, 2, 1, 1) == f_sequence(4, 2, 1, 1).values);
  CHECK(f_sequence(4, 2, 1, 1).monotone);
}

TEST_CASE("sequence literals") {
  CHECK(parse_seq_literal("1/2, 3") == Seq{make_rational(1, 2), Rational(3)});
  CHECK(seq_to_string(S({1, 4, 6, 4, 1})) == "1,4,6,4,1");
  CHECK_THROWS(parse_seq_literal("1,-2"));
}
