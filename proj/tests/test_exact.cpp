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

#include <thread>
#include <vector>

#include "doctest.h"
#include "lcv/exact.hpp"
#include "lcv/report.hpp"

using namespace lcv;

namespace {

// Multiplicative formula, independent of the Pascal cache.
Integer binomial_direct(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

TEST_CASE("binomial matches the multiplicative formula") {
  for (long n = -2; n <= 60; ++n) {
    for (long k = -2; k <= 62; ++k) CHECK(binomial(n, k) == binomial_direct(n, k));
  }
}

TEST_CASE("binomial is safe under concurrent growth") {
  std::vector<std::jthread> pool;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([t, &ok] {
      for (long n = 200 + 37 * t; n >= 0; n -= 3) {
        if (binomial(n, n / 2) != binomial_direct(n, n / 2)) ok[t] = 0;
      }
    });
  }
  pool.clear();
  for (int v : ok) CHECK(v == 1);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("10/6") == make_rational(5, 3));
  CHECK(parse_rational("-3/4") == make_rational(-3, 4));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(to_string(make_rational(10, 6)) == "5/3");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(make_rational(1, 0), InvalidArgument);
}

TEST_CASE("bit gather and scatter are inverse on the selected bits") {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Mask select = static_cast<Mask>(rng.next()) & full_mask(20);
    const Mask x = static_cast<Mask>(rng.next()) & full_mask(20);
    const Mask packed = compress_bits(x, select);
    CHECK(packed < (Mask{1} << popcount(select)));
    CHECK(expand_bits(packed, select) == (x & select));
  }
  CHECK(compress_bits(0b1010, 0b1110) == 0b101);
  CHECK(expand_bits(0b11, 0b1001) == 0b1001);
}

TEST_CASE("same-popcount successor walks every k-subset in order") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<Mask> brute;
      for (Mask m = 0; m <= full_mask(n); ++m) {
        if (popcount(m) == k) brute.push_back(m);
      }
      std::vector<Mask> walked;
      for (Mask m = full_mask(k); m <= full_mask(n); m = next_same_popcount(m)) {
        walked.push_back(m);
        if (m == full_mask(n)) break;
      }
      CHECK(walked == brute);
    }
  }
}

TEST_CASE("seeded draws are reproducible and in range") {
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.between(-3, 5);
    CHECK(x == b.between(-3, 5));
    CHECK(x >= -3);
    CHECK(x <= 5);
  }
  Rng c = Rng::for_item(5, 1), d = Rng::for_item(5, 1), e = Rng::for_item(5, 2);
  const auto cv = c.next();
  CHECK(cv == d.next());
  CHECK(cv != e.next());
}

TEST_CASE("report json round trip") {
  Report r = Report::fail("app", Json{{"k", 1}});
  r.margin = make_rational(-1, 4);
  r.sampled = true;
  r.seed = 12;
  r.instances = 3;
  const Json j = to_json(r);
  CHECK(j["verdict"] == "fail");
  CHECK(j["margin"]["num"] == "-1");
  CHECK(j["margin"]["den"] == "4");
  CHECK(j.contains("verdict_scope"));
  const Report back = report_from_json(j);
  CHECK(back.check == r.check);
  CHECK(back.verdict == r.verdict);
  CHECK(back.sampled);
  CHECK(back.witness == r.witness);
  CHECK(*back.margin == *r.margin);
  CHECK(back.seed == r.seed);
  CHECK(back.instances == r.instances);
  CHECK(to_json(back) == j);

  const Report v = Report::vacuous("x");
  CHECK(v.passed());
  CHECK(to_json(report_from_json(to_json(v))) == to_json(v));
  CHECK_THROWS_AS(Report::fail("x", Json()), InvalidArgument);
}
