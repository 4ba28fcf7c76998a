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

#include <string>
#include <vector>

#include "doctest.h"
#include "lcv/verify.hpp"

using namespace lcv;

namespace {

int hypothesis_count(const Report& r) { return r.data.at("hypothesis_holds").get<int>(); }

std::vector<CorpusEntry> small_corpus() {
  MatroidCorpusOptions o;
  o.max_uniform_n = 6;
  o.linear_count_per_field = 5;
  o.direct_sum_count = 3;
  o.single_element_minors = false;
  o.include_large = false;
  return matroid_corpus(o);
}

}  // namespace

TEST_CASE("corpus spec json") {
  CorpusSpec spec;
  spec.generator = "tilted";
  spec.n_min = 3;
  spec.n_max = 5;
  spec.seed = 9;
  spec.count = 12;
  const CorpusSpec back = corpus_spec_from_json(corpus_spec_to_json(spec));
  CHECK(back.generator == spec.generator);
  CHECK(back.n_min == spec.n_min);
  CHECK(back.n_max == spec.n_max);
  CHECK(back.seed == spec.seed);
  CHECK(back.count == spec.count);
  CHECK_THROWS_AS(corpus_spec_from_json(Json::parse(R"({"size": 3})")), InvalidArgument);
}

TEST_CASE("generators") {
  for (const char* g : {"matroid", "exchangeable_ulc", "exchangeable_product", "tilted", "random", "mixed"}) {
    CorpusSpec spec;
    spec.generator = g;
    spec.n_min = 2;
    spec.n_max = 6;
    spec.count = 25;
    const auto a = generate_measures(spec);
    const auto b = generate_measures(spec);
    CHECK(a.size() == 25);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].label == b[i].label);
      CHECK(a[i].measure == b[i].measure);
      CHECK(a[i].measure.n() <= 6);
    }
  }
  CorpusSpec bad;
  bad.generator = "nope";
  CHECK_THROWS_AS(generate_measures(bad), InvalidArgument);
}

TEST_CASE("random ULC and symmetric ultra-unimodal sequences") {
  Rng rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng.between(0, 11));
    const Seq a = random_ulc_sequence(rng, n);
    CHECK(a.size() == static_cast<std::size_t>(n + 1));
    CHECK(is_ulc(a, n));
    const Seq p = random_symmetric_uu(rng, n);
    CHECK(is_symmetric(p));
    CHECK(is_ultra_unimodal(p));
    CHECK(is_ulc_measure(random_exchangeable_ulc(rng, n + 1)).passed());
  }
}

TEST_CASE("implication suites pass on the generated corpora") {
  CorpusSpec spec;
  spec.count = 40;
  spec.n_max = 6;
  const Report capp = run_capp_implies_ulc(spec);
  CHECK(capp.passed());
  CHECK(hypothesis_count(capp) > 0);
  CHECK(capp.seed == spec.seed);

  const Report local = run_local_capp_implies_prefix_lc(spec, 1);
  CHECK(local.passed());
  CHECK(hypothesis_count(local) > 0);

  CHECK(run_ulc_convolution(300, 2, 12).passed());
  CHECK(run_symmetric_uu_convolution(200, 3, 12).passed());
  CHECK(run_f_sequence_sweep(6).passed());
  CHECK(run_apu_product(60, 4, 10, 6).passed());
  CHECK(run_exchangeable_ulc_capu(4, 3).passed());
}

TEST_CASE("random controls are classified, not failed") {
  const Report r = run_ulc_convolution(50, 5, 8, 200);
  CHECK(r.passed());
  CHECK(r.data["vacuous"].get<int>() > 0);
  CHECK(r.data["fail"] == 0);
}

TEST_CASE("reports are deterministic and independent of thread count") {
  CorpusSpec spec;
  spec.count = 30;
  spec.n_max = 6;
  const Json a = to_json(run_capp_implies_ulc(spec, {1}));
  const Json b = to_json(run_capp_implies_ulc(spec, {1}));
  const Json c = to_json(run_capp_implies_ulc(spec, {3}));
  CHECK(a.dump() == b.dump());
  CHECK(a.dump() == c.dump());
  const auto corpus = small_corpus();
  CHECK(to_json(run_matroid_sweep(corpus, {1})).dump() == to_json(run_matroid_sweep(corpus, {4})).dump());
}

TEST_CASE("matroid suites") {
  const auto corpus = small_corpus();
  const Report sweep = run_matroid_sweep(corpus);
  CHECK(sweep.passed());
  CHECK(sweep.data.contains("coverage"));
  CHECK(search_matroid_capp(corpus, false, 8).passed());
  CHECK(search_matroid_capp(corpus, true, 6).passed());
  CHECK(run_degree_bounds(corpus).passed());
  const Report cons = run_capp_consistency(corpus, 8, 30);
  CHECK(cons.passed());
  CHECK(cons.data["instances"] == 30);
}

TEST_CASE("negative control: a corrupted oracle is reported with its descriptor") {
  auto corpus = small_corpus();
  const auto bad = corrupted(uniform_matroid(1, 3), {0b111});
  corpus.push_back({"bad", "extra", bad});
  const Report search = search_matroid_capp(corpus, false, 8);
  CHECK(search.failed());
  CHECK(search.witness.dump().find("corrupted") != std::string::npos);
  CHECK(run_matroid_sweep(corpus).failed());
}

TEST_CASE("a suite without hypothesis-satisfying instances fails") {
  // odd ground sets never meet the degree-bound hypothesis
  std::vector<CorpusEntry> odd{{"u13", "uniform", uniform_matroid(1, 3)},
                               {"u25", "uniform", uniform_matroid(2, 5)}};
  const Report r = run_degree_bounds(odd);
  CHECK(r.failed());
  CHECK(hypothesis_count(r) == 0);
}

TEST_CASE("manifests") {
  const Json small = Json::parse(R"({
    "seed": 3,
    "suites": [
      {"suite": "capp_implies_ulc", "corpus": {"generator": "exchangeable_ulc", "n_max": 5, "count": 10}},
      {"suite": "f_sequence_sweep", "max_size": 4},
      {"suite": "matroid_capp_search", "variant": "capp", "n_max": 4}
    ]})");
  const Report r = run_manifest(small);
  CHECK(r.passed());
  CHECK(r.data["suites"].size() == 3);
  CHECK(to_json(run_manifest(small)).dump() == to_json(r).dump());

  Json broken = small;
  broken["suites"][2]["extra"] = Json::array({Json::parse(
      R"({"type": "corrupted", "base": {"type": "uniform", "r": 1, "n": 3}, "toggle": [7]})")});
  const Report f = run_manifest(broken);
  CHECK(f.failed());
  CHECK(f.witness["failed_suites"].size() == 1);

  CHECK_THROWS_AS(run_manifest(Json::parse(R"({"suites": [{"suite": "nope"}]})")), InvalidArgument);
  CHECK_THROWS_AS(run_manifest(Json::parse(R"({"suites": [{"suite": "f_sequence_sweep", "size": 3}]})")),
                  InvalidArgument);
  const Json def = default_manifest(5);
  CHECK(def["seed"] == 5);
  CHECK(def["suites"].size() >= 11);
}
