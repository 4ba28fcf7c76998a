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

// Property suites over generated corpora.
//
// Implication suites classify every instance: hypothesis fails -> vacuous,
// both hold -> pass, hypothesis holds and conclusion fails -> fail. A suite
// fails if any instance fails or if no instance satisfied the hypothesis.
// Suite reports carry data {instances, hypothesis_holds, pass, vacuous,
// fail} and the seed; the first failing instance becomes the witness.
//
// Instances are independent and may run on several threads; results are
// merged in instance order, so reports are identical for identical inputs.

#ifndef LCV_VERIFY_HPP_
#define LCV_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lcv/corpus.hpp"
#include "lcv/measure.hpp"
#include "lcv/report.hpp"
#include "lcv/seq.hpp"

namespace lcv {

// Measure generators:
//   matroid               uniform measure on independent sets of corpus
//                         matroids (evenly spaced sample of size `count`)
//   exchangeable_ulc      exchangeable measures with a random ULC rank
//                         sequence
//   exchangeable_product  products of two such measures
//   tilted                an exchangeable product or matroid measure under a
//                         random external field
//   random                random support and small integer weights
//   mixed                 the five above in rotation
struct CorpusSpec {
  std::string generator = "mixed";
  int n_min = 2;
  int n_max = 8;
  std::uint64_t seed = 1;
  int count = 100;
};

Json corpus_spec_to_json(const CorpusSpec& spec);
CorpusSpec corpus_spec_from_json(const Json& j);

struct Instance {
  std::string label;
  Measure measure;
};

std::vector<Instance> generate_measures(const CorpusSpec& spec);

// a_i = C(n, i) 2^{c_i} on a random interval of indices with c concave,
// zero elsewhere; n + 1 entries.
Seq random_ulc_sequence(Rng& rng, int n);
// Nonnegative integer combination of binomial_slice(s, k), not all zero.
Seq random_symmetric_uu(Rng& rng, int s);
Measure random_exchangeable_ulc(Rng& rng, int n);

struct RunOptions {
  int threads = 1;  // 0 = hardware concurrency
};

// CAPP and a rank sequence without internal zeros imply ULC.
Report run_capp_implies_ulc(const CorpusSpec& corpus, const RunOptions& run = {});

// APP on every conditioning onto 2k coordinates, k <= t, implies the ratios
// a_i / C(n, i) satisfy the LC inequalities for i in [0, t+1] and in
// [n-t-1, n].
Report run_local_capp_implies_prefix_lc(const CorpusSpec& corpus, int t,
                                        const RunOptions& run = {});

// The convolution of ULC sequences is ULC. `controls` extra pairs are
// random nonnegative sequences, counted as vacuous when not ULC.
Report run_ulc_convolution(int trials, std::uint64_t seed, int max_length, int controls = 0,
                           const RunOptions& run = {});

// The convolution of symmetric ultra-unimodal sequences is symmetric and
// ultra-unimodal.
Report run_symmetric_uu_convolution(int trials, std::uint64_t seed, int max_length,
                                    const RunOptions& run = {});

// f_sequence monotonicity for every s, t <= max_size and admissible k, l.
Report run_f_sequence_sweep(int max_size, const RunOptions& run = {});

// Products of APU measures are APU. Factors are exchangeable ULC measures
// or, at n <= 5, random measures accepted by is_apu; n + m <= max_total.
// When n + m <= capu_max_total and both factors are CAPU the product must
// be CAPU too.
Report run_apu_product(int trials, std::uint64_t seed, int max_total, int capu_max_total = 8,
                       const RunOptions& run = {});

// For exchangeable measures, ULC <=> CAPU, over every rank sequence with
// integer entries in [0, entry_max] and 1 <= n <= n_max.
Report run_exchangeable_ulc_capu(int n_max, int entry_max, const RunOptions& run = {});

// matroid_capp_check (or matroid_capu_check) on corpus matroids with
// n <= n_max. A counterexample witness carries the full matroid.
Report search_matroid_capp(const std::vector<CorpusEntry>& corpus, bool capu_variant,
                           int n_max = 11, const RunOptions& run = {});

// Per matroid: matroid_capp_check and mason_check when n <= 11,
// mason_prefix_check(., 6) always, partition_app_check when n is even and
// at most 10. data.coverage describes the corpus.
Report run_matroid_sweep(const std::vector<CorpusEntry>& corpus, const RunOptions& run = {});

// degree_bounds_check and coloop_identity_check on every corpus matroid of
// even size at most 10. Hypothesis = the rank condition of the bounds.
Report run_degree_bounds(const std::vector<CorpusEntry>& corpus, const RunOptions& run = {});

// matroid_capp_check and has_capp(uniform_independent_measure) agree on
// `count` evenly spaced corpus matroids with 2 <= n <= n_max.
Report run_capp_consistency(const std::vector<CorpusEntry>& corpus, int n_max, int count,
                            const RunOptions& run = {});

// {"seed": s, "suites": [{"suite": name, ...parameters}]}. Suite names:
//   capp_implies_ulc              corpus
//   local_capp_implies_prefix_lc  corpus, t
//   ulc_convolution               trials, max_length, controls
//   symmetric_uu_convolution      trials, max_length
//   f_sequence_sweep              max_size
//   apu_product                   trials, max_total, capu_max_total
//   exchangeable_ulc_capu         n_max, entry_max
//   matroid_capp_search           variant ("capp" | "capu"), n_max, extra
//   matroid_sweep                 extra
//   degree_bounds                 extra
//   capp_consistency              n_max, count
// `corpus` is a CorpusSpec object whose seed defaults to the manifest seed;
// `extra` is a list of matroid descriptors appended to the default matroid
// corpus. Unknown suites or parameters throw InvalidArgument.
Report run_manifest(const Json& manifest, const RunOptions& run = {});
Json default_manifest(std::uint64_t seed = 1);

}  // namespace lcv

#endif  // LCV_VERIFY_HPP_
