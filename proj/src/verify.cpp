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

#include "lcv/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lcv/io.hpp"
#include "lcv/matroid.hpp"
#include "parallel.hpp"

namespace lcv {
namespace {

enum class Outcome { kVacuous, kPass, kFail };

struct InstanceResult {
  Outcome outcome = Outcome::kPass;
  Json witness;  // set when outcome is kFail
  Json stats = Json::object();  // per-instance counters summed into data
};

InstanceResult classify(bool hypothesis, bool conclusion, Json witness) {
  if (!hypothesis) return {Outcome::kVacuous, nullptr};
  if (conclusion) return {Outcome::kPass, nullptr};
  return {Outcome::kFail, std::move(witness)};
}

Report summarize(std::string name, const std::vector<InstanceResult>& results, bool sampled,
                 std::optional<std::uint64_t> seed) {
  std::uint64_t pass = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t fail = 0;
  Json first_failure;
  std::map<std::string, std::int64_t> stats;
  for (const InstanceResult& r : results) {
    switch (r.outcome) {
      case Outcome::kPass:
        ++pass;
        break;
      case Outcome::kVacuous:
        ++vacuous;
        break;
      case Outcome::kFail:
        if (!fail) first_failure = r.witness;
        ++fail;
        break;
    }
    for (const auto& [k, v] : r.stats.items()) stats[k] += v.get<std::int64_t>();
  }
  const std::uint64_t holds = pass + fail;
  Report report;
  if (fail) {
    report = Report::fail(name, first_failure);
  } else if (holds == 0) {
    report = Report::fail(name, Json{{"reason", "no instance satisfied the hypothesis"}});
  } else {
    report = Report::pass(name);
  }
  report.sampled = sampled;
  report.instances = results.size();
  report.seed = seed;
  report.data["instances"] = results.size();
  report.data["hypothesis_holds"] = holds;
  report.data["pass"] = pass;
  report.data["vacuous"] = vacuous;
  report.data["fail"] = fail;
  for (const auto& [k, v] : stats) report.data[k] = v;
  return report;
}

Json seq_strings(SeqView a) {
  Json out = Json::array();
  for (const Rational& x : a) out.push_back(to_string(x));
  return out;
}

Rational power_of_two(long e) {
  const Integer p = Integer(1) << static_cast<unsigned long>(e < 0 ? -e : e);
  return e >= 0 ? Rational(p) : Rational(make_rational(Integer(1), p));
}

Measure random_measure(Rng& rng, int n) {
  std::vector<WeightedPoint> points;
  const Mask full = full_mask(n);
  for (Mask m = 0;; ++m) {
    if (rng.coin()) points.push_back({m, Rational(static_cast<long>(rng.between(1, 4)))});
    if (m == full) break;
  }
  if (points.empty()) points.push_back({static_cast<Mask>(rng.below(full + std::uint64_t{1})),
                                        Rational(1)});
  return Measure(n, std::move(points));
}

FieldVector random_field(Rng& rng, int n) {
  std::vector<Rational> w(n);
  for (Rational& x : w) {
    x = make_rational(static_cast<long>(rng.between(1, 4)), static_cast<long>(rng.between(1, 4)));
  }
  return FieldVector(std::move(w));
}

Measure exchangeable_product(Rng& rng, int n) {
  if (n < 2) return random_exchangeable_ulc(rng, n);
  const int left = static_cast<int>(rng.between(1, n - 1));
  return product(random_exchangeable_ulc(rng, left), random_exchangeable_ulc(rng, n - left));
}

std::vector<std::size_t> evenly_spaced(std::size_t size, std::size_t count) {
  std::vector<std::size_t> out;
  if (count >= size) {
    for (std::size_t i = 0; i < size; ++i) out.push_back(i);
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) out.push_back(i * size / count);
  return out;
}

std::vector<const CorpusEntry*> filter_by_size(const std::vector<CorpusEntry>& corpus, int lo,
                                               int hi) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus) {
    const int n = e.matroid->ground_size();
    if (n >= lo && n <= hi) out.push_back(&e);
  }
  return out;
}

Json failure(const CorpusEntry& entry, const Report& report) {
  return Json{{"label", entry.label}, {"matroid", entry.matroid->describe()},
              {"report", to_json(report)}};
}

Json measure_failure(std::size_t index, const std::string& label, const Measure& mu,
                     const Report& conclusion) {
  return Json{{"instance", index}, {"label", label}, {"measure", measure_to_json(mu)},
              {"conclusion", to_json(conclusion)}};
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {"matroid", "exchangeable_ulc",
                                                 "exchangeable_product", "tilted", "random"};
  return names;
}

}  // namespace

Json corpus_spec_to_json(const CorpusSpec& spec) {
  return Json{{"generator", spec.generator}, {"n_min", spec.n_min}, {"n_max", spec.n_max},
              {"seed", spec.seed},           {"count", spec.count}};
}

CorpusSpec corpus_spec_from_json(const Json& j) {
  static const std::set<std::string> known = {"generator", "n_min", "n_max", "seed", "count"};
  for (const auto& [k, v] : j.items()) {
    if (!known.count(k)) throw InvalidArgument("unknown corpus parameter '" + k + "'");
  }
  CorpusSpec spec;
  spec.generator = j.value("generator", spec.generator);
  spec.n_min = j.value("n_min", spec.n_min);
  spec.n_max = j.value("n_max", spec.n_max);
  spec.seed = j.value("seed", spec.seed);
  spec.count = j.value("count", spec.count);
  return spec;
}

Seq random_ulc_sequence(Rng& rng, int n) {
  if (n < 0) throw InvalidArgument("sequence size must be nonnegative");
  Seq a(n + 1);
  long lo = 0;
  long hi = n;
  if (rng.below(3) == 0) {
    lo = static_cast<long>(rng.between(0, n));
    hi = static_cast<long>(rng.between(lo, n));
  }
  long c = static_cast<long>(rng.between(-2, 2));
  long slope = static_cast<long>(rng.between(-2, 2));
  for (long i = lo; i <= hi; ++i) {
    a[i] = Rational(binomial(n, i)) * power_of_two(c);
    c += slope;
    if (rng.below(3) == 0) --slope;
  }
  return a;
}

Seq random_symmetric_uu(Rng& rng, int s) {
  if (s < 0) throw InvalidArgument("sequence size must be nonnegative");
  Seq p(s + 1);
  bool any = false;
  for (int k = 0; 2 * k <= s; ++k) {
    const long c = rng.below(3) == 0 ? 0 : static_cast<long>(rng.between(1, 4));
    if (!c) continue;
    any = true;
    const Seq slice = binomial_slice(s, k);
    for (int i = 0; i <= s; ++i) p[i] += Rational(c) * slice[i];
  }
  if (!any) p = binomial_slice(s, static_cast<int>(rng.between(0, s / 2)));
  return p;
}

Measure random_exchangeable_ulc(Rng& rng, int n) {
  return exchangeable_from_seq(random_ulc_sequence(rng, n));
}

std::vector<Instance> generate_measures(const CorpusSpec& spec) {
  if (spec.n_min < 0 || spec.n_max < spec.n_min || spec.n_max > 16 || spec.count < 0) {
    throw InvalidArgument("corpus needs 0 <= n_min <= n_max <= 16 and count >= 0");
  }
  const auto& names = generator_names();
  if (spec.generator != "mixed" &&
      std::find(names.begin(), names.end(), spec.generator) == names.end()) {
    throw InvalidArgument("unknown corpus generator '" + spec.generator + "'");
  }
  std::vector<CorpusEntry> matroids;
  std::vector<const CorpusEntry*> pool;
  auto matroid_pool = [&]() -> const std::vector<const CorpusEntry*>& {
    if (matroids.empty()) {
      MatroidCorpusOptions options;
      options.seed = spec.seed;
      matroids = matroid_corpus(options);
      pool = filter_by_size(matroids, spec.n_min, spec.n_max);
      if (pool.empty()) throw InvalidArgument("no corpus matroid in the requested size range");
    }
    return pool;
  };
  std::vector<Instance> out;
  if (spec.generator == "matroid") {
    const auto& p = matroid_pool();
    for (std::size_t i : evenly_spaced(p.size(), spec.count)) {
      out.push_back({"matroid " + p[i]->label, uniform_independent_measure(*p[i]->matroid)});
    }
    return out;
  }
  for (int i = 0; i < spec.count; ++i) {
    Rng rng = Rng::for_item(spec.seed, static_cast<std::uint64_t>(i));
    const std::string gen = spec.generator == "mixed" ? names[i % names.size()] : spec.generator;
    const int n = static_cast<int>(rng.between(spec.n_min, spec.n_max));
    const std::string tag = "#" + std::to_string(i);
    if (gen == "matroid") {
      const auto& p = matroid_pool();
      const auto* e = p[rng.below(p.size())];
      out.push_back({"matroid " + e->label, uniform_independent_measure(*e->matroid)});
    } else if (gen == "exchangeable_ulc") {
      out.push_back({"exchangeable_ulc" + tag, random_exchangeable_ulc(rng, n)});
    } else if (gen == "exchangeable_product") {
      out.push_back({"exchangeable_product" + tag, exchangeable_product(rng, n)});
    } else if (gen == "tilted") {
      Measure base = Measure::uniform(0);
      if (rng.coin()) {
        base = exchangeable_product(rng, n);
      } else {
        const auto& p = matroid_pool();
        base = uniform_independent_measure(*p[rng.below(p.size())]->matroid);
      }
      out.push_back({"tilted" + tag, impose_field(base, random_field(rng, base.n()))});
    } else {
      out.push_back({"random" + tag, random_measure(rng, n)});
    }
  }
  return out;
}

Report run_capp_implies_ulc(const CorpusSpec& corpus, const RunOptions& run) {
  const std::vector<Instance> instances = generate_measures(corpus);
  auto results = detail::parallel_map<InstanceResult>(
      instances.size(), run.threads, [&](std::size_t i) {
        const Measure& mu = instances[i].measure;
        const bool hyp = has_no_internal_zeros(rank_sequence(mu)) && has_capp(mu).passed();
        if (!hyp) return classify(false, true, nullptr);
        const Report ulc = is_ulc_measure(mu);
        return classify(true, ulc.passed(),
                        measure_failure(i, instances[i].label, mu, ulc));
      });
  Report r = summarize("capp_implies_ulc", results, true, corpus.seed);
  r.data["corpus"] = corpus_spec_to_json(corpus);
  return r;
}

Report run_local_capp_implies_prefix_lc(const CorpusSpec& corpus, int t, const RunOptions& run) {
  if (t < 1) throw InvalidArgument("window t must be at least 1");
  const std::vector<Instance> instances = generate_measures(corpus);
  auto results = detail::parallel_map<InstanceResult>(
      instances.size(), run.threads, [&](std::size_t i) {
        const Measure& mu = instances[i].measure;
        ConditioningOptions options;
        options.max_half_window = t;
        if (!has_capp(mu, options).passed()) return classify(false, true, nullptr);
        const int n = mu.n();
        const Seq ratios = binomial_normalized(rank_sequence(mu), n);
        const int top = std::min(t + 1, n);
        const int bottom = std::max(0, n - t - 1);
        const SeqView view(ratios);
        const bool prefix = satisfies_lc_inequalities(view.first(top + 1));
        const bool suffix = satisfies_lc_inequalities(view.subspan(bottom));
        return classify(true, prefix && suffix,
                        Json{{"instance", i},
                             {"label", instances[i].label},
                             {"measure", measure_to_json(mu)},
                             {"ratios", seq_strings(ratios)},
                             {"prefix_lc", prefix},
                             {"suffix_lc", suffix}});
      });
  Report r = summarize("local_capp_implies_prefix_lc", results, true, corpus.seed);
  r.data["t"] = t;
  r.data["corpus"] = corpus_spec_to_json(corpus);
  return r;
}

Report run_ulc_convolution(int trials, std::uint64_t seed, int max_length, int controls,
                           const RunOptions& run) {
  if (trials < 0 || controls < 0 || max_length < 1) {
    throw InvalidArgument("ulc convolution needs trials, controls >= 0 and max_length >= 1");
  }
  auto results = detail::parallel_map<InstanceResult>(
      static_cast<std::size_t>(trials) + controls, run.threads, [&](std::size_t i) {
        Rng rng = Rng::for_item(seed, i);
        const int la = static_cast<int>(rng.between(1, max_length));
        const int lb = static_cast<int>(rng.between(1, max_length));
        Seq a;
        Seq b;
        if (i < static_cast<std::size_t>(trials)) {
          a = random_ulc_sequence(rng, la - 1);
          b = random_ulc_sequence(rng, lb - 1);
        } else {
          for (int k = 0; k < la; ++k) a.emplace_back(static_cast<long>(rng.below(6)));
          for (int k = 0; k < lb; ++k) b.emplace_back(static_cast<long>(rng.below(6)));
        }
        const bool hyp = is_ulc(a, la - 1) && is_ulc(b, lb - 1);
        if (!hyp) return classify(false, true, nullptr);
        const Seq c = convolve(a, b);
        return classify(true, is_ulc(c, la + lb - 2),
                        Json{{"instance", i},
                             {"a", seq_strings(a)},
                             {"b", seq_strings(b)},
                             {"convolution", seq_strings(c)}});
      });
  Report r = summarize("ulc_convolution", results, true, seed);
  r.data["trials"] = trials;
  r.data["controls"] = controls;
  r.data["max_length"] = max_length;
  return r;
}

Report run_symmetric_uu_convolution(int trials, std::uint64_t seed, int max_length,
                                    const RunOptions& run) {
  if (trials < 0 || max_length < 1) throw InvalidArgument("bad symmetric convolution parameters");
  auto results = detail::parallel_map<InstanceResult>(
      static_cast<std::size_t>(trials), run.threads, [&](std::size_t i) {
        Rng rng = Rng::for_item(seed, i);
        const Seq p = random_symmetric_uu(rng, static_cast<int>(rng.between(0, max_length - 1)));
        const Seq q = random_symmetric_uu(rng, static_cast<int>(rng.between(0, max_length - 1)));
        const bool hyp = is_symmetric(p) && is_ultra_unimodal(p) && is_symmetric(q) &&
                         is_ultra_unimodal(q);
        if (!hyp) return classify(false, true, nullptr);
        const Seq c = convolve(p, q);
        return classify(true, is_symmetric(c) && is_ultra_unimodal(c),
                        Json{{"instance", i},
                             {"p", seq_strings(p)},
                             {"q", seq_strings(q)},
                             {"convolution", seq_strings(c)}});
      });
  Report r = summarize("symmetric_uu_convolution", results, true, seed);
  r.data["trials"] = trials;
  r.data["max_length"] = max_length;
  return r;
}

Report run_f_sequence_sweep(int max_size, const RunOptions& run) {
  if (max_size < 0) throw InvalidArgument("max_size must be nonnegative");
  struct Params {
    int s, t, k, l;
  };
  std::vector<Params> params;
  for (int s = 0; s <= max_size; ++s) {
    for (int t = 0; t <= max_size; ++t) {
      for (int k = 0; 2 * k <= s; ++k) {
        for (int l = 0; 2 * l <= t; ++l) params.push_back({s, t, k, l});
      }
    }
  }
  auto results = detail::parallel_map<InstanceResult>(
      params.size(), run.threads, [&](std::size_t i) {
        const Params& p = params[i];
        const FSequence f = f_sequence(p.s, p.t, p.k, p.l);
        Json w{{"s", p.s}, {"t", p.t}, {"k", p.k}, {"l", p.l}, {"f", seq_strings(f.values)}};
        if (f.first_violation) w["j"] = *f.first_violation;
        return classify(true, f.monotone, std::move(w));
      });
  Report r = summarize("f_sequence_sweep", results, false, std::nullopt);
  r.data["max_size"] = max_size;
  return r;
}

Report run_apu_product(int trials, std::uint64_t seed, int max_total, int capu_max_total,
                       const RunOptions& run) {
  if (trials < 0 || max_total < 2) throw InvalidArgument("apu product needs max_total >= 2");
  auto factor = [](Rng& rng, int size) {
    if (size <= 5 && rng.below(4) == 0) {
      for (int attempt = 0; attempt < 200; ++attempt) {
        Measure mu = random_measure(rng, size);
        if (is_apu(mu).verdict == Verdict::kPass) return mu;
      }
    }
    return random_exchangeable_ulc(rng, size);
  };
  auto results = detail::parallel_map<InstanceResult>(
      static_cast<std::size_t>(trials), run.threads, [&](std::size_t i) {
        Rng rng = Rng::for_item(seed, i);
        const int n = static_cast<int>(rng.between(1, max_total - 1));
        const int m = static_cast<int>(rng.between(1, max_total - n));
        const Measure mu = factor(rng, n);
        const Measure nu = factor(rng, m);
        InstanceResult out;
        if (!is_apu(mu).passed() || !is_apu(nu).passed()) {
          out.outcome = Outcome::kVacuous;
          return out;
        }
        const Measure prod = product(mu, nu);
        const Report apu = is_apu(prod);
        Json w{{"instance", i},
               {"mu", measure_to_json(mu)},
               {"nu", measure_to_json(nu)},
               {"conclusion", to_json(apu)}};
        if (!apu.passed()) return InstanceResult{Outcome::kFail, w};
        if (n + m <= capu_max_total && is_capu(mu).passed() && is_capu(nu).passed()) {
          out.stats["capu_products"] = 1;
          const Report capu = is_capu(prod);
          if (!capu.passed()) {
            w["conclusion"] = to_json(capu);
            return InstanceResult{Outcome::kFail, w};
          }
        }
        return out;
      });
  Report r = summarize("apu_product", results, true, seed);
  r.data["trials"] = trials;
  r.data["max_total"] = max_total;
  r.data["capu_max_total"] = capu_max_total;
  return r;
}

Report run_exchangeable_ulc_capu(int n_max, int entry_max, const RunOptions& run) {
  if (n_max < 1 || n_max > 10 || entry_max < 1) {
    throw InvalidArgument("exchangeable sweep needs 1 <= n_max <= 10 and entry_max >= 1");
  }
  const std::uint64_t base = static_cast<std::uint64_t>(entry_max) + 1;
  std::vector<std::pair<int, std::uint64_t>> blocks;  // (n, number of codes)
  std::uint64_t total = 0;
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t codes = 1;
    for (int i = 0; i <= n; ++i) codes *= base;
    blocks.emplace_back(n, codes - 1);  // code 0 is the zero sequence
    total += codes - 1;
  }
  auto results = detail::parallel_map<InstanceResult>(total, run.threads, [&](std::size_t i) {
    std::uint64_t index = i;
    int n = 0;
    for (const auto& [size, codes] : blocks) {
      if (index < codes) {
        n = size;
        break;
      }
      index -= codes;
    }
    std::uint64_t code = index + 1;
    Seq a(n + 1);
    for (int k = 0; k <= n; ++k) {
      a[k] = Rational(static_cast<long>(code % base));
      code /= base;
    }
    const bool ulc = is_ulc(a, n);
    const Report capu = is_capu(exchangeable_from_seq(a));
    InstanceResult out = classify(true, ulc == capu.passed(),
                                  Json{{"sequence", seq_strings(a)},
                                       {"ulc", ulc},
                                       {"capu", to_json(capu)}});
    if (ulc) out.stats["ulc"] = 1;
    return out;
  });
  Report r = summarize("exchangeable_ulc_capu", results, false, std::nullopt);
  r.data["n_max"] = n_max;
  r.data["entry_max"] = entry_max;
  return r;
}

Report search_matroid_capp(const std::vector<CorpusEntry>& corpus, bool capu_variant, int n_max,
                           const RunOptions& run) {
  const auto entries = filter_by_size(corpus, 0, n_max);
  auto results = detail::parallel_map<InstanceResult>(
      entries.size(), run.threads, [&](std::size_t i) {
        const CorpusEntry& e = *entries[i];
        const Report r = capu_variant ? matroid_capu_check(*e.matroid)
                                      : matroid_capp_check(*e.matroid);
        if (r.verdict == Verdict::kVacuous) return classify(false, true, nullptr);
        return classify(true, r.passed(), failure(e, r));
      });
  Report r = summarize(capu_variant ? "matroid_capu_search" : "matroid_capp_search", results,
                       true, std::nullopt);
  r.data["variant"] = capu_variant ? "capu" : "capp";
  r.data["n_max"] = n_max;
  if (capu_variant) {
    r.data["note"] = "search only; a pass is not a claim that the CAPU variant holds";
  }
  r.data["coverage"] = corpus_coverage(corpus);
  return r;
}

Report run_matroid_sweep(const std::vector<CorpusEntry>& corpus, const RunOptions& run) {
  auto results = detail::parallel_map<InstanceResult>(
      corpus.size(), run.threads, [&](std::size_t i) {
        const CorpusEntry& e = corpus[i];
        const Matroid& m = *e.matroid;
        const int n = m.ground_size();
        InstanceResult out;
        std::vector<Report> reports;
        if (n <= 11) {
          reports.push_back(matroid_capp_check(m));
          reports.push_back(mason_check(m));
          out.stats["capp_checked"] = 1;
          out.stats["mason_checked"] = 1;
        }
        reports.push_back(mason_prefix_check(m, 6));
        out.stats["prefix_checked"] = 1;
        if (n % 2 == 0 && n <= 10) {
          reports.push_back(partition_app_check(m));
          out.stats["partition_app_checked"] = 1;
        }
        for (const Report& r : reports) {
          if (r.failed()) return InstanceResult{Outcome::kFail, failure(e, r), out.stats};
        }
        return out;
      });
  Report r = summarize("matroid_sweep", results, true, std::nullopt);
  r.data["coverage"] = corpus_coverage(corpus);
  return r;
}

Report run_degree_bounds(const std::vector<CorpusEntry>& corpus, const RunOptions& run) {
  std::vector<const CorpusEntry*> entries;
  for (const auto& e : corpus) {
    const int n = e.matroid->ground_size();
    if (n >= 2 && n <= 10 && n % 2 == 0) entries.push_back(&e);
  }
  auto results = detail::parallel_map<InstanceResult>(
      entries.size(), run.threads, [&](std::size_t i) {
        const CorpusEntry& e = *entries[i];
        const Report bounds = degree_bounds_check(*e.matroid);
        const Report coloop = coloop_identity_check(e.matroid);
        InstanceResult out;
        if (coloop.failed()) return InstanceResult{Outcome::kFail, failure(e, coloop)};
        if (coloop.verdict == Verdict::kPass) out.stats["coloop_identity_checked"] = 1;
        if (bounds.verdict == Verdict::kVacuous) {
          out.outcome = Outcome::kVacuous;
          return out;
        }
        if (bounds.failed()) return InstanceResult{Outcome::kFail, failure(e, bounds), out.stats};
        out.stats["pairs_checked"] = static_cast<std::int64_t>(bounds.instances);
        return out;
      });
  Report r = summarize("degree_bounds", results, true, std::nullopt);
  r.data["coverage"] = corpus_coverage(corpus);
  return r;
}

Report run_capp_consistency(const std::vector<CorpusEntry>& corpus, int n_max, int count,
                            const RunOptions& run) {
  const auto pool = filter_by_size(corpus, 2, n_max);
  const auto picks = evenly_spaced(pool.size(), static_cast<std::size_t>(std::max(count, 0)));
  auto results = detail::parallel_map<InstanceResult>(
      picks.size(), run.threads, [&](std::size_t i) {
        const CorpusEntry& e = *pool[picks[i]];
        const Report structural = matroid_capp_check(*e.matroid);
        const Report measure = has_capp(uniform_independent_measure(*e.matroid));
        return classify(true, structural.verdict == measure.verdict,
                        Json{{"label", e.label},
                             {"matroid", e.matroid->describe()},
                             {"matroid_capp", to_json(structural)},
                             {"measure_capp", to_json(measure)}});
      });
  Report r = summarize("capp_consistency", results, true, std::nullopt);
  r.data["n_max"] = n_max;
  return r;
}

Json default_manifest(std::uint64_t seed) {
  Json suites = Json::array();
  suites.push_back({{"suite", "capp_implies_ulc"},
                    {"corpus", {{"generator", "mixed"}, {"n_min", 2}, {"n_max", 8}, {"count", 200}}}});
  suites.push_back({{"suite", "local_capp_implies_prefix_lc"},
                    {"t", 1},
                    {"corpus", {{"generator", "random"}, {"n_min", 2}, {"n_max", 6}, {"count", 300}}}});
  suites.push_back({{"suite", "local_capp_implies_prefix_lc"},
                    {"t", 2},
                    {"corpus", {{"generator", "mixed"}, {"n_min", 4}, {"n_max", 9}, {"count", 100}}}});
  suites.push_back({{"suite", "ulc_convolution"}, {"trials", 10000}, {"max_length", 12},
                    {"controls", 100}});
  suites.push_back({{"suite", "symmetric_uu_convolution"}, {"trials", 1000}, {"max_length", 13}});
  suites.push_back({{"suite", "f_sequence_sweep"}, {"max_size", 12}});
  suites.push_back({{"suite", "apu_product"}, {"trials", 1000}, {"max_total", 12},
                    {"capu_max_total", 8}});
  suites.push_back({{"suite", "exchangeable_ulc_capu"}, {"n_max", 6}, {"entry_max", 4}});
  suites.push_back({{"suite", "matroid_sweep"}});
  suites.push_back({{"suite", "matroid_capp_search"}, {"variant", "capu"}, {"n_max", 9}});
  suites.push_back({{"suite", "degree_bounds"}});
  suites.push_back({{"suite", "capp_consistency"}, {"n_max", 10}, {"count", 100}});
  return Json{{"seed", seed}, {"suites", suites}};
}

Report run_manifest(const Json& manifest, const RunOptions& run) {
  if (!manifest.is_object() || !manifest.contains("suites") || !manifest["suites"].is_array()) {
    throw InvalidArgument("manifest must be an object with a 'suites' array");
  }
  const std::uint64_t seed = manifest.value("seed", std::uint64_t{1});
  std::vector<CorpusEntry> base_corpus;
  auto corpus_with = [&](const Json& s) {
    if (base_corpus.empty()) {
      MatroidCorpusOptions options;
      options.seed = seed;
      base_corpus = matroid_corpus(options);
    }
    std::vector<CorpusEntry> corpus = base_corpus;
    if (s.contains("extra")) {
      int i = 0;
      for (const Json& d : s.at("extra")) {
        corpus.push_back({"extra#" + std::to_string(i++), "extra", matroid_from_json(d)});
      }
    }
    return corpus;
  };
  Json reports = Json::array();
  Json failed = Json::array();
  for (const Json& s : manifest["suites"]) {
    const std::string name = s.value("suite", "");
    auto allow = [&](std::initializer_list<const char*> keys) {
      for (const auto& [k, v] : s.items()) {
        if (k == "suite") continue;
        if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
          throw InvalidArgument("suite '" + name + "' has unknown parameter '" + k + "'");
        }
      }
    };
    auto corpus_spec = [&] {
      CorpusSpec spec = corpus_spec_from_json(s.value("corpus", Json::object()));
      if (!s.value("corpus", Json::object()).contains("seed")) spec.seed = seed;
      return spec;
    };
    Report r;
    if (name == "capp_implies_ulc") {
      allow({"corpus"});
      r = run_capp_implies_ulc(corpus_spec(), run);
    } else if (name == "local_capp_implies_prefix_lc") {
      allow({"corpus", "t"});
      r = run_local_capp_implies_prefix_lc(corpus_spec(), s.value("t", 1), run);
    } else if (name == "ulc_convolution") {
      allow({"trials", "max_length", "controls"});
      r = run_ulc_convolution(s.value("trials", 10000), seed, s.value("max_length", 12),
                              s.value("controls", 0), run);
    } else if (name == "symmetric_uu_convolution") {
      allow({"trials", "max_length"});
      r = run_symmetric_uu_convolution(s.value("trials", 1000), seed, s.value("max_length", 13),
                                       run);
    } else if (name == "f_sequence_sweep") {
      allow({"max_size"});
      r = run_f_sequence_sweep(s.value("max_size", 12), run);
    } else if (name == "apu_product") {
      allow({"trials", "max_total", "capu_max_total"});
      r = run_apu_product(s.value("trials", 1000), seed, s.value("max_total", 12),
                          s.value("capu_max_total", 8), run);
    } else if (name == "exchangeable_ulc_capu") {
      allow({"n_max", "entry_max"});
      r = run_exchangeable_ulc_capu(s.value("n_max", 6), s.value("entry_max", 4), run);
    } else if (name == "matroid_capp_search") {
      allow({"variant", "n_max", "extra"});
      const std::string variant = s.value("variant", "capp");
      if (variant != "capp" && variant != "capu") {
        throw InvalidArgument("variant must be 'capp' or 'capu'");
      }
      r = search_matroid_capp(corpus_with(s), variant == "capu", s.value("n_max", 11), run);
    } else if (name == "matroid_sweep") {
      allow({"extra"});
      r = run_matroid_sweep(corpus_with(s), run);
    } else if (name == "degree_bounds") {
      allow({"extra"});
      r = run_degree_bounds(corpus_with(s), run);
    } else if (name == "capp_consistency") {
      allow({"n_max", "count", "extra"});
      r = run_capp_consistency(corpus_with(s), s.value("n_max", 10), s.value("count", 100), run);
    } else {
      throw InvalidArgument("unknown suite '" + name + "'");
    }
    if (r.failed()) failed.push_back(r.check);
    reports.push_back(to_json(r));
  }
  Report out = failed.empty() ? Report::pass("manifest")
                              : Report::fail("manifest", Json{{"failed_suites", failed}});
  out.instances = reports.size();
  out.seed = seed;
  out.sampled = true;
  out.data["suites"] = reports;
  return out;
}

}  // namespace lcv
