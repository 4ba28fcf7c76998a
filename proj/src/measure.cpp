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

#include "lcv/measure.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "conditional_scan.hpp"

namespace lcv {
namespace {

Json seq_to_json(SeqView a) {
  Json out = Json::array();
  for (const Rational& x : a) out.push_back(to_string(x));
  return out;
}

// Unnormalized antipodal sums S_i = sum_{|eta| = i} w(eta) w(1 - eta).
Seq antipodal_sums(const Measure& mu) {
  Seq sums(static_cast<std::size_t>(mu.n()) + 1);
  const Mask full = full_mask(mu.n());
  for (const WeightedPoint& p : mu.points()) {
    const Rational other = mu.weight(~p.mask & full);
    if (other != 0) sums[popcount(p.mask)] += p.weight * other;
  }
  return sums;
}

void require_cap(const Measure& mu, int cap_n, const char* what) {
  if (mu.n() > cap_n) {
    throw CapExceeded(std::string(what) + ": ground set of size " +
                      std::to_string(mu.n()) + " exceeds cap " +
                      std::to_string(cap_n));
  }
}

Json conditioning_witness(const detail::ConditionalFailure& f, int n) {
  const Mask pinned = full_mask(n) & ~f.free;
  Json assignment = Json::array();
  for (int i = 0; i < n; ++i) {
    if (pinned & (Mask{1} << i)) {
      assignment.push_back(Json::array({i, (f.pinned_values >> i) & 1}));
    }
  }
  return Json{{"free", f.free}, {"pinned", pinned},
              {"pinned_values", f.pinned_values}, {"assignment", assignment}};
}

}  // namespace

Measure::Measure(int n, std::vector<WeightedPoint> points) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InvalidArgument("ground set size " + std::to_string(n) +
                          " outside 0.." + std::to_string(kMaxGroundSize));
  }
  const Mask full = full_mask(n);
  std::erase_if(points, [](const WeightedPoint& p) { return p.weight == 0; });
  std::sort(points.begin(), points.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) { return a.mask < b.mask; });
  total_ = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (sgn(points[i].weight) < 0) throw InvalidArgument("negative weight");
    if (points[i].mask & ~full) {
      throw InvalidArgument("mask " + std::to_string(points[i].mask) +
                            " does not fit in " + std::to_string(n) + " bits");
    }
    if (i > 0 && points[i].mask == points[i - 1].mask) {
      throw InvalidArgument("duplicate mask " + std::to_string(points[i].mask));
    }
    points[i].weight.canonicalize();
    total_ += points[i].weight;
  }
  if (points.empty()) throw InvalidArgument("measure has zero total weight");
  points_ = std::move(points);
}

Measure Measure::uniform(int n) {
  if (n < 0 || n > kMaxGroundSize) throw InvalidArgument("bad ground set size");
  std::vector<WeightedPoint> pts;
  pts.reserve(std::size_t{1} << n);
  for (Mask m = 0; m <= full_mask(n); ++m) {
    pts.push_back({m, Rational(1)});
    if (m == full_mask(n)) break;
  }
  return Measure(n, std::move(pts));
}

Measure Measure::point_mass(int n, Mask at) { return Measure(n, {{at, Rational(1)}}); }

Rational Measure::weight(Mask mask) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), mask,
                             [](const WeightedPoint& p, Mask m) { return p.mask < m; });
  if (it == points_.end() || it->mask != mask) return Rational(0);
  return it->weight;
}

bool Measure::proportional_to(const Measure& other) const {
  if (n_ != other.n_ || points_.size() != other.points_.size()) return false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].mask != other.points_[i].mask) return false;
    if (points_[i].weight * other.total_ != other.points_[i].weight * total_) return false;
  }
  return true;
}

PartialAssignment::PartialAssignment(int n, Mask fixed, Mask values)
    : n_(n), fixed_(fixed), values_(values) {
  if (n < 0 || n > kMaxGroundSize) throw InvalidArgument("bad ground set size");
  if (fixed & ~full_mask(n)) throw IndexOutOfRange("assignment index outside [n]");
  if (values & ~fixed) throw InvalidArgument("assignment value on a free coordinate");
}

PartialAssignment PartialAssignment::from_pairs(
    int n, std::span<const std::pair<int, int>> pairs) {
  Mask fixed = 0;
  Mask values = 0;
  for (const auto& [index, value] : pairs) {
    if (index < 0 || index >= n) {
      throw IndexOutOfRange("assignment index " + std::to_string(index) + " outside [n]");
    }
    if (value != 0 && value != 1) throw InvalidArgument("assignment value must be 0 or 1");
    const Mask bit = Mask{1} << index;
    if (fixed & bit) throw InvalidArgument("assignment indices must be distinct");
    fixed |= bit;
    if (value) values |= bit;
  }
  return PartialAssignment(n, fixed, values);
}

FieldVector::FieldVector(std::vector<Rational> w) : w_(std::move(w)) {
  for (Rational& x : w_) {
    if (sgn(x) <= 0) throw InvalidArgument("external field entries must be positive");
    x.canonicalize();
  }
}

Seq rank_sequence(const Measure& mu) {
  Seq levels(static_cast<std::size_t>(mu.n()) + 1);
  for (const WeightedPoint& p : mu.points()) levels[popcount(p.mask)] += p.weight;
  for (Rational& x : levels) x /= mu.total();
  return levels;
}

Seq gamma_sequence(const Measure& mu) {
  Seq g = antipodal_sums(mu);
  const Rational total_sq = mu.total() * mu.total();
  for (int i = 0; i <= mu.n(); ++i) g[i] /= Rational(binomial(mu.n(), i)) * total_sq;
  return g;
}

Rational gamma(const Measure& mu, int i) {
  if (i < 0 || i > mu.n()) {
    throw IndexOutOfRange("level " + std::to_string(i) + " outside 0.." +
                          std::to_string(mu.n()));
  }
  return gamma_sequence(mu)[i];
}

Measure condition(const Measure& mu, const PartialAssignment& a) {
  if (a.n() != mu.n()) throw InvalidArgument("assignment and measure sizes differ");
  const Mask free = full_mask(mu.n()) & ~a.fixed();
  std::vector<WeightedPoint> pts;
  for (const WeightedPoint& p : mu.points()) {
    if ((p.mask & a.fixed()) == a.values()) {
      pts.push_back({compress_bits(p.mask, free), p.weight});
    }
  }
  if (pts.empty()) throw ZeroMassEvent("conditioning on an event of weight zero");
  return Measure(mu.n() - a.size(), std::move(pts));
}

Measure project(const Measure& mu, Mask keep) {
  if (keep & ~full_mask(mu.n())) throw IndexOutOfRange("projection set outside [n]");
  std::map<Mask, Rational> acc;
  for (const WeightedPoint& p : mu.points()) acc[compress_bits(p.mask, keep)] += p.weight;
  std::vector<WeightedPoint> pts;
  pts.reserve(acc.size());
  for (auto& [m, w] : acc) pts.push_back({m, std::move(w)});
  return Measure(popcount(keep), std::move(pts));
}

Measure impose_field(const Measure& mu, const FieldVector& w) {
  if (w.size() != mu.n()) throw LengthMismatch("field length differs from n");
  std::vector<WeightedPoint> pts;
  pts.reserve(mu.support_size());
  for (const WeightedPoint& p : mu.points()) {
    Rational x = p.weight;
    for (Mask m = p.mask; m != 0; m &= m - 1) x *= w[std::countr_zero(m)];
    pts.push_back({p.mask, std::move(x)});
  }
  return Measure(mu.n(), std::move(pts));
}

Measure product(const Measure& mu, const Measure& nu) {
  const int n = mu.n() + nu.n();
  if (n > kMaxGroundSize) {
    throw CapExceeded("product ground set " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxGroundSize));
  }
  std::vector<WeightedPoint> pts;
  pts.reserve(mu.support_size() * nu.support_size());
  for (const WeightedPoint& q : nu.points()) {
    for (const WeightedPoint& p : mu.points()) {
      pts.push_back({p.mask | (q.mask << mu.n()), p.weight * q.weight});
    }
  }
  return Measure(n, std::move(pts));
}

Measure exchangeable_from_seq(SeqView a) {
  if (a.empty()) throw InvalidArgument("exchangeable measure needs a nonempty sequence");
  require_nonnegative(a);
  const int n = static_cast<int>(a.size()) - 1;
  if (n > kMaxGroundSize) throw CapExceeded("sequence too long for a dense measure");
  if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) {
    throw InvalidArgument("exchangeable measure from an all-zero sequence");
  }
  Seq per_point(a.size());
  for (int i = 0; i <= n; ++i) per_point[i] = a[i] / Rational(binomial(n, i));
  std::vector<WeightedPoint> pts;
  const Mask full = full_mask(n);
  for (Mask m = 0;; ++m) {
    if (per_point[popcount(m)] != 0) pts.push_back({m, per_point[popcount(m)]});
    if (m == full) break;
  }
  return Measure(n, std::move(pts));
}

Measure complement_measure(const Measure& mu) {
  std::vector<WeightedPoint> pts;
  const Mask full = full_mask(mu.n());
  for (const WeightedPoint& p : mu.points()) pts.push_back({~p.mask & full, p.weight});
  return Measure(mu.n(), std::move(pts));
}

Rational z_count(const Measure& mu, int j, int k, int i) {
  const int n = mu.n();
  if (j < 0 || j > n || k < 0 || k > n || i < 0 || i > std::min(j, k)) {
    throw IndexOutOfRange("z_count indices out of range");
  }
  std::vector<const WeightedPoint*> left;
  std::vector<const WeightedPoint*> right;
  for (const WeightedPoint& p : mu.points()) {
    if (popcount(p.mask) == j) left.push_back(&p);
    if (popcount(p.mask) == k) right.push_back(&p);
  }
  Rational sum = 0;
  for (const WeightedPoint* x : left) {
    for (const WeightedPoint* y : right) {
      if (popcount(x->mask & y->mask) == i) sum += x->weight * y->weight;
    }
  }
  return sum / (mu.total() * mu.total());
}

Report has_app(const Measure& mu) {
  if (mu.n() % 2 != 0) {
    throw OddGroundSet("antipodal pairs property needs an even ground set, got n = " +
                       std::to_string(mu.n()));
  }
  if (mu.n() == 0) return Report::vacuous("app");
  const int k = mu.n() / 2;
  const Seq g = gamma_sequence(mu);
  const Rational margin = g[k] - g[k - 1];
  Report r = Report::from_bool(
      "app", sgn(margin) >= 0,
      Json{{"k", k}, {"gamma_k", to_string(g[k])}, {"gamma_k_minus_1", to_string(g[k - 1])}});
  r.margin = margin;
  r.data["gamma"] = seq_to_json(g);
  return r;
}

Report has_capp(const Measure& mu, const ConditioningOptions& options) {
  require_cap(mu, options.cap_n, "has_capp");
  const int k_max = options.max_half_window.value_or(mu.n() / 2);
  if (k_max < 0) throw InvalidArgument("negative half-window bound");
  std::uint64_t checked = 0;
  auto failure = detail::with_dense_weights(mu, [&](const auto& dense) {
    return detail::scan_capp(dense, k_max, checked);
  });
  const std::string name = options.max_half_window
                               ? "capp[t=" + std::to_string(k_max) + "]"
                               : std::string("capp");
  if (!failure) {
    Report r = checked == 0 ? Report::vacuous(name) : Report::pass(name);
    r.instances = checked;
    return r;
  }
  const int k = failure->half_window;
  const Rational upper = make_rational(failure->sums[k], binomial(2 * k, k));
  const Rational lower = make_rational(failure->sums[k - 1], binomial(2 * k, k - 1));
  Json w = conditioning_witness(*failure, mu.n());
  w["k"] = k;
  Report r = Report::fail(name, std::move(w));
  r.margin = (upper - lower) / Rational(failure->mass * failure->mass);
  r.instances = checked;
  return r;
}

Report is_apu(const Measure& mu) {
  const Seq g = gamma_sequence(mu);
  std::optional<Rational> margin;
  for (int i = 0; i + 1 <= mu.n() / 2; ++i) {
    const Rational step = g[i + 1] - g[i];
    if (!margin || step < *margin) margin = step;
    if (sgn(step) < 0) {
      Report r = Report::fail("apu", Json{{"index", i}, {"gamma", seq_to_json(g)}});
      r.margin = step;
      return r;
    }
  }
  Report r = Report::pass("apu");
  r.margin = margin;
  r.data["gamma"] = seq_to_json(g);
  return r;
}

Report is_capu(const Measure& mu, const ConditioningOptions& options) {
  require_cap(mu, options.cap_n, "is_capu");
  std::uint64_t checked = 0;
  auto failure = detail::with_dense_weights(
      mu, [&](const auto& dense) { return detail::scan_capu(dense, checked); });
  if (!failure) {
    Report r = Report::pass("capu");
    r.instances = checked;
    return r;
  }
  const int f = popcount(failure->free);
  const int j = failure->index;
  const Rational lo = make_rational(failure->sums[j], binomial(f, j));
  const Rational hi = make_rational(failure->sums[j + 1], binomial(f, j + 1));
  Json w = conditioning_witness(*failure, mu.n());
  w["index"] = j;
  Report r = Report::fail("capu", std::move(w));
  r.margin = (hi - lo) / Rational(failure->mass * failure->mass);
  r.instances = checked;
  return r;
}

Report is_nc(const Measure& mu) {
  const int n = mu.n();
  std::vector<Rational> single(n);
  std::vector<Rational> pair(static_cast<std::size_t>(n) * n);
  for (const WeightedPoint& p : mu.points()) {
    for (Mask a = p.mask; a != 0; a &= a - 1) {
      const int i = std::countr_zero(a);
      single[i] += p.weight;
      for (Mask b = a & (a - 1); b != 0; b &= b - 1) {
        pair[static_cast<std::size_t>(i) * n + std::countr_zero(b)] += p.weight;
      }
    }
  }
  const Rational total_sq = mu.total() * mu.total();
  std::optional<Rational> margin;
  Json witness;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Pr(i) Pr(j) - Pr(i, j)
      const Rational gap =
          (single[i] * single[j] - pair[static_cast<std::size_t>(i) * n + j] * mu.total()) /
          total_sq;
      if (!margin || gap < *margin) {
        margin = gap;
        if (sgn(gap) < 0) witness = Json{{"i", i}, {"j", j}};
      }
    }
  }
  Report r = (margin && sgn(*margin) < 0) ? Report::fail("nc", witness)
                                          : Report::pass("nc");
  r.margin = margin;
  return r;
}

Report is_ulc_measure(const Measure& mu) {
  const Seq rank = rank_sequence(mu);
  return Report::from_bool("ulc", is_ulc(rank, mu.n()),
                           Json{{"rank_sequence", seq_to_json(rank)}});
}

Report is_lc_measure(const Measure& mu) {
  const Seq rank = rank_sequence(mu);
  return Report::from_bool("lc", is_lc(rank), Json{{"rank_sequence", seq_to_json(rank)}});
}

Report is_unimodal_measure(const Measure& mu) {
  const Seq rank = rank_sequence(mu);
  return Report::from_bool("unimodal", is_unimodal(rank),
                           Json{{"rank_sequence", seq_to_json(rank)}});
}

namespace {

Json field_to_json(const FieldVector& w) {
  Json out = Json::array();
  for (const Rational& x : w.values()) out.push_back(to_string(x));
  return out;
}

void require_field_sizes(const Measure& mu, std::span<const FieldVector> fields) {
  for (const FieldVector& w : fields) {
    if (w.size() != mu.n()) throw LengthMismatch("field length differs from n");
  }
}

Report sampled_result(std::string name, std::optional<Json> witness,
                      std::uint64_t instances, std::optional<Rational> margin) {
  Report r = instances == 0 ? Report::vacuous(name)
             : witness      ? Report::fail(name, *witness)
                            : Report::pass(name);
  r.sampled = true;
  r.instances = instances;
  r.margin = std::move(margin);
  return r;
}

}  // namespace

Report lambda_ray_check(const Measure& mu, int k, const Rational& lambda,
                        std::span<const FieldVector> fields, std::span<const Mask> targets) {
  if (k < 1 || 2 * k > mu.n()) {
    throw InvalidArgument("lambda-Ray needs 1 <= k and 2k <= n (k = " + std::to_string(k) +
                          ")");
  }
  if (sgn(lambda) <= 0) throw InvalidArgument("lambda must be positive");
  require_field_sizes(mu, fields);
  for (Mask t : targets) {
    if (popcount(t) != 2 * k || (t & ~full_mask(mu.n()))) {
      throw InvalidArgument("lambda-Ray target must be a 2k-subset of [n]");
    }
  }
  std::optional<Json> witness;
  std::optional<Rational> margin;
  std::uint64_t count = 0;
  for (std::size_t f = 0; f < fields.size() && !witness; ++f) {
    const Measure tilted = impose_field(mu, fields[f]);
    for (Mask t : targets) {
      const Measure nu = project(tilted, t);
      const Seq sums = antipodal_sums(nu);
      const Rational gap = (sums[k] - lambda * sums[k - 1]) / (nu.total() * nu.total());
      ++count;
      if (!margin || gap < *margin) margin = gap;
      if (sgn(gap) < 0) {
        witness = Json{{"field_index", f}, {"field", field_to_json(fields[f])}, {"target", t}};
        break;
      }
    }
  }
  return sampled_result("lambda_ray[k=" + std::to_string(k) + "]", witness, count, margin);
}

Report blc_check(const Measure& mu, int m, std::span<const FieldVector> fields,
                 std::span<const Mask> targets) {
  if (m < 0 || m > mu.n()) throw InvalidArgument("BLC bound m must satisfy 0 <= m <= n");
  require_field_sizes(mu, fields);
  for (Mask t : targets) {
    if (popcount(t) > m || (t & ~full_mask(mu.n()))) {
      throw InvalidArgument("BLC target must be a subset of [n] of size <= m");
    }
  }
  std::optional<Json> witness;
  std::uint64_t count = 0;
  for (std::size_t f = 0; f < fields.size() && !witness; ++f) {
    const Measure tilted = impose_field(mu, fields[f]);
    for (Mask t : targets) {
      const Measure nu = project(tilted, t);
      ++count;
      const Seq rank = rank_sequence(nu);
      if (!is_ulc(rank, nu.n())) {
        witness = Json{{"field_index", f},
                       {"field", field_to_json(fields[f])},
                       {"target", t},
                       {"rank_sequence", seq_to_json(rank)}};
        break;
      }
    }
  }
  return sampled_result("blc[m=" + std::to_string(m) + "]", witness, count, std::nullopt);
}

Report rayleigh_check(const Measure& mu, std::span<const FieldVector> fields) {
  require_field_sizes(mu, fields);
  std::optional<Json> witness;
  std::optional<Rational> margin;
  std::uint64_t count = 0;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const Report nc = is_nc(impose_field(mu, fields[f]));
    ++count;
    if (nc.margin && (!margin || *nc.margin < *margin)) margin = nc.margin;
    if (nc.failed()) {
      witness = Json{{"field_index", f}, {"field", field_to_json(fields[f])},
                     {"pair", nc.witness}};
      break;
    }
  }
  return sampled_result("rayleigh", witness, count, margin);
}

}  // namespace lcv
