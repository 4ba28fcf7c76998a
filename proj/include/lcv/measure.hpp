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

// Measures on {0,1}^n with exact rational weights, the standard
// transformations (conditioning, projection, external fields, products) and
// the antipodal-pairs statistics built on
//
//   gamma_i(mu) = C(n, i)^{-1} * sum_{|eta| = i} mu(eta) mu(1 - eta).
//
// Weights are stored unnormalized; every statistic normalizes internally and
// every predicate is invariant under rescaling all weights.

#ifndef LCV_MEASURE_HPP_
#define LCV_MEASURE_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lcv/exact.hpp"
#include "lcv/report.hpp"
#include "lcv/seq.hpp"

namespace lcv {

struct WeightedPoint {
  Mask mask = 0;
  Rational weight;
  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

// Immutable sparse measure. Points absent from the support have weight 0.
class Measure {
 public:
  // Zero weights are dropped; negative weights, duplicate masks, masks wider
  // than n bits and an all-zero measure are rejected with InvalidArgument.
  Measure(int n, std::vector<WeightedPoint> points);

  static Measure uniform(int n);
  static Measure point_mass(int n, Mask at);

  int n() const { return n_; }
  std::span<const WeightedPoint> points() const { return points_; }
  std::size_t support_size() const { return points_.size(); }
  const Rational& total() const { return total_; }
  Rational weight(Mask mask) const;
  Rational probability(Mask mask) const { return weight(mask) / total_; }

  // True when the two measures agree after normalization.
  bool proportional_to(const Measure& other) const;

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.n_ == b.n_ && a.points_ == b.points_;
  }

 private:
  int n_ = 0;
  std::vector<WeightedPoint> points_;  // sorted by mask
  Rational total_;
};

// A set of coordinates pinned to values. Coordinates are 0-based.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  // `values` bits outside `fixed` must be clear.
  PartialAssignment(int n, Mask fixed, Mask values);
  // From (index, value) pairs; indices distinct, inside [0, n), values 0/1.
  static PartialAssignment from_pairs(int n,
                                      std::span<const std::pair<int, int>> pairs);

  int n() const { return n_; }
  Mask fixed() const { return fixed_; }
  Mask values() const { return values_; }
  int size() const { return popcount(fixed_); }

 private:
  int n_ = 0;
  Mask fixed_ = 0;
  Mask values_ = 0;
};

// External field W in (0, inf)^n.
class FieldVector {
 public:
  explicit FieldVector(std::vector<Rational> w);
  static FieldVector ones(int n) { return FieldVector(std::vector<Rational>(n, Rational(1))); }

  int size() const { return static_cast<int>(w_.size()); }
  const Rational& operator[](int i) const { return w_[i]; }
  std::span<const Rational> values() const { return w_; }

 private:
  std::vector<Rational> w_;
};

// Normalized level masses (mu(|eta| = i))_{i=0..n}.
Seq rank_sequence(const Measure& mu);

Rational gamma(const Measure& mu, int i);
Seq gamma_sequence(const Measure& mu);

// Measure on the n - |a| free coordinates (kept in increasing order).
// Throws ZeroMassEvent if the pinned event has weight zero.
Measure condition(const Measure& mu, const PartialAssignment& a);

// Marginal on the coordinates in `keep` (kept in increasing order).
Measure project(const Measure& mu, Mask keep);

// mu(eta) * prod_{i : eta_i = 1} W_i.
Measure impose_field(const Measure& mu, const FieldVector& w);

// mu on the low coordinates, nu on the next nu.n() coordinates.
// Throws CapExceeded when the combined size exceeds kMaxGroundSize.
Measure product(const Measure& mu, const Measure& nu);

// mu(eta) = a_{|eta|} / C(n, |eta|) with n = a.size() - 1.
Measure exchangeable_from_seq(SeqView a);

// mu'(X) = mu([n] \ X).
Measure complement_measure(const Measure& mu);

// Sum of muhat(X) muhat(Y) over ordered pairs with |X| = j, |Y| = k and
// |X n Y| = i (muhat normalized).
Rational z_count(const Measure& mu, int j, int k, int i);

// Antipodal pairs property, n = 2k: gamma_k >= gamma_{k-1}. The margin is
// gamma_k - gamma_{k-1}. Vacuous for n = 0; OddGroundSet for odd n.
Report has_app(const Measure& mu);

struct ConditioningOptions {
  // Check only half-windows k in [1, max_half_window].
  std::optional<int> max_half_window;
  int cap_n = 16;
};

// Every conditioning onto 2k free coordinates has the APP. Zero-mass
// conditionings pass vacuously. Witness: {free, pinned, pinned_values,
// assignment, k}, coordinates as 0-based masks; assignment lists the pinned
// (index, value) pairs.
Report has_capp(const Measure& mu, const ConditioningOptions& options = {});

// (gamma_i) nondecreasing up to the middle (and, by symmetry, unimodal).
Report is_apu(const Measure& mu);
// APU for every positive-mass conditioning on every subset of coordinates.
Report is_capu(const Measure& mu, const ConditioningOptions& options = {});

// Pr(eta_i = eta_j = 1) <= Pr(eta_i = 1) Pr(eta_j = 1) for all i != j.
Report is_nc(const Measure& mu);

Report is_ulc_measure(const Measure& mu);
Report is_lc_measure(const Measure& mu);
Report is_unimodal_measure(const Measure& mu);

// For every field and every target set S (|S| = 2k) the field-then-project
// measure nu satisfies
//   sum_{|eta|=k} nu(eta) nu(1-eta) >= lambda * sum_{|eta|=k-1} nu(eta) nu(1-eta).
// The verdict only covers the supplied sample and the report is SAMPLED.
Report lambda_ray_check(const Measure& mu, int k, const Rational& lambda,
                        std::span<const FieldVector> fields,
                        std::span<const Mask> targets);

// Every field-then-project measure onto a target of size <= m is ULC.
Report blc_check(const Measure& mu, int m, std::span<const FieldVector> fields,
                 std::span<const Mask> targets);

// NC after every sampled field.
Report rayleigh_check(const Measure& mu, std::span<const FieldVector> fields);

}  // namespace lcv

#endif  // LCV_MEASURE_HPP_
