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

#include "lcv/fields.hpp"

#include <cstdlib>

namespace lcv {
namespace {

Rational power_of_two(int e) {
  Integer p = Integer(1) << std::abs(e);
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

}  // namespace

std::vector<FieldVector> sample_fields(int n, const FieldSampleScheme& scheme) {
  if (n < 0 || scheme.grid_exponent < 0 || scheme.random_count < 0) {
    throw InvalidArgument("invalid field sample scheme");
  }
  const int b = scheme.grid_exponent;
  std::vector<FieldVector> out;
  out.push_back(FieldVector::ones(n));
  for (int e = -b; e <= b; ++e) {
    if (e == 0) continue;
    out.emplace_back(std::vector<Rational>(n, power_of_two(e)));
  }
  for (int i = 0; i < n; ++i) {
    for (int e = -b; e <= b; ++e) {
      if (e == 0) continue;
      std::vector<Rational> w(n, Rational(1));
      w[i] = power_of_two(e);
      out.emplace_back(std::move(w));
    }
  }
  Rng rng(scheme.seed);
  const std::int64_t top = std::int64_t{1} << b;
  for (int r = 0; r < scheme.random_count; ++r) {
    std::vector<Rational> w(n);
    for (int i = 0; i < n; ++i) {
      w[i] = make_rational(Integer(static_cast<long>(rng.between(1, top))),
                           Integer(static_cast<long>(rng.between(1, top))));
    }
    out.emplace_back(std::move(w));
  }
  return out;
}

std::vector<Mask> subsets_of_size(int n, int size) {
  if (n < 0 || n > kMaxGroundSize) throw InvalidArgument("bad ground set size");
  std::vector<Mask> out;
  if (size < 0 || size > n) return out;
  if (size == 0) return {0};
  const Mask last = full_mask(size) << (n - size);
  for (Mask m = full_mask(size);; m = next_same_popcount(m)) {
    out.push_back(m);
    if (m == last) break;
  }
  return out;
}

std::vector<Mask> subsets_up_to_size(int n, int max_size) {
  if (n < 0 || n > kMaxGroundSize) throw InvalidArgument("bad ground set size");
  std::vector<Mask> out;
  const Mask full = full_mask(n);
  for (Mask m = 0;; ++m) {
    if (popcount(m) <= max_size) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

}  // namespace lcv
