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

// Exhaustive scans over all conditionings of a measure.
//
// A conditioning is a pair (F, xi): F is the set of free coordinates, xi the
// values of the pinned ones (a mask disjoint from F). For each pair the scan
// accumulates
//   S_j = sum_{X subset F, |X| = j} w(xi | X) * w(xi | F \ X),
// which is gamma_j of the conditioned measure up to the common positive
// factor C(|F|, j)^{-1} / mass^2.
//
// Weights are first rescaled to integers (all predicates are scale
// invariant). When they fit in 31 bits the scan runs on int64 weights with
// __int128 accumulators; otherwise it falls back to GMP integers.

#ifndef LCV_SRC_CONDITIONAL_SCAN_HPP_
#define LCV_SRC_CONDITIONAL_SCAN_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "lcv/exact.hpp"
#include "lcv/measure.hpp"

namespace lcv::detail {

using Int128 = __int128;

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(const Integer& v) { return v; }
inline Integer to_integer(Int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v)
                                 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

template <class W>
struct AccumulatorFor {
  using type = Integer;
};
template <>
struct AccumulatorFor<std::int64_t> {
  using type = Int128;
};

template <class W>
struct DenseWeights {
  int n = 0;
  std::vector<W> w;          // indexed by mask
  std::vector<Mask> support;  // ascending
};

// Calls fn(const DenseWeights<W>&) with the narrowest exact representation.
template <class Fn>
decltype(auto) with_dense_weights(const Measure& mu, Fn&& fn) {
  Integer lcm = 1;
  for (const WeightedPoint& p : mu.points()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.weight.get_den().get_mpz_t());
  }
  std::vector<Integer> scaled;
  scaled.reserve(mu.support_size());
  bool small = true;
  const Integer limit = Integer(1) << 31;
  for (const WeightedPoint& p : mu.points()) {
    scaled.push_back(p.weight.get_num() * (lcm / p.weight.get_den()));
    if (scaled.back() >= limit) small = false;
  }
  const std::size_t size = std::size_t{1} << mu.n();
  std::vector<Mask> support;
  support.reserve(mu.support_size());
  for (const WeightedPoint& p : mu.points()) support.push_back(p.mask);
  if (small) {
    DenseWeights<std::int64_t> dense{mu.n(), std::vector<std::int64_t>(size, 0), support};
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      dense.w[support[i]] = scaled[i].get_si();
    }
    return fn(static_cast<const DenseWeights<std::int64_t>&>(dense));
  }
  DenseWeights<Integer> dense{mu.n(), std::vector<Integer>(size), support};
  for (std::size_t i = 0; i < scaled.size(); ++i) dense.w[support[i]] = scaled[i];
  return fn(static_cast<const DenseWeights<Integer>&>(dense));
}

// Distinct pinned patterns xi = s & ~free over the support, i.e. exactly the
// positive-mass conditionings with free set `free`.
inline void pinned_patterns(std::span<const Mask> support, Mask free,
                            std::vector<Mask>& out) {
  out.clear();
  for (Mask s : support) out.push_back(s & ~free);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

template <class Acc, class W>
inline Acc product_of(const W& a, const W& b) {
  if constexpr (std::is_same_v<Acc, Int128>) {
    return static_cast<Int128>(a) * b;
  } else {
    return Acc(a * b);
  }
}

template <class W>
Integer mass_of(const DenseWeights<W>& t, Mask free, Mask xi) {
  Integer mass = 0;
  for (Mask x = free;; x = (x - 1) & free) {
    mass += to_integer(t.w[xi | x]);
    if (x == 0) break;
  }
  return mass;
}

struct ConditionalFailure {
  int half_window = 0;  // k for APP scans
  int index = 0;        // first decreasing level for APU scans
  Mask free = 0;
  Mask pinned_values = 0;
  std::vector<Integer> sums;  // S_j over the free set
  Integer mass;
};

// APP on every conditioning with 2k free coordinates, k = 1..k_max.
// `checked` receives the number of positive-mass conditionings inspected.
template <class W>
std::optional<ConditionalFailure> scan_capp(const DenseWeights<W>& t, int k_max,
                                            std::uint64_t& checked) {
  using Acc = typename AccumulatorFor<W>::type;
  std::vector<Mask> patterns;
  checked = 0;
  for (int k = 1; k <= k_max && 2 * k <= t.n; ++k) {
    const Mask first = full_mask(2 * k);
    const Mask last = first << (t.n - 2 * k);
    for (Mask free = first;; free = next_same_popcount(free)) {
      pinned_patterns(t.support, free, patterns);
      for (Mask xi : patterns) {
        Acc upper = 0;  // S_k
        Acc lower = 0;  // S_{k-1}
        for (Mask x = free;; x = (x - 1) & free) {
          const int level = popcount(x);
          if (level == k) {
            upper += product_of<Acc>(t.w[xi | x], t.w[xi | (free ^ x)]);
          } else if (level == k - 1) {
            lower += product_of<Acc>(t.w[xi | x], t.w[xi | (free ^ x)]);
          }
          if (x == 0) break;
        }
        ++checked;
        // gamma_k >= gamma_{k-1}  <=>  S_k / C(2k,k) >= S_{k-1} / C(2k,k-1)
        //                        <=>  k S_k >= (k+1) S_{k-1}.
        if (upper * Acc(k) < lower * Acc(k + 1)) {
          ConditionalFailure f;
          f.half_window = k;
          f.free = free;
          f.pinned_values = xi;
          f.sums.assign(2 * k + 1, Integer(0));
          f.sums[k] = to_integer(upper);
          f.sums[k - 1] = to_integer(lower);
          f.mass = mass_of(t, free, xi);
          return f;
        }
      }
      if (free == last) break;
    }
  }
  return std::nullopt;
}

// APU on every conditioning (every free set, every positive-mass pinning).
template <class W>
std::optional<ConditionalFailure> scan_capu(const DenseWeights<W>& t,
                                            std::uint64_t& checked) {
  using Acc = typename AccumulatorFor<W>::type;
  const Mask full = full_mask(t.n);
  std::vector<Mask> patterns;
  std::vector<Acc> sums;
  checked = 0;
  for (Mask free = 0;; ++free) {
    const int f = popcount(free);
    pinned_patterns(t.support, free, patterns);
    for (Mask xi : patterns) {
      sums.assign(f + 1, Acc(0));
      for (Mask x = free;; x = (x - 1) & free) {
        sums[popcount(x)] += product_of<Acc>(t.w[xi | x], t.w[xi | (free ^ x)]);
        if (x == 0) break;
      }
      ++checked;
      for (int j = 0; j + 1 <= f / 2; ++j) {
        // gamma_j <= gamma_{j+1}  <=>  S_j C(f, j+1) <= S_{j+1} C(f, j).
        const Acc lhs = sums[j] * Acc(binomial(f, j + 1).get_si());
        const Acc rhs = sums[j + 1] * Acc(binomial(f, j).get_si());
        if (lhs > rhs) {
          ConditionalFailure fail;
          fail.index = j;
          fail.free = free;
          fail.pinned_values = xi;
          for (const Acc& s : sums) fail.sums.push_back(to_integer(s));
          fail.mass = mass_of(t, free, xi);
          return fail;
        }
      }
    }
    if (free == full) break;
  }
  return std::nullopt;
}

}  // namespace lcv::detail

#endif  // LCV_SRC_CONDITIONAL_SCAN_HPP_
