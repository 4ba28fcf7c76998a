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

// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals (GMP), a thread-safe Pascal cache, subset bitmask
// helpers and a small deterministic random source.

#ifndef LCV_EXACT_HPP_
#define LCV_EXACT_HPP_

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcv {

using Integer = mpz_class;
using Rational = mpq_class;

// A point of {0,1}^n; bit i holds coordinate i+1.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Conditioning on an event of weight zero.
class ZeroMassEvent : public Error {
 public:
  using Error::Error;
};

// The antipodal pairs property is only defined on an even ground set.
class OddGroundSet : public Error {
 public:
  using Error::Error;
};

// A dense enumeration would exceed a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// C(n, k), with C(n, k) = 0 whenever k < 0, n < 0 or k > n. Backed by a
// Pascal triangle that grows on demand; safe for concurrent callers and the
// returned reference stays valid for the lifetime of the process.
const Integer& binomial(long n, long k);

// Parses "7", "-3/4", "10/6" (normalized on return).
Rational parse_rational(std::string_view text);

// "p/q" or "p" when q == 1.
std::string to_string(const Rational& value);

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : static_cast<Mask>((std::uint64_t{1} << n) - 1);
}

// Gathers the bits of `x` selected by `select` into the low bits (pext).
inline Mask compress_bits(Mask x, Mask select) {
  Mask out = 0;
  int pos = 0;
  for (Mask s = select; s != 0; s &= s - 1, ++pos) {
    if (x & (s & -s)) out |= Mask{1} << pos;
  }
  return out;
}

// Scatters the low bits of `x` onto the positions of `select` (pdep).
inline Mask expand_bits(Mask x, Mask select) {
  Mask out = 0;
  int pos = 0;
  for (Mask s = select; s != 0; s &= s - 1, ++pos) {
    if (x & (Mask{1} << pos)) out |= s & -s;
  }
  return out;
}

// Next mask with the same popcount (Gosper's hack). Undefined for 0.
inline Mask next_same_popcount(Mask v) {
  const Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the bounded draws below avoid the
// implementation-defined std::*_distribution types so that seeded corpora are
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Seeds an independent stream for item `index` of a seeded collection.
  static Rng for_item(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lcv

#endif  // LCV_EXACT_HPP_
