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

// Predicates and constructions on finite nonnegative rational sequences.
//
// A sequence (a_0 .. a_s) is
//   unimodal            if a_0 <= .. <= a_k >= .. >= a_s for some k,
//   LC                  if a_i^2 >= a_{i-1} a_{i+1} and it has no internal zeros,
//   ULC (ambient n)     if (a_i / C(n, i)) is LC,
//   ultra-unimodal      if (a_i / C(s, i)) is unimodal.
// Empty and length-1 sequences satisfy everything. Trailing zeros are fine.

#ifndef LCV_SEQ_HPP_
#define LCV_SEQ_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lcv/exact.hpp"

namespace lcv {

using Seq = std::vector<Rational>;
using SeqView = std::span<const Rational>;

// Throws InvalidArgument on a negative entry.
void require_nonnegative(SeqView a);

bool is_unimodal(SeqView a);
bool has_no_internal_zeros(SeqView a);
// a_i^2 >= a_{i-1} a_{i+1} only; internal zeros are not inspected.
bool satisfies_lc_inequalities(SeqView a);
bool is_lc(SeqView a);

// a_i / C(n, i). Throws LengthMismatch unless a.size() == n + 1.
Seq binomial_normalized(SeqView a, int n);

bool is_ulc(SeqView a, int n);
// LC of (a_i / C(n, i)) for i = 0..t. Requires a.size() == n + 1, 0 <= t <= n.
bool is_ulc_prefix(SeqView a, int n, int t);

bool is_symmetric(SeqView p);
bool is_ultra_unimodal(SeqView p);

Seq convolve(SeqView a, SeqView b);

// (C(s, i) * [k <= i <= s - k]) for i = 0..s. Requires 0 <= 2k <= s.
Seq binomial_slice(int s, int k);

struct SliceTerm {
  Rational coefficient;
  int k = 0;
  friend bool operator==(const SliceTerm&, const SliceTerm&) = default;
};

// Writes a symmetric ultra-unimodal p of length s+1 as a nonnegative
// combination of binomial_slice(s, k). Terms with zero coefficient are
// omitted. Throws InvalidArgument when p is not symmetric ultra-unimodal.
std::vector<SliceTerm> symmetric_uu_decompose(SeqView p);
Seq recombine_slices(int s, std::span<const SliceTerm> terms);

struct FSequence {
  Seq values;  // f_0 .. f_{s+t}
  bool monotone = true;
  std::optional<int> first_violation;  // smallest j < (s+t)/2 with f_j > f_{j+1}
};

// f_j = C(s+t, j)^{-1} * sum_i C(s, i)[k <= i <= s-k] C(t, j-i)[l <= j-i <= t-l],
// i.e. the probability that a uniform j-subset of S u T lands in the slab
// {Z : k <= |Z n S| <= s-k, l <= |Z n T| <= t-l}, together with the check
// f_j <= f_{j+1} for every j < (s+t)/2.
FSequence f_sequence(int s, int t, int k, int l);

// "1,2,1" or "1/2, 3" -> exact sequence.
Seq parse_seq_literal(std::string_view text);
std::string seq_to_string(SeqView a);

}  // namespace lcv

#endif  // LCV_SEQ_HPP_
