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

#include "lcv/seq.hpp"

#include <string>

namespace lcv {

void require_nonnegative(SeqView a) {
  for (const Rational& x : a) {
    if (sgn(x) < 0) throw InvalidArgument("sequence entry is negative");
  }
}

bool is_unimodal(SeqView a) {
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  return i + 1 >= a.size();
}

bool has_no_internal_zeros(SeqView a) {
  std::size_t first = 0;
  while (first < a.size() && a[first] == 0) ++first;
  std::size_t last = a.size();
  while (last > first && a[last - 1] == 0) --last;
  for (std::size_t i = first; i < last; ++i) {
    if (a[i] == 0) return false;
  }
  return true;
}

bool satisfies_lc_inequalities(SeqView a) {
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  }
  return true;
}

bool is_lc(SeqView a) {
  return has_no_internal_zeros(a) && satisfies_lc_inequalities(a);
}

Seq binomial_normalized(SeqView a, int n) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) + 1) {
    throw LengthMismatch("sequence length " + std::to_string(a.size()) +
                         " does not match ambient size " + std::to_string(n));
  }
  Seq out(a.size());
  for (int i = 0; i <= n; ++i) out[i] = a[i] / Rational(binomial(n, i));
  return out;
}

bool is_ulc(SeqView a, int n) { return is_lc(binomial_normalized(a, n)); }

bool is_ulc_prefix(SeqView a, int n, int t) {
  if (t < 0 || t > n) {
    throw IndexOutOfRange("prefix bound " + std::to_string(t) +
                          " outside 0.." + std::to_string(n));
  }
  const Seq ratios = binomial_normalized(a, n);
  return is_lc(SeqView(ratios).first(static_cast<std::size_t>(t) + 1));
}

bool is_symmetric(SeqView p) {
  for (std::size_t i = 0, j = p.size(); i < j; ++i) {
    --j;
    if (p[i] != p[j]) return false;
  }
  return true;
}

bool is_ultra_unimodal(SeqView p) {
  if (p.empty()) return true;
  return is_unimodal(binomial_normalized(p, static_cast<int>(p.size()) - 1));
}

Seq convolve(SeqView a, SeqView b) {
  if (a.empty() || b.empty()) return {};
  Seq out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Seq binomial_slice(int s, int k) {
  if (s < 0 || k < 0 || 2 * k > s) {
    throw InvalidArgument("binomial_slice needs 0 <= 2k <= s (s=" +
                          std::to_string(s) + ", k=" + std::to_string(k) + ")");
  }
  Seq out(static_cast<std::size_t>(s) + 1);
  for (int i = k; i <= s - k; ++i) out[i] = Rational(binomial(s, i));
  return out;
}

std::vector<SliceTerm> symmetric_uu_decompose(SeqView p) {
  require_nonnegative(p);
  if (!is_symmetric(p) || !is_ultra_unimodal(p)) {
    throw InvalidArgument("sequence is not symmetric ultra-unimodal");
  }
  std::vector<SliceTerm> terms;
  if (p.empty()) return terms;
  const int s = static_cast<int>(p.size()) - 1;
  // Peel from the ends inwards: slice k is the only remaining slice that
  // reaches index k, so its coefficient is forced.
  Seq rest(p.begin(), p.end());
  for (int k = 0; 2 * k <= s; ++k) {
    const Rational c = rest[k] / Rational(binomial(s, k));
    if (sgn(c) < 0) throw InvalidArgument("decomposition produced a negative coefficient");
    if (c == 0) continue;
    for (int i = k; i <= s - k; ++i) rest[i] -= c * Rational(binomial(s, i));
    terms.push_back({c, k});
  }
  for (const Rational& r : rest) {
    if (r != 0) throw InvalidArgument("decomposition left a nonzero remainder");
  }
  return terms;
}

Seq recombine_slices(int s, std::span<const SliceTerm> terms) {
  Seq out(static_cast<std::size_t>(s) + 1);
  for (const SliceTerm& term : terms) {
    const Seq slice = binomial_slice(s, term.k);
    for (int i = 0; i <= s; ++i) out[i] += term.coefficient * slice[i];
  }
  return out;
}

FSequence f_sequence(int s, int t, int k, int l) {
  if (s < 0 || t < 0 || k < 0 || l < 0 || 2 * k > s || 2 * l > t) {
    throw InvalidArgument("f_sequence needs 0 <= 2k <= s and 0 <= 2l <= t");
  }
  FSequence out;
  out.values.resize(static_cast<std::size_t>(s + t) + 1);
  for (int j = 0; j <= s + t; ++j) {
    Integer hits = 0;
    for (int i = k; i <= s - k; ++i) {
      const int rest = j - i;
      if (rest < l || rest > t - l) continue;
      hits += binomial(s, i) * binomial(t, rest);
    }
    out.values[j] = make_rational(hits, binomial(s + t, j));
  }
  for (int j = 0; 2 * j < s + t; ++j) {
    if (out.values[j] > out.values[j + 1]) {
      out.monotone = false;
      out.first_violation = j;
      break;
    }
  }
  return out;
}

Seq parse_seq_literal(std::string_view text) {
  Seq out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  require_nonnegative(out);
  return out;
}

std::string seq_to_string(SeqView a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += to_string(a[i]);
  }
  return out;
}

}  // namespace lcv
