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

// The Johnson association scheme J(n, l) on the l-subsets of [n].
//
// A_i is the 0/1 matrix relating X, Y with |X n Y| = l - i. The A_i share an
// eigenbasis; the eigenvalue of A_i on the j-th common eigenspace is
//
//   P_i(j) = sum_{k=0..i} (-1)^{i-k} C(l-k, i-k) C(l-j, k) C(n-l+k-j, k),
//
// with multiplicity C(n, j) - C(n, j-1). Consequently sum_i g_i A_i is PSD
// iff sum_i g_i P_i(j) >= 0 for every j.
//
// The ULC certificate uses the coefficients
//   beta_i = (i(n+1) - l(l+1)) / (l - i + 1),
// for which sum_i beta_{l-i} P_i(j) vanishes at j = 0 and is positive for
// 1 <= j <= l whenever l <= n/2.

#ifndef LCV_JOHNSON_HPP_
#define LCV_JOHNSON_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lcv/exact.hpp"
#include "lcv/measure.hpp"
#include "lcv/report.hpp"

namespace lcv {

class SchemeParams {
 public:
  // Requires 1 <= l and 2l <= n.
  SchemeParams(int n, int l);
  int n() const { return n_; }
  int l() const { return l_; }

 private:
  int n_;
  int l_;
};

// P[i][j] = P_i(j), 0 <= i, j <= l.
using EigenTable = std::vector<std::vector<Integer>>;

Integer eigenvalue(const SchemeParams& params, int i, int j);

// Cached per (n, l); safe to call concurrently.
std::shared_ptr<const EigenTable> eigen_table(const SchemeParams& params);

// C(n, j) - C(n, j-1).
Integer multiplicity(const SchemeParams& params, int j);

std::vector<Rational> beta_vector(const SchemeParams& params);

// (sum_i gamma_i P_i(j))_{j=0..l}.
std::vector<Rational> scheme_spectrum(const SchemeParams& params,
                                      std::span<const Rational> gamma);

// The l-subsets of [n] in ascending mask order; row/column order of the
// adjacency matrices.
std::vector<Mask> level_subsets(int n, int l);

class AdjacencyMatrix {
 public:
  AdjacencyMatrix(std::vector<Mask> vertices, std::vector<std::uint8_t> entries)
      : vertices_(std::move(vertices)), entries_(std::move(entries)) {}

  std::size_t size() const { return vertices_.size(); }
  bool operator()(std::size_t r, std::size_t c) const {
    return entries_[r * vertices_.size() + c] != 0;
  }
  std::span<const Mask> vertices() const { return vertices_; }
  std::size_t row_sum(std::size_t r) const;
  bool is_symmetric() const;

 private:
  std::vector<Mask> vertices_;
  std::vector<std::uint8_t> entries_;
};

inline constexpr std::size_t kDenseSchemeRowCap = 4000;

// Throws CapExceeded when C(n, l) > row_cap.
AdjacencyMatrix adjacency_matrix(const SchemeParams& params, int i,
                                 std::size_t row_cap = kDenseSchemeRowCap);

// PSD criterion; data.spectrum lists every eigenvalue, witness the first
// negative one. Throws LengthMismatch unless gamma has l + 1 entries.
Report psd_check(const SchemeParams& params, std::span<const Rational> gamma);

// Exact values sum_i beta_{l-i} P_i(j): zero at j = 0, positive for j >= 1.
Report master_certificate(const SchemeParams& params);

// sum_{t=0..N} (-1)^t (at + b)/(t + M) C(N, t) == (b/M - a) / C(M+N, M).
Report sum_identity_check(int big_m, int big_n, const Rational& a, const Rational& b);

// sum_{t=0..l-k} (-1)^t ((l-t-k)(n+1) - l(l+1))/(t+k+1) C(l-k, t)
//   == (n-l+1)(l+1) / ((k+1) C(l+1, k+1)) > 0, for 0 <= k <= l-1.
Report inner_sum_check(int n, int l, int k);

// psi (sum_i gamma_i A_i) psi^T with psi the normalized measure restricted
// to level l, evaluated as sum_i gamma_i Z^{l-i}_{l,l}.
Rational quadratic_form(const Measure& mu, const SchemeParams& params,
                        std::span<const Rational> gamma);

// The same value through the dense adjacency matrices (subject to the cap).
Rational quadratic_form_dense(const Measure& mu, const SchemeParams& params,
                              std::span<const Rational> gamma,
                              std::size_t row_cap = kDenseSchemeRowCap);

// Numerical eigenvalues of sum_i gamma_i A_i (ascending). Floating point;
// used only to corroborate the exact spectrum.
std::vector<double> numeric_eigenvalues(const SchemeParams& params,
                                        std::span<const double> gamma,
                                        std::size_t row_cap = kDenseSchemeRowCap);

// Compares numeric_eigenvalues against the exact spectrum expanded with
// multiplicities. data: max_abs_error, dimension. Fails if any eigenvalue
// differs by more than `tolerance` or the multiplicities do not add up to
// C(n, l).
Report spectral_cross_check(const SchemeParams& params, std::span<const Rational> gamma,
                            double tolerance);

}  // namespace lcv

#endif  // LCV_JOHNSON_HPP_
