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

#include "lcv/johnson.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "lcv/fields.hpp"

namespace lcv {
namespace {

Json rationals_to_json(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const Rational& x : xs) out.push_back(to_string(x));
  return out;
}

Json table_to_json(const EigenTable& table) {
  Json out = Json::array();
  for (const auto& row : table) {
    Json r = Json::array();
    for (const Integer& x : row) r.push_back(x.get_str());
    out.push_back(std::move(r));
  }
  return out;
}

void require_length(const SchemeParams& params, std::span<const Rational> gamma) {
  if (gamma.size() != static_cast<std::size_t>(params.l()) + 1) {
    throw LengthMismatch("coefficient vector must have l + 1 = " +
                         std::to_string(params.l() + 1) + " entries");
  }
}

class EigenTableCache {
 public:
  std::shared_ptr<const EigenTable> get(const SchemeParams& params) {
    const auto key = std::make_pair(params.n(), params.l());
    {
      std::shared_lock lock(mutex_);
      if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<EigenTable>(params.l() + 1);
    for (int i = 0; i <= params.l(); ++i) {
      for (int j = 0; j <= params.l(); ++j) (*table)[i].push_back(eigenvalue(params, i, j));
    }
    std::unique_lock lock(mutex_);
    return tables_.emplace(key, std::move(table)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::shared_ptr<const EigenTable>> tables_;
};

}  // namespace

SchemeParams::SchemeParams(int n, int l) : n_(n), l_(l) {
  if (l < 1 || 2 * l > n) {
    throw InvalidArgument("Johnson scheme needs 1 <= l <= n/2 (n = " + std::to_string(n) +
                          ", l = " + std::to_string(l) + ")");
  }
}

Integer eigenvalue(const SchemeParams& params, int i, int j) {
  const int n = params.n();
  const int l = params.l();
  if (i < 0 || i > l || j < 0 || j > l) {
    throw IndexOutOfRange("eigenvalue index outside 0..l");
  }
  Integer sum = 0;
  for (int k = 0; k <= i; ++k) {
    Integer term = binomial(l - k, i - k) * binomial(l - j, k) * binomial(n - l + k - j, k);
    if ((i - k) % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

std::shared_ptr<const EigenTable> eigen_table(const SchemeParams& params) {
  static EigenTableCache cache;
  return cache.get(params);
}

Integer multiplicity(const SchemeParams& params, int j) {
  return binomial(params.n(), j) - binomial(params.n(), j - 1);
}

std::vector<Rational> beta_vector(const SchemeParams& params) {
  const int n = params.n();
  const int l = params.l();
  std::vector<Rational> beta;
  for (int i = 0; i <= l; ++i) {
    beta.push_back(make_rational(Integer(i * (n + 1) - l * (l + 1)), Integer(l - i + 1)));
  }
  return beta;
}

std::vector<Rational> scheme_spectrum(const SchemeParams& params,
                                      std::span<const Rational> gamma) {
  require_length(params, gamma);
  const auto table = eigen_table(params);
  std::vector<Rational> out(params.l() + 1);
  for (int j = 0; j <= params.l(); ++j) {
    for (int i = 0; i <= params.l(); ++i) out[j] += gamma[i] * Rational((*table)[i][j]);
  }
  return out;
}

std::vector<Mask> level_subsets(int n, int l) { return subsets_of_size(n, l); }

std::size_t AdjacencyMatrix::row_sum(std::size_t r) const {
  std::size_t s = 0;
  for (std::size_t c = 0; c < size(); ++c) s += (*this)(r, c);
  return s;
}

bool AdjacencyMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = r + 1; c < size(); ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

AdjacencyMatrix adjacency_matrix(const SchemeParams& params, int i, std::size_t row_cap) {
  if (i < 0 || i > params.l()) throw IndexOutOfRange("relation index outside 0..l");
  if (binomial(params.n(), params.l()) > static_cast<unsigned long>(row_cap)) {
    throw CapExceeded("C(n, l) exceeds the dense adjacency cap of " + std::to_string(row_cap));
  }
  std::vector<Mask> vertices = level_subsets(params.n(), params.l());
  const std::size_t size = vertices.size();
  std::vector<std::uint8_t> entries(size * size, 0);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      entries[r * size + c] = popcount(vertices[r] & vertices[c]) == params.l() - i;
    }
  }
  return AdjacencyMatrix(std::move(vertices), std::move(entries));
}

Report psd_check(const SchemeParams& params, std::span<const Rational> gamma) {
  const std::vector<Rational> spectrum = scheme_spectrum(params, gamma);
  std::optional<int> negative;
  for (int j = 0; j <= params.l() && !negative; ++j) {
    if (sgn(spectrum[j]) < 0) negative = j;
  }
  Report r = negative ? Report::fail("psd", Json{{"j", *negative},
                                                 {"eigenvalue", to_string(spectrum[*negative])}})
                      : Report::pass("psd");
  r.margin = *std::min_element(spectrum.begin(), spectrum.end());
  r.data["spectrum"] = rationals_to_json(spectrum);
  Json mult = Json::array();
  for (int j = 0; j <= params.l(); ++j) mult.push_back(multiplicity(params, j).get_str());
  r.data["multiplicities"] = mult;
  return r;
}

Report master_certificate(const SchemeParams& params) {
  const std::vector<Rational> beta = beta_vector(params);
  const std::vector<Rational> reversed(beta.rbegin(), beta.rend());
  const std::vector<Rational> values = scheme_spectrum(params, reversed);
  std::optional<Json> witness;
  if (values[0] != 0) {
    witness = Json{{"j", 0}, {"value", to_string(values[0])}, {"expected", "0"}};
  }
  for (int j = 1; j <= params.l() && !witness; ++j) {
    if (sgn(values[j]) <= 0) witness = Json{{"j", j}, {"value", to_string(values[j])}};
  }
  Report r = witness ? Report::fail("certificate", *witness) : Report::pass("certificate");
  r.margin = *std::min_element(values.begin() + 1, values.end());
  r.data["n"] = params.n();
  r.data["l"] = params.l();
  r.data["P"] = table_to_json(*eigen_table(params));
  r.data["beta"] = rationals_to_json(beta);
  r.data["spectrum"] = rationals_to_json(values);
  return r;
}

Report sum_identity_check(int big_m, int big_n, const Rational& a, const Rational& b) {
  if (big_m < 1 || big_n < 1) throw InvalidArgument("sum identity needs positive M and N");
  Rational lhs = 0;
  for (int t = 0; t <= big_n; ++t) {
    Rational term = (a * t + b) / Rational(t + big_m) * Rational(binomial(big_n, t));
    if (t % 2) {
      lhs -= term;
    } else {
      lhs += term;
    }
  }
  const Rational rhs = (b / Rational(big_m) - a) / Rational(binomial(big_m + big_n, big_m));
  Report r = Report::from_bool(
      "sum_identity", lhs == rhs,
      Json{{"M", big_m}, {"N", big_n}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
  r.margin = lhs - rhs;
  r.data["lhs"] = to_string(lhs);
  r.data["rhs"] = to_string(rhs);
  return r;
}

Report inner_sum_check(int n, int l, int k) {
  if (l < 1 || 2 * l > n || k < 0 || k > l - 1) {
    throw InvalidArgument("inner sum needs 1 <= l <= n/2 and 0 <= k <= l-1");
  }
  Rational lhs = 0;
  for (int t = 0; t <= l - k; ++t) {
    Rational term =
        make_rational(Integer((l - t - k) * (n + 1) - l * (l + 1)), Integer(t + k + 1)) *
        Rational(binomial(l - k, t));
    if (t % 2) {
      lhs -= term;
    } else {
      lhs += term;
    }
  }
  const Rational rhs = make_rational(Integer((n - l + 1) * (l + 1)),
                                     Integer(k + 1) * binomial(l + 1, k + 1));
  Report r = Report::from_bool("inner_sum", lhs == rhs && sgn(rhs) > 0,
                               Json{{"n", n}, {"l", l}, {"k", k},
                                    {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
  r.margin = lhs;
  r.data["lhs"] = to_string(lhs);
  r.data["rhs"] = to_string(rhs);
  return r;
}

Rational quadratic_form(const Measure& mu, const SchemeParams& params,
                        std::span<const Rational> gamma) {
  require_length(params, gamma);
  if (mu.n() != params.n()) throw InvalidArgument("measure and scheme sizes differ");
  const int l = params.l();
  // z[m] = Z^m_{l,l}, the mass of ordered level-l pairs meeting in m points.
  std::vector<Rational> z(l + 1);
  for (int m = 0; m <= l; ++m) z[m] = z_count(mu, l, l, m);
  Rational value = 0;
  for (int i = 0; i <= l; ++i) value += gamma[i] * z[l - i];
  return value;
}

Rational quadratic_form_dense(const Measure& mu, const SchemeParams& params,
                              std::span<const Rational> gamma, std::size_t row_cap) {
  require_length(params, gamma);
  if (mu.n() != params.n()) throw InvalidArgument("measure and scheme sizes differ");
  std::vector<AdjacencyMatrix> mats;
  for (int i = 0; i <= params.l(); ++i) mats.push_back(adjacency_matrix(params, i, row_cap));
  const auto vertices = mats[0].vertices();
  std::vector<Rational> psi(vertices.size());
  for (std::size_t r = 0; r < vertices.size(); ++r) psi[r] = mu.probability(vertices[r]);
  Rational value = 0;
  for (std::size_t r = 0; r < psi.size(); ++r) {
    if (psi[r] == 0) continue;
    for (std::size_t c = 0; c < psi.size(); ++c) {
      if (psi[c] == 0) continue;
      Rational entry = 0;
      for (int i = 0; i <= params.l(); ++i) {
        if (mats[i](r, c)) entry += gamma[i];
      }
      value += psi[r] * entry * psi[c];
    }
  }
  return value;
}

std::vector<double> numeric_eigenvalues(const SchemeParams& params,
                                        std::span<const double> gamma, std::size_t row_cap) {
  if (gamma.size() != static_cast<std::size_t>(params.l()) + 1) {
    throw LengthMismatch("coefficient vector must have l + 1 entries");
  }
  if (binomial(params.n(), params.l()) > static_cast<unsigned long>(row_cap)) {
    throw CapExceeded("C(n, l) exceeds the dense adjacency cap");
  }
  const std::vector<Mask> vertices = level_subsets(params.n(), params.l());
  const auto size = static_cast<Eigen::Index>(vertices.size());
  // The tridiagonal QR iteration can exhaust its iteration budget on these
  // highly degenerate spectra. P A P^T has exactly the same spectrum, so on
  // non-convergence retry on a few row orders before giving up.
  using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  std::vector<Eigen::Index> order(static_cast<std::size_t>(size));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::vector<double> out;
  Rng rng(static_cast<std::uint64_t>(params.n()) * 131 + static_cast<std::uint64_t>(params.l()));
  for (int attempt = 0; attempt < 4 && out.empty(); ++attempt) {
    if (attempt == 1) std::reverse(order.begin(), order.end());
    if (attempt >= 2) {
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    }
    Matrix m(size, size);
    for (Eigen::Index r = 0; r < size; ++r) {
      for (Eigen::Index c = 0; c < size; ++c) {
        m(r, c) = gamma[params.l() - popcount(vertices[order[r]] & vertices[order[c]])];
      }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) continue;
    const auto& ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) out.push_back(static_cast<double>(ev[i]));
  }
  if (out.empty()) throw Error("eigenvalue iteration did not converge");
  std::sort(out.begin(), out.end());
  return out;
}

Report spectral_cross_check(const SchemeParams& params, std::span<const Rational> gamma,
                            double tolerance) {
  const std::vector<Rational> exact = scheme_spectrum(params, gamma);
  std::vector<double> expected;
  Integer dimension = 0;
  for (int j = 0; j <= params.l(); ++j) {
    const Integer mult = multiplicity(params, j);
    dimension += mult;
    for (long c = 0; c < mult.get_si(); ++c) expected.push_back(exact[j].get_d());
  }
  std::sort(expected.begin(), expected.end());
  std::vector<double> g;
  for (const Rational& x : gamma) g.push_back(x.get_d());
  const std::vector<double> numeric = numeric_eigenvalues(params, g);
  const bool dims_ok = dimension == binomial(params.n(), params.l()) &&
                       expected.size() == numeric.size();
  double max_error = dims_ok ? 0.0 : INFINITY;
  if (dims_ok) {
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      max_error = std::max(max_error, std::abs(numeric[i] - expected[i]));
    }
  }
  Report r = Report::from_bool("spectral_cross_check", dims_ok && max_error <= tolerance,
                               Json{{"n", params.n()},
                                    {"l", params.l()},
                                    {"dimension_ok", dims_ok},
                                    {"max_abs_error", max_error}});
  r.data["max_abs_error"] = max_error;
  r.data["dimension"] = dimension.get_str();
  return r;
}

}  // namespace lcv
