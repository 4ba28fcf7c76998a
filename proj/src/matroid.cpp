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

#include "lcv/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lcv {
namespace {

Json mask_elements(Mask m) {
  Json out = Json::array();
  for (int i = 0; m >> i; ++i) {
    if (m >> i & 1) out.push_back(i);
  }
  return out;
}

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int r, int n) : Matroid(n), r_(r) {
    if (r < 0 || r > n) throw InvalidArgument("uniform matroid needs 0 <= r <= n");
  }
  Json describe() const override {
    return Json{{"type", "uniform"}, {"r", r_}, {"n", ground_size()}};
  }

 private:
  bool independent_impl(Mask x) const override { return popcount(x) <= r_; }
  int r_;
};

class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges)
      : Matroid(static_cast<int>(edges.size())), vertices_(vertices), edges_(std::move(edges)) {
    if (vertices < 1) throw InvalidArgument("graph needs at least one vertex");
    for (const auto& [u, v] : edges_) {
      if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
        throw InvalidArgument("edge endpoint outside the vertex range");
      }
    }
  }
  Json describe() const override {
    Json edges = Json::array();
    for (const auto& [u, v] : edges_) edges.push_back(Json::array({u + 1, v + 1}));
    return Json{{"type", "graphic"}, {"vertices", vertices_}, {"edges", edges}};
  }

 private:
  bool independent_impl(Mask x) const override {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int e = 0; x >> e; ++e) {
      if (!(x >> e & 1)) continue;
      const int a = find(edges_[e].first);
      const int b = find(edges_[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long inverse_mod(long a, long p) {
  long result = 1;
  long base = a % p;
  for (long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

class LinearMatroid final : public Matroid {
 public:
  LinearMatroid(int p, std::vector<std::vector<long>> matrix)
      : Matroid(matrix.empty() ? 0 : static_cast<int>(matrix[0].size())),
        p_(p),
        original_(matrix) {
    if (!is_prime(p) || p > 46340) throw InvalidArgument("field size must be a prime below 46341");
    rows_ = static_cast<int>(matrix.size());
    columns_.assign(ground_size(), std::vector<long>(rows_));
    for (int r = 0; r < rows_; ++r) {
      if (static_cast<int>(matrix[r].size()) != ground_size()) {
        throw InvalidArgument("matrix rows must have equal length");
      }
      for (int c = 0; c < ground_size(); ++c) columns_[c][r] = ((matrix[r][c] % p) + p) % p;
    }
  }
  Json describe() const override {
    return Json{{"type", "linear"}, {"p", p_}, {"matrix", original_}};
  }

 private:
  bool independent_impl(Mask x) const override {
    if (popcount(x) > rows_) return false;
    // Incremental echelon basis: basis[i] has its leading entry (=1) at pivot[i].
    std::vector<std::vector<long>> basis;
    std::vector<int> pivot;
    for (int c = 0; x >> c; ++c) {
      if (!(x >> c & 1)) continue;
      std::vector<long> v = columns_[c];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const long f = v[pivot[b]];
        if (f == 0) continue;
        for (int r = 0; r < rows_; ++r) v[r] = (v[r] - f * basis[b][r] % p_ + p_) % p_;
      }
      int lead = 0;
      while (lead < rows_ && v[lead] == 0) ++lead;
      if (lead == rows_) return false;
      const long inv = inverse_mod(v[lead], p_);
      for (long& e : v) e = e * inv % p_;
      basis.push_back(std::move(v));
      pivot.push_back(lead);
    }
    return true;
  }
  int p_;
  int rows_ = 0;
  std::vector<std::vector<long>> original_;
  std::vector<std::vector<long>> columns_;
};

int total_size(const std::vector<MatroidPtr>& parts) {
  int n = 0;
  for (const auto& p : parts) {
    if (!p) throw InvalidArgument("null matroid in direct sum");
    n += p->ground_size();
  }
  return n;
}

class DirectSumMatroid final : public Matroid {
 public:
  explicit DirectSumMatroid(std::vector<MatroidPtr> parts)
      : Matroid(total_size(parts)), parts_(std::move(parts)) {}
  Json describe() const override {
    Json parts = Json::array();
    for (const auto& p : parts_) parts.push_back(p->describe());
    return Json{{"type", "direct_sum"}, {"parts", parts}};
  }

 private:
  bool independent_impl(Mask x) const override {
    int offset = 0;
    for (const auto& p : parts_) {
      const int size = p->ground_size();
      if (!p->is_independent((x >> offset) & full_mask(size))) return false;
      offset += size;
    }
    return true;
  }
  std::vector<MatroidPtr> parts_;
};

class MinorMatroid final : public Matroid {
 public:
  MinorMatroid(MatroidPtr parent, Mask deleted, Mask contracted)
      : Matroid(parent ? parent->ground_size() - popcount(deleted | contracted) : 0),
        parent_(std::move(parent)),
        deleted_(deleted),
        contracted_(contracted) {
    if (!parent_) throw InvalidArgument("null parent matroid");
    const Mask full = full_mask(parent_->ground_size());
    if ((deleted | contracted) & ~full) throw IndexOutOfRange("minor set outside ground set");
    if (deleted & contracted) throw InvalidArgument("deleted and contracted sets overlap");
    survivors_ = full & ~(deleted | contracted);
    // Contracting C is contracting any basis of C; pick the greedy one.
    for (int e = 0; contracted >> e; ++e) {
      if ((contracted >> e & 1) && parent_->is_independent(contracted_basis_ | Mask{1} << e)) {
        contracted_basis_ |= Mask{1} << e;
      }
    }
  }
  Json describe() const override {
    return Json{{"type", "minor"},
                {"parent", parent_->describe()},
                {"deleted", mask_elements(deleted_)},
                {"contracted", mask_elements(contracted_)}};
  }

 private:
  bool independent_impl(Mask x) const override {
    return parent_->is_independent(expand_bits(x, survivors_) | contracted_basis_);
  }
  MatroidPtr parent_;
  Mask deleted_;
  Mask contracted_;
  Mask survivors_ = 0;
  Mask contracted_basis_ = 0;
};

class CorruptedMatroid final : public Matroid {
 public:
  CorruptedMatroid(MatroidPtr base, std::vector<Mask> toggled)
      : Matroid(base ? base->ground_size() : 0), base_(std::move(base)), toggled_(std::move(toggled)) {
    if (!base_) throw InvalidArgument("null base matroid");
    std::sort(toggled_.begin(), toggled_.end());
    toggled_.erase(std::unique(toggled_.begin(), toggled_.end()), toggled_.end());
    for (Mask t : toggled_) {
      if (t & ~full_mask(ground_size())) throw IndexOutOfRange("toggled set outside ground set");
    }
  }
  Json describe() const override {
    return Json{{"type", "corrupted"}, {"base", base_->describe()}, {"toggle", toggled_}};
  }

 private:
  bool independent_impl(Mask x) const override {
    const bool flip = std::binary_search(toggled_.begin(), toggled_.end(), x);
    return base_->is_independent(x) != flip;
  }
  MatroidPtr base_;
  std::vector<Mask> toggled_;
};

}  // namespace

Matroid::Matroid(int n) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InvalidArgument("matroid ground set must have 0.." + std::to_string(kMaxGroundSize) +
                          " elements");
  }
}

bool Matroid::is_independent(Mask x) const {
  if (x & ~full_mask(n_)) throw IndexOutOfRange("set has elements outside the ground set");
  return independent_impl(x);
}

std::span<const std::uint8_t> Matroid::independence_table() const {
  if (n_ > kMatroidEnumerationCap) {
    throw CapExceeded("ground set of " + std::to_string(n_) + " exceeds the enumeration cap of " +
                      std::to_string(kMatroidEnumerationCap));
  }
  std::call_once(table_once_, [this] {
    const Mask full = full_mask(n_);
    table_.assign(std::size_t{full} + 1, 0);
    for (Mask x = 0;; ++x) {
      table_[x] = independent_impl(x) ? 1 : 0;
      if (x == full) break;
    }
  });
  return table_;
}

MatroidPtr uniform_matroid(int r, int n) { return std::make_shared<UniformMatroid>(r, n); }

MatroidPtr graphic_matroid(int vertices, std::vector<std::pair<int, int>> edges) {
  return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
}

MatroidPtr linear_matroid(int p, std::vector<std::vector<long>> matrix) {
  return std::make_shared<LinearMatroid>(p, std::move(matrix));
}

MatroidPtr direct_sum(std::vector<MatroidPtr> parts) {
  return std::make_shared<DirectSumMatroid>(std::move(parts));
}

MatroidPtr minor(MatroidPtr parent, Mask deleted, Mask contracted) {
  return std::make_shared<MinorMatroid>(std::move(parent), deleted, contracted);
}

MatroidPtr deletion(MatroidPtr parent, int e) {
  if (!parent || e < 0 || e >= parent->ground_size()) throw IndexOutOfRange("no such element");
  return minor(std::move(parent), Mask{1} << e, 0);
}

MatroidPtr contraction(MatroidPtr parent, int e) {
  if (!parent || e < 0 || e >= parent->ground_size()) throw IndexOutOfRange("no such element");
  return minor(std::move(parent), 0, Mask{1} << e);
}

MatroidPtr corrupted(MatroidPtr base, std::vector<Mask> toggled) {
  return std::make_shared<CorruptedMatroid>(std::move(base), std::move(toggled));
}

int rank(const Matroid& m) {
  const auto table = m.independence_table();
  int r = 0;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x]) r = std::max(r, popcount(static_cast<Mask>(x)));
  }
  return r;
}

Seq independence_numbers(const Matroid& m) {
  const auto table = m.independence_table();
  std::vector<long> counts(m.ground_size() + 1, 0);
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x]) ++counts[popcount(static_cast<Mask>(x))];
  }
  Seq out;
  for (long c : counts) out.emplace_back(c);
  return out;
}

Mask coloop_set(const Matroid& m) {
  const auto table = m.independence_table();
  const int r = rank(m);
  Mask common = full_mask(m.ground_size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] && popcount(static_cast<Mask>(x)) == r) common &= static_cast<Mask>(x);
  }
  return common;
}

Measure uniform_independent_measure(const Matroid& m) {
  const auto table = m.independence_table();
  std::vector<WeightedPoint> points;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x]) points.push_back({static_cast<Mask>(x), Rational(1)});
  }
  return Measure(m.ground_size(), std::move(points));
}

Report axioms_check(const Matroid& m) {
  if (m.ground_size() > 12) throw CapExceeded("axiom check is limited to 12 elements");
  const auto table = m.independence_table();
  const int n = m.ground_size();
  if (!table[0]) return Report::fail("axioms", Json{{"axiom", "empty"}});
  std::vector<std::vector<Mask>> by_size(n + 1);
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (!table[x]) continue;
    const Mask xm = static_cast<Mask>(x);
    by_size[popcount(xm)].push_back(xm);
    // Removing one element at a time suffices by induction.
    for (Mask rest = xm; rest; rest &= rest - 1) {
      const Mask smaller = xm & ~(rest & -rest);
      if (!table[smaller]) {
        return Report::fail("axioms", Json{{"axiom", "hereditary"}, {"X", xm}, {"Y", smaller}});
      }
    }
  }
  // Augmentation from |X| to |X| + 1 implies the general case.
  for (int s = 0; s < n; ++s) {
    for (Mask x : by_size[s]) {
      for (Mask y : by_size[s + 1]) {
        bool found = false;
        for (Mask rest = y & ~x; rest && !found; rest &= rest - 1) {
          found = table[x | (rest & -rest)] != 0;
        }
        if (!found) {
          return Report::fail("axioms", Json{{"axiom", "augmentation"}, {"X", x}, {"Y", y}});
        }
      }
    }
  }
  Report r = Report::pass("axioms");
  r.data["independent_sets"] =
      std::count_if(table.begin(), table.end(), [](std::uint8_t v) { return v != 0; });
  return r;
}

}  // namespace lcv
