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

#include <algorithm>
#include <optional>
#include <string>

#include "lcv/fields.hpp"
#include "lcv/matroid.hpp"

namespace lcv {
namespace {

Json seq_json(SeqView a) {
  Json out = Json::array();
  for (const Rational& x : a) out.push_back(to_string(x));
  return out;
}

int half_size(const Matroid& m) {
  if (m.ground_size() % 2) {
    throw OddGroundSet("ground set has odd size " + std::to_string(m.ground_size()));
  }
  return m.ground_size() / 2;
}

// Counts pairs (A, F \ A) with |A| = k-1 and |A| = k, both independent after
// adding `contracted`.
std::pair<long, long> partition_counts(std::span<const std::uint8_t> table, Mask free,
                                       Mask contracted, int k) {
  long lower = 0;
  long upper = 0;
  for (Mask a = free;; a = (a - 1) & free) {
    const int level = popcount(a);
    if ((level == k || level == k - 1) && table[a | contracted] &&
        table[(free ^ a) | contracted]) {
      (level == k ? upper : lower) += 1;
    }
    if (a == 0) break;
  }
  return {lower, upper};
}

// Distinct Pi_k neighbours of (C, E \ C), C at level k-1; returns d(C, D).
int lower_degree(std::span<const std::uint8_t> table, Mask full, Mask c) {
  std::vector<Mask> neighbours;
  for (Mask rest = full & ~c; rest; rest &= rest - 1) {
    const Mask grown = c | (rest & -rest);
    if (table[grown] && table[full ^ grown]) {
      neighbours.push_back(grown);         // G1: (C + y, D - y)
      neighbours.push_back(full ^ grown);  // G2: (D - y, C + y)
    }
  }
  std::sort(neighbours.begin(), neighbours.end());
  return static_cast<int>(std::unique(neighbours.begin(), neighbours.end()) - neighbours.begin());
}

PartitionDegrees degrees_with(std::span<const std::uint8_t> table, Mask full, Mask a,
                              std::vector<int>& degree_cache) {
  const Mask b = full ^ a;
  PartitionDegrees out;
  std::vector<Mask> lower;  // C sides of neighbours
  for (Mask rest = a; rest; rest &= rest - 1) {
    const Mask x = rest & -rest;
    if (table[b | x]) {
      ++out.d1;
      lower.push_back(a ^ x);
    }
  }
  for (Mask rest = b; rest; rest &= rest - 1) {
    const Mask y = rest & -rest;
    if (table[a | y]) {
      ++out.d2;
      lower.push_back(b ^ y);
    }
  }
  std::sort(lower.begin(), lower.end());
  lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
  out.neighbor_weight = 0;
  for (Mask c : lower) {
    int& d = degree_cache[c];
    if (d < 0) d = lower_degree(table, full, c);
    out.neighbor_weight += make_rational(1, d);
  }
  return out;
}

Rational bound_b(int d1, int d2) {
  return (make_rational(d1, d2 + 1) + make_rational(d2, d1 + 1)) / 2;
}

Rational bound_c(int d1, int d2) {
  return (make_rational(d1 - 1, d1 + 1) + make_rational(d2 - d1 + 1, d1 + 2) + make_rational(d1, d2 + 1)) / 2;
}

}  // namespace

Integer pi_count(const Matroid& m, int i) {
  const int n = m.ground_size();
  if (i < 0 || i > n) throw IndexOutOfRange("partition level outside 0..n");
  const auto table = m.independence_table();
  const Mask full = full_mask(n);
  long count = 0;
  for (Mask a : subsets_of_size(n, i)) count += table[a] && table[full ^ a];
  return Integer(count);
}

Report partition_app_check(const Matroid& m) {
  const int k = half_size(m);
  if (k == 0) return Report::vacuous("partition_app");
  const Integer lower = pi_count(m, k - 1);
  const Integer upper = pi_count(m, k);
  const bool ok = (k + 1) * lower <= k * upper;
  Report r = Report::from_bool(
      "partition_app", ok,
      Json{{"k", k}, {"pi_lower", lower.get_str()}, {"pi_upper", upper.get_str()}});
  r.margin = make_rational(k * upper, Integer(k + 1)) - Rational(lower);
  r.data["k"] = k;
  r.data["pi_lower"] = lower.get_str();
  r.data["pi_upper"] = upper.get_str();
  return r;
}

Report matroid_capp_check(const Matroid& m) {
  const int n = m.ground_size();
  const auto table = m.independence_table();
  const Mask full = full_mask(n);
  std::uint64_t checked = 0;
  std::optional<Rational> margin;
  for (int k = 1; 2 * k <= n; ++k) {
    for (Mask free : subsets_of_size(n, 2 * k)) {
      const Mask outside = full & ~free;
      for (Mask c = outside;; c = (c - 1) & outside) {
        if (table[c]) {
          const auto [lower, upper] = partition_counts(table, free, c, k);
          ++checked;
          const Rational slack = make_rational(Integer(k) * upper, Integer(k + 1)) - lower;
          if (!margin || slack < *margin) margin = slack;
          if (sgn(slack) < 0) {
            Report r = Report::fail("matroid_capp",
                                    Json{{"k", k},
                                         {"free", free},
                                         {"contracted", c},
                                         {"deleted", outside & ~c},
                                         {"pi_lower", lower},
                                         {"pi_upper", upper},
                                         {"matroid", m.describe()}});
            r.margin = slack;
            r.instances = checked;
            return r;
          }
        }
        if (c == 0) break;
      }
    }
  }
  Report r = checked ? Report::pass("matroid_capp") : Report::vacuous("matroid_capp");
  r.margin = margin;
  r.instances = checked;
  r.data["minors_checked"] = checked;
  return r;
}

Report matroid_capu_check(const Matroid& m) {
  ConditioningOptions options;
  options.cap_n = kMatroidEnumerationCap;
  Report r = is_capu(uniform_independent_measure(m), options);
  r.check = "matroid_capu";
  if (r.failed()) r.witness["matroid"] = m.describe();
  return r;
}

Report mason_check(const Matroid& m) {
  const Seq a = independence_numbers(m);
  Report r = Report::from_bool("mason", is_ulc(a, m.ground_size()),
                               Json{{"sequence", seq_json(a)}, {"matroid", m.describe()}});
  r.data["sequence"] = seq_json(a);
  return r;
}

Report mason_prefix_check(const Matroid& m, int t) {
  if (t < 0) throw InvalidArgument("prefix length must be nonnegative");
  const Seq a = independence_numbers(m);
  const int top = std::min(t, m.ground_size());
  Report r = Report::from_bool(
      "mason_prefix", is_ulc_prefix(a, m.ground_size(), top),
      Json{{"t", t}, {"sequence", seq_json(a)}, {"matroid", m.describe()}});
  r.data["t"] = top;
  r.data["sequence"] = seq_json(a);
  return r;
}

PartitionDegrees partition_degrees(const Matroid& m, Mask a) {
  const int k = half_size(m);
  const auto table = m.independence_table();
  const Mask full = full_mask(m.ground_size());
  if ((a & ~full) || popcount(a) != k || !table[a] || !table[full ^ a]) {
    throw InvalidArgument("not an ordered partition into two independent halves");
  }
  std::vector<int> cache(table.size(), -1);
  return degrees_with(table, full, a, cache);
}

Report degree_bounds_check(const Matroid& m) {
  const int k = half_size(m);
  const int r = k == 0 ? 0 : rank(m);
  const bool hypothesis = k > 0 && (r >= k + 2 || (r == k + 1 && coloop_set(m) == 0));
  if (!hypothesis) {
    Report v = Report::vacuous("degree_bounds");
    v.data["k"] = k;
    v.data["rank"] = r;
    return v;
  }
  const auto table = m.independence_table();
  const Mask full = full_mask(m.ground_size());
  std::vector<int> cache(table.size(), -1);
  std::uint64_t pairs = 0;
  std::optional<Rational> margin;
  Rational max_weight = 0;
  for (Mask a : subsets_of_size(m.ground_size(), k)) {
    if (!table[a] || !table[full ^ a]) continue;
    ++pairs;
    const PartitionDegrees d = degrees_with(table, full, a, cache);
    max_weight = std::max(max_weight, d.neighbor_weight);
    Json where{{"A", a},          {"B", full ^ a},
               {"d1", d.d1},      {"d2", d.d2},
               {"weight", to_string(d.neighbor_weight)}, {"matroid", m.describe()}};
    if (d.d1 < 2 || d.d1 > k || d.d2 < 2 || d.d2 > k) {
      where["bound"] = "degree range";
      return Report::fail("degree_bounds", where);
    }
    Rational slack = bound_b(d.d1, d.d2) - d.neighbor_weight;
    if (sgn(slack) < 0) {
      where["bound"] = "symmetric";
      Report f = Report::fail("degree_bounds", where);
      f.margin = slack;
      return f;
    }
    if (d.d1 < d.d2) {
      const Rational slack_c = bound_c(d.d1, d.d2) - d.neighbor_weight;
      if (sgn(slack_c) < 0) {
        where["bound"] = "asymmetric";
        Report f = Report::fail("degree_bounds", where);
        f.margin = slack_c;
        return f;
      }
      slack = std::min(slack, slack_c);
    }
    if (!margin || slack < *margin) margin = slack;
  }
  Report out = pairs ? Report::pass("degree_bounds") : Report::vacuous("degree_bounds");
  out.margin = margin;
  out.instances = pairs;
  out.data["k"] = k;
  out.data["rank"] = r;
  out.data["pairs"] = pairs;
  out.data["max_neighbor_weight"] = to_string(max_weight);
  return out;
}

Report coloop_identity_check(const MatroidPtr& m) {
  if (!m) throw InvalidArgument("null matroid");
  const int k = half_size(*m);
  const Mask coloops = coloop_set(*m);
  if (k == 0 || coloops == 0 || rank(*m) != k + 1) return Report::vacuous("coloop_identity");
  const Integer lower = pi_count(*m, k - 1);
  const Integer upper = pi_count(*m, k);
  std::uint64_t checked = 0;
  for (int e = 0; coloops >> e; ++e) {
    if (!(coloops >> e & 1)) continue;
    ++checked;
    const Integer deleted = pi_count(*deletion(m, e), k - 1);
    if (lower != deleted || upper != 2 * deleted) {
      Report f = Report::fail("coloop_identity",
                              Json{{"coloop", e},
                                   {"pi_lower", lower.get_str()},
                                   {"pi_upper", upper.get_str()},
                                   {"pi_lower_deletion", deleted.get_str()},
                                   {"matroid", m->describe()}});
      f.instances = checked;
      return f;
    }
  }
  Report r = Report::pass("coloop_identity");
  r.instances = checked;
  return r;
}

Report graph_weight_check(const BipartiteGraph& g, const Rational& c) {
  if (g.x_count < 0 || g.y_count < 0) throw InvalidArgument("negative vertex count");
  std::vector<std::pair<int, int>> edges = g.edges;
  for (const auto& [x, y] : edges) {
    if (x < 0 || x >= g.x_count || y < 0 || y >= g.y_count) {
      throw InvalidArgument("edge endpoint outside the bipartition");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<int> degree(g.x_count, 0);
  for (const auto& e : edges) ++degree[e.first];
  for (int x = 0; x < g.x_count; ++x) {
    if (degree[x] == 0) throw InvalidArgument("isolated vertex on the X side");
  }
  std::vector<Rational> sums(g.y_count);
  for (const auto& [x, y] : edges) sums[y] += make_rational(1, degree[x]);
  Rational max_sum = 0;
  for (const Rational& s : sums) max_sum = std::max(max_sum, s);
  Report r;
  if (max_sum > c) {
    r = Report::vacuous("graph_weight");
  } else {
    const Rational slack = c * g.y_count - g.x_count;
    r = Report::from_bool("graph_weight", sgn(slack) >= 0,
                          Json{{"x_count", g.x_count}, {"y_count", g.y_count},
                               {"c", to_string(c)}});
    r.margin = slack;
  }
  r.data["max_weight_sum"] = to_string(max_sum);
  return r;
}

Report degree_bound_sweep(int k_max) {
  if (k_max < 2) throw InvalidArgument("degree bound sweep needs k_max >= 2");
  Json violations = Json::array();
  std::optional<Rational> margin;
  std::uint64_t cases = 0;
  for (int k = 2; k <= k_max; ++k) {
    for (int d1 = 2; d1 <= k; ++d1) {
      for (int d2 = d1; d2 <= k; ++d2) {
        ++cases;
        Rational lhs;
        Rational rhs;
        bool ok;
        if (d1 < d2) {
          lhs = bound_c(d1, d2);
          rhs = make_rational(d2, d2 + 1);
          ok = lhs <= rhs;
        } else {
          lhs = bound_b(d1, d2);
          rhs = make_rational(k, k + 1);
          ok = lhs == make_rational(d1, d1 + 1) && lhs <= rhs;
        }
        const Rational slack = rhs - lhs;
        if (!margin || slack < *margin) margin = slack;
        if (!ok) {
          violations.push_back(Json{{"k", k}, {"d1", d1}, {"d2", d2},
                                    {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
        }
      }
    }
  }
  Report r = violations.empty() ? Report::pass("degree_bound_sweep")
                                : Report::fail("degree_bound_sweep", violations[0]);
  r.margin = margin;
  r.instances = cases;
  r.data["k_max"] = k_max;
  r.data["violations"] = violations;
  return r;
}

}  // namespace lcv
