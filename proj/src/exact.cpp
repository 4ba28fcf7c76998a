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

#include "lcv/exact.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace lcv {
namespace {

class PascalTriangle {
 public:
  PascalTriangle() { rows_.push_back({Integer(1)}); }

  const Integer& at(long n, long k) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<long>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
      const std::vector<Integer>& prev = rows_.back();
      std::vector<Integer> row(prev.size() + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::size_t i = 1; i + 1 < row.size(); ++i) {
        row[i] = prev[i - 1] + prev[i];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  // deque: growth never moves existing rows.
  std::deque<std::vector<Integer>> rows_;
};

PascalTriangle& pascal() {
  static PascalTriangle triangle;
  return triangle;
}

const Integer& zero() {
  static const Integer z(0);
  return z;
}

}  // namespace

const Integer& binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return zero();
  return pascal().at(n, k);
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw InvalidArgument("empty integer literal");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw InvalidArgument("malformed integer literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InvalidArgument("malformed rational literal: " + std::string(s));
      }
    }
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(trim(text.substr(0, slash))),
                       parse_int(trim(text.substr(slash + 1))));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rng Rng::for_item(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return Rng(z ^ (z >> 31));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below with zero bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

}  // namespace lcv
