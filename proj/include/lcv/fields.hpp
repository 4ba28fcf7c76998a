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

// Reproducible samples of external fields and target coordinate sets for the
// field-quantified checks (Rayleigh, lambda-Ray, BLC). Those properties
// quantify over all of (0, inf)^n; here they are only ever checked on the
// sample below, and reports say so via their `sampled` flag.
//
// The sample consists of
//   * the all-ones field,
//   * the constant fields 2^e for e in [-b, b], e != 0,
//   * for every coordinate i and e in [-b, b], e != 0, the field that is 2^e
//     on i and 1 elsewhere,
//   * `random_count` fields with independent entries p/q, p, q in [1, 2^b],
//     drawn from Rng(seed).

#ifndef LCV_FIELDS_HPP_
#define LCV_FIELDS_HPP_

#include <cstdint>
#include <vector>

#include "lcv/measure.hpp"

namespace lcv {

struct FieldSampleScheme {
  int grid_exponent = 2;  // b
  int random_count = 8;
  std::uint64_t seed = 1;
};

std::vector<FieldVector> sample_fields(int n, const FieldSampleScheme& scheme);

// All subsets of [n] of the given size, ascending by mask.
std::vector<Mask> subsets_of_size(int n, int size);
// All subsets of [n] with at most `max_size` elements, ascending by mask.
std::vector<Mask> subsets_up_to_size(int n, int max_size);

}  // namespace lcv

#endif  // LCV_FIELDS_HPP_
