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

#ifndef LCV_REPORT_HPP_
#define LCV_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lcv/exact.hpp"

namespace lcv {

using Json = nlohmann::ordered_json;

enum class Verdict { kPass, kFail, kVacuous };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

// Outcome of a single check or of a whole suite.
//
// A failing report always carries a witness. `data` holds check-specific
// payload (spectra, counts) that is not part of the verdict itself.
struct Report {
  std::string check;
  Verdict verdict = Verdict::kPass;
  bool sampled = false;
  Json witness;  // null unless there is something to point at
  std::optional<Rational> margin;
  std::uint64_t instances = 1;
  std::optional<std::uint64_t> seed;
  Json data = Json::object();

  bool passed() const { return verdict != Verdict::kFail; }
  bool failed() const { return verdict == Verdict::kFail; }

  static Report pass(std::string check) {
    Report r;
    r.check = std::move(check);
    return r;
  }
  static Report vacuous(std::string check) {
    Report r;
    r.check = std::move(check);
    r.verdict = Verdict::kVacuous;
    return r;
  }
  // Throws InvalidArgument if `witness` is null.
  static Report fail(std::string check, Json witness);
  static Report from_bool(std::string check, bool ok, Json witness_if_failed);
};

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Report& report);
Report report_from_json(const Json& j);

}  // namespace lcv

#endif  // LCV_REPORT_HPP_
