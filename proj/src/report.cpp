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

#include "lcv/report.hpp"

namespace lcv {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kVacuous:
      return "vacuous";
  }
  return "fail";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "pass") return Verdict::kPass;
  if (s == "fail") return Verdict::kFail;
  if (s == "vacuous") return Verdict::kVacuous;
  throw InvalidArgument("unknown verdict: " + std::string(s));
}

Report Report::fail(std::string check, Json witness) {
  if (witness.is_null()) {
    throw InvalidArgument("failing report for '" + check + "' needs a witness");
  }
  Report r;
  r.check = std::move(check);
  r.verdict = Verdict::kFail;
  r.witness = std::move(witness);
  return r;
}

Report Report::from_bool(std::string check, bool ok, Json witness_if_failed) {
  if (ok) return pass(std::move(check));
  return fail(std::move(check), std::move(witness_if_failed));
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  const Json& num = j.at("num");
  const Json& den = j.at("den");
  auto as_int = [](const Json& v) {
    if (v.is_string()) {
      const Rational q = parse_rational(v.get<std::string>());
      if (q.get_den() != 1) throw InvalidArgument("rational field must be an integer string");
      return Integer(q.get_num());
    }
    if (v.is_number_integer()) return Integer(v.dump(), 10);
    throw InvalidArgument("rational field must be an integer string");
  };
  return make_rational(as_int(num), as_int(den));
}

Json to_json(const Report& report) {
  if (report.failed() && report.witness.is_null()) {
    throw InvalidArgument("failing report without witness: " + report.check);
  }
  Json j;
  j["check"] = report.check;
  j["verdict"] = std::string(to_string(report.verdict));
  j["sampled"] = report.sampled;
  if (report.sampled) j["verdict_scope"] = "sampled instances only";
  j["witness"] = report.witness;
  j["margin"] = report.margin ? rational_to_json(*report.margin) : Json(nullptr);
  j["instances"] = report.instances;
  j["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  if (!report.data.empty()) j["data"] = report.data;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.check = j.at("check").get<std::string>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.sampled = j.value("sampled", false);
  r.witness = j.contains("witness") ? j.at("witness") : Json(nullptr);
  if (j.contains("margin") && !j.at("margin").is_null()) {
    r.margin = rational_from_json(j.at("margin"));
  }
  r.instances = j.value("instances", std::uint64_t{1});
  if (j.contains("seed") && !j.at("seed").is_null()) {
    r.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("data")) r.data = j.at("data");
  if (r.failed() && r.witness.is_null()) {
    throw InvalidArgument("failing report without witness: " + r.check);
  }
  return r;
}

}  // namespace lcv
