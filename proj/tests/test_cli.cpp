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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lcv::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return (std::filesystem::path(LCV_DATA_DIR) / name).string();
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("measure subcommand") {
  Run r = run({"--json", "measure", "--check", "capp", data("uniform4.json")});
  CHECK(r.code == lcv::kExitPass);
  CHECK(json_of(r)["verdict"] == "pass");

  r = run({"--json", "measure", "--check", "app", data("pair00_11.json")});
  CHECK(r.code == lcv::kExitFail);
  CHECK(json_of(r)["verdict"] == "fail");
  CHECK(json_of(r)["margin"] == nlohmann::json::parse(R"({"num": "-1", "den": "4"})"));

  r = run({"measure", "--check", "gamma", "--level", "1", data("pair00_11.json"), "--json"});
  CHECK(r.code == lcv::kExitPass);
  CHECK(json_of(r)["data"]["value"] == "0");

  r = run({"measure", "--check", "rank", data("pair00_11.json")});
  CHECK(r.code == lcv::kExitPass);
  CHECK(r.out.find("rank: pass") != std::string::npos);
}

TEST_CASE("seq subcommand") {
  CHECK(run({"seq", "--check", "ulc", "1,4,6,0,0", "--n", "4"}).code == lcv::kExitPass);
  CHECK(run({"seq", "--check", "ulc", "1,1,1", "--n", "2"}).code == lcv::kExitFail);
  const Run c = run({"--json", "seq", "convolve", "1,2,1", "1,2,1"});
  CHECK(c.code == lcv::kExitPass);
  CHECK(json_of(c)["data"]["values"] == nlohmann::json::parse(R"(["1","4","6","4","1"])"));
  CHECK(run({"seq", "--check", "symm-uu", "1,6,10,6,1"}).code == lcv::kExitPass);
  CHECK(run({"seq", "--check", "lc", "1,0,1"}).code == lcv::kExitFail);
}

TEST_CASE("scheme subcommand") {
  Run r = run({"--json", "scheme", "certificate", "--n", "2", "--l", "1"});
  CHECK(r.code == lcv::kExitPass);
  CHECK(json_of(r)["data"]["spectrum"] == nlohmann::json::parse(R"(["0","2"])"));

  r = run({"--json", "scheme", "table", "--n", "4", "--l", "2"});
  CHECK(r.code == lcv::kExitPass);
  const auto table = json_of(r)["data"]["P"];
  REQUIRE(table.size() == 3);
  for (const auto& v : table[0]) CHECK(v == "1");

  CHECK(run({"scheme", "sum-identity", "--M", "1", "--N", "1", "--a", "0", "--b", "1"}).code ==
        lcv::kExitPass);
  CHECK(run({"scheme", "inner-sum", "--n", "6", "--l", "3", "--k", "1"}).code == lcv::kExitPass);
  CHECK(run({"scheme", "certificate", "--n", "3", "--l", "2"}).code == lcv::kExitConfig);
}

TEST_CASE("matroid subcommand") {
  CHECK(run({"matroid", "--uniform", "2,4", "--check", "mason"}).code == lcv::kExitPass);
  CHECK(run({"matroid", "--graph", data("k3.gr"), "--check", "capp"}).code == lcv::kExitPass);
  const Run app = run({"--json", "matroid", "--uniform", "2,4", "--check", "app"});
  CHECK(app.code == lcv::kExitPass);
  CHECK(json_of(app)["data"]["pi_lower"] == "0");
  CHECK(run({"matroid", "--linear", data("gf3_example.json"), "--check", "axioms"}).code ==
        lcv::kExitPass);
  CHECK(run({"matroid", "--uniform", "2,4", "--check", "info"}).code == lcv::kExitPass);
  CHECK(run({"matroid", "--uniform", "2;4", "--check", "info"}).code == lcv::kExitConfig);
}

TEST_CASE("suite subcommand and exit codes") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = (dir / "lcv_cli_good.json").string();
  const auto bad = (dir / "lcv_cli_bad.json").string();
  {
    std::ofstream(good) << R"({"seed": 2, "suites": [{"suite": "f_sequence_sweep", "max_size": 4}]})";
    std::ofstream(bad) << R"({"seed": 2, "suites": [{"suite": "matroid_capp_search", "variant": "capp",
      "n_max": 4, "extra": [{"type": "corrupted", "base": {"type": "uniform", "r": 1, "n": 3},
      "toggle": [7]}]}]})";
  }
  CHECK(run({"suite", good}).code == lcv::kExitPass);
  const Run b = run({"--json", "suite", bad});
  CHECK(b.code == lcv::kExitFail);
  CHECK(json_of(b)["verdict"] == "fail");
  CHECK(run({"suite", (dir / "lcv_cli_missing.json").string()}).code == lcv::kExitConfig);
  const Run d = run({"suite", "--print-default"});
  CHECK(d.code == lcv::kExitPass);
  CHECK(nlohmann::json::parse(d.out).contains("suites"));
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == lcv::kExitConfig);
  CHECK(run({"measure", "--check", "bogus", data("uniform4.json")}).code == lcv::kExitConfig);
  CHECK(run({"measure", "--check", "app", data("absent.json")}).code == lcv::kExitConfig);
  CHECK(run({"measure", "--check", "app", "--cap-n", "40", data("uniform4.json")}).code ==
        lcv::kExitConfig);
}

TEST_CASE("report written to a file") {
  const auto path = (std::filesystem::temp_directory_path() / "lcv_cli_out.json").string();
  const Run r = run({"--json", "--out", path, "seq", "--check", "lc", "1,2,1"});
  CHECK(r.code == lcv::kExitPass);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in)["verdict"] == "pass");
  std::filesystem::remove(path);
}
