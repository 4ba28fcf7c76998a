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

#include "lcv/io.hpp"

#include <fstream>
#include <sstream>

namespace lcv {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Mask elements_to_mask(const Json& list) {
  if (!list.is_array()) throw ParseError("element list must be an array");
  Mask m = 0;
  for (const Json& e : list) {
    const int i = e.get<int>();
    if (i < 0 || i >= kMaxGroundSize) throw ParseError("element index out of range");
    m |= Mask{1} << i;
  }
  return m;
}

std::vector<std::vector<long>> matrix_from_json(const Json& j) {
  try {
    return j.get<std::vector<std::vector<long>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix must be a list of integer rows: ") + e.what());
  }
}

}  // namespace

Json measure_to_json(const Measure& mu) {
  Json entries = Json::array();
  for (const WeightedPoint& p : mu.points()) {
    entries.push_back(Json{{"mask", p.mask},
                           {"num", p.weight.get_num().get_str()},
                           {"den", p.weight.get_den().get_str()}});
  }
  return Json{{"n", mu.n()}, {"entries", entries}};
}

Measure measure_from_json(const Json& j) {
  const int n = get<int>(j, "n");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  std::vector<WeightedPoint> points;
  for (const Json& e : entries) {
    WeightedPoint p;
    p.mask = get<Mask>(e, "mask");
    p.weight = rational_from_json(e);
    points.push_back(std::move(p));
  }
  return Measure(n, std::move(points));
}

Json seq_to_json(SeqView a) {
  Json values = Json::array();
  for (const Rational& x : a) values.push_back(rational_to_json(x));
  return Json{{"values", values}};
}

Seq seq_from_json(const Json& j) {
  const Json& values = field(j, "values");
  if (!values.is_array()) throw ParseError("'values' must be an array");
  Seq out;
  for (const Json& v : values) out.push_back(rational_from_json(v));
  require_nonnegative(out);
  return out;
}

MatroidPtr graph_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int vertices = -1;
  int declared_edges = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string tag;
    if (!(words >> tag) || tag == "c") continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tag == "p") {
      if (vertices >= 0) throw ParseError(where + ": repeated header");
      if (!(words >> vertices >> declared_edges) || vertices < 1 || declared_edges < 0) {
        throw ParseError(where + ": expected 'p <vertices> <edges>'");
      }
    } else if (tag == "e") {
      if (vertices < 0) throw ParseError(where + ": edge before header");
      int u = 0;
      int v = 0;
      if (!(words >> u >> v) || u < 1 || v < 1 || u > vertices || v > vertices) {
        throw ParseError(where + ": expected 'e <u> <v>' with 1 <= u, v <= " +
                         std::to_string(vertices));
      }
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(where + ": unknown line type '" + tag + "'");
    }
  }
  if (vertices < 0) throw ParseError("missing 'p' header");
  if (static_cast<int>(edges.size()) != declared_edges) {
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges, found " +
                     std::to_string(edges.size()));
  }
  if (edges.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw ParseError("too many edges");
  }
  return graphic_matroid(vertices, std::move(edges));
}

MatroidPtr linear_from_json(const Json& j) {
  return linear_matroid(get<int>(j, "p"), matrix_from_json(field(j, "matrix")));
}

MatroidPtr matroid_from_json(const Json& j) {
  const std::string type = get<std::string>(j, "type");
  if (type == "uniform") return uniform_matroid(get<int>(j, "r"), get<int>(j, "n"));
  if (type == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [u, v]");
      edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
    }
    return graphic_matroid(get<int>(j, "vertices"), std::move(edges));
  }
  if (type == "linear") return linear_from_json(j);
  if (type == "random_linear") {
    const int p = get<int>(j, "p");
    const int r = get<int>(j, "r");
    const int n = get<int>(j, "n");
    if (r < 0 || n < 0 || n > kMaxGroundSize) throw ParseError("bad random_linear shape");
    Rng rng(get<std::uint64_t>(j, "seed"));
    std::vector<std::vector<long>> m(r, std::vector<long>(n));
    for (auto& row : m) {
      for (long& x : row) x = static_cast<long>(rng.below(static_cast<std::uint64_t>(p)));
    }
    return linear_matroid(p, std::move(m));
  }
  if (type == "direct_sum") {
    std::vector<MatroidPtr> parts;
    for (const Json& part : field(j, "parts")) parts.push_back(matroid_from_json(part));
    return direct_sum(std::move(parts));
  }
  if (type == "minor") {
    return minor(matroid_from_json(field(j, "parent")), elements_to_mask(field(j, "deleted")),
                 elements_to_mask(field(j, "contracted")));
  }
  if (type == "corrupted") {
    return corrupted(matroid_from_json(field(j, "base")),
                     get<std::vector<Mask>>(j, "toggle"));
  }
  throw ParseError("unknown matroid type '" + type + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("write failed for " + path.string());
}

}  // namespace lcv
