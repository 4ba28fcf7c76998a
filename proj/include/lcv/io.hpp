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

// File formats.
//
// Measure   {"n": 4, "entries": [{"mask": 5, "num": "1", "den": "2"}, ...]}
//           bit i of mask is coordinate i+1.
// Seq       {"values": [{"num": "1", "den": "1"}, ...]}
// Graph     text; "c ..." comment lines, one "p <vertices> <edges>" header,
//           then one "e <u> <v>" line per edge, vertices numbered from 1.
//           Edge j (in file order) is ground element j-1.
// Linear    {"p": 3, "matrix": [[1, 0, 2], [0, 1, 1]]}
// Matroid   backend descriptor, {"type": ...}:
//             uniform        {"r", "n"}
//             graphic        {"vertices", "edges": [[u, v], ...]} (1-based)
//             linear         {"p", "matrix"}
//             random_linear  {"p", "r", "n", "seed"}
//             direct_sum     {"parts": [descriptor, ...]}
//             minor          {"parent", "deleted": [e...], "contracted": [e...]}
//             corrupted      {"base", "toggle": [mask, ...]}
//           ground elements in minor/corrupted are 0-based.

#ifndef LCV_IO_HPP_
#define LCV_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "lcv/matroid.hpp"
#include "lcv/measure.hpp"
#include "lcv/report.hpp"
#include "lcv/seq.hpp"

namespace lcv {

class ParseError : public Error {
 public:
  using Error::Error;
};

Json measure_to_json(const Measure& mu);
Measure measure_from_json(const Json& j);

Json seq_to_json(SeqView a);
Seq seq_from_json(const Json& j);

MatroidPtr graph_from_text(std::string_view text);
MatroidPtr linear_from_json(const Json& j);
MatroidPtr matroid_from_json(const Json& j);

// Throw ParseError on missing files or malformed content.
std::string read_text_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace lcv

#endif  // LCV_IO_HPP_
