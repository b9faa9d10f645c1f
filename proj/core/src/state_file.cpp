// Copyright 2026 The blochdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blochdense/state_file.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "blochdense/error.hpp"
#include "text.hpp"

namespace blochdense {

BlochPair parse_bloch_pair(std::string_view text) {
  BlochPair b;
  bool seen_s = false;
  bool seen_r = false;
  bool seen_q = false;
  for (const text::KeyValue& kv : text::key_value_lines(text)) {
    const std::string& key = kv.key;
    const std::string where = "state file line " + std::to_string(kv.line);
    auto take = [&](bool& seen, std::size_t count) {
      if (seen) throw ValidationError(where + ": duplicate key '" + key + "'");
      seen = true;
      std::vector<double> v = text::parse_doubles(kv.value, where + " (" + key + ")");
      if (v.size() != count) {
        throw ValidationError(where + ": key '" + key + "' needs " + std::to_string(count) +
                              " values, got " + std::to_string(v.size()));
      }
      return v;
    };
    if (key == "S") {
      const auto v = take(seen_s, 3);
      b.s = Vec3(v[0], v[1], v[2]);
    } else if (key == "R") {
      const auto v = take(seen_r, 3);
      b.r = Vec3(v[0], v[1], v[2]);
    } else if (key == "Q") {
      const auto v = take(seen_q, 9);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) b.q(i, j) = v[static_cast<std::size_t>(3 * i + j)];
      }
    } else {
      throw ValidationError(where + ": unknown key '" + key + "' (expected S, R or Q)");
    }
  }
  if (!seen_s || !seen_r || !seen_q) {
    throw ValidationError("state file: S, R and Q are all required");
  }
  return b;
}

BlochPair load_bloch_pair(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_bloch_pair(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace blochdense
