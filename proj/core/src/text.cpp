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

#include "text.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "blochdense/error.hpp"

namespace blochdense::text {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<KeyValue> key_value_lines(std::string_view text) {
  std::vector<KeyValue> out;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                            std::string(line) + "'");
    }
    KeyValue kv{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
                line_no};
    if (kv.key.empty()) throw ValidationError("line " + std::to_string(line_no) + ": empty key");
    out.push_back(std::move(kv));
  }
  return out;
}

double parse_double(std::string_view token, const std::string& where) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw ValidationError(where + ": '" + std::string(token) + "' is not a finite number");
  }
  return v;
}

long long parse_integer(std::string_view token, const std::string& where) {
  token = trim(token);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ValidationError(where + ": '" + std::string(token) + "' is not an integer");
  }
  return v;
}

bool parse_bool(std::string_view token, const std::string& where) {
  token = trim(token);
  if (token == "true" || token == "1" || token == "yes" || token == "on") return true;
  if (token == "false" || token == "0" || token == "no" || token == "off") return false;
  throw ValidationError(where + ": '" + std::string(token) + "' is not a boolean");
}

std::vector<std::string> split(std::string_view list, char sep) {
  std::vector<std::string> out;
  while (true) {
    const auto pos = list.find(sep);
    out.emplace_back(trim(list.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    list = list.substr(pos + 1);
  }
  return out;
}

std::vector<double> parse_doubles(std::string_view list, const std::string& where) {
  std::vector<double> out;
  if (list.find(',') != std::string_view::npos) {
    for (const auto& token : split(list, ',')) out.push_back(parse_double(token, where));
    return out;
  }
  std::size_t pos = 0;
  while (pos < list.size()) {
    while (pos < list.size() && (list[pos] == ' ' || list[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < list.size() && list[end] != ' ' && list[end] != '\t') ++end;
    if (end > pos) out.push_back(parse_double(list.substr(pos, end - pos), where));
    pos = end;
  }
  if (out.empty()) out.push_back(parse_double(list, where));  // reports the empty value
  return out;
}

}  // namespace blochdense::text
