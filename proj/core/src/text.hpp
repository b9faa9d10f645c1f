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

#ifndef BLOCHDENSE_SRC_TEXT_HPP
#define BLOCHDENSE_SRC_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

// Locale-independent helpers for the key = value text formats.
namespace blochdense::text {

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

std::string_view trim(std::string_view s);

/// Splits into `key = value` entries, skipping blank lines and `#` comments.
std::vector<KeyValue> key_value_lines(std::string_view text);

double parse_double(std::string_view token, const std::string& where);
long long parse_integer(std::string_view token, const std::string& where);
bool parse_bool(std::string_view token, const std::string& where);
// Comma-separated, or whitespace-separated when no comma is present.
std::vector<double> parse_doubles(std::string_view list, const std::string& where);
std::vector<std::string> split(std::string_view list, char sep);

}  // namespace blochdense::text

#endif  // BLOCHDENSE_SRC_TEXT_HPP
