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

#ifndef BLOCHDENSE_STATE_FILE_HPP
#define BLOCHDENSE_STATE_FILE_HPP

#include <filesystem>
#include <string_view>

#include "blochdense/qstate.hpp"

namespace blochdense {

// Custom-state file format, one `key = value` per line:
//
//   # comment
//   S = 0, 0, 0.5
//   R = 0, 0, -0.5
//   Q = -0.866, 0, 0, 0, -0.866, 0, 0, 0, -1
//
// Q is row-major. Numbers use `.` as decimal separator regardless of locale.
// All three keys are required; each may appear once.

BlochPair parse_bloch_pair(std::string_view text);
BlochPair load_bloch_pair(const std::filesystem::path& path);

}  // namespace blochdense

#endif  // BLOCHDENSE_STATE_FILE_HPP
