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

#ifndef BLOCHDENSE_CSV_HPP
#define BLOCHDENSE_CSV_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "blochdense/config.hpp"
#include "blochdense/infodyn.hpp"

namespace blochdense {

// CSV layout:
//
//   # <metadata>
//   t,<column>,<column>,...
//   0,2.000000000000
//   0.5,1.987654321098
//
// t is printed with up to 12 significant digits, quantities with 12 digits
// after the decimal point. Lines end in '\n'; the decimal separator is
// always '.'.

std::string format_time(double t);
std::string format_value(double v);

std::string format_csv(std::span<const InfoRecord> rows, const ExperimentConfig& config,
                       std::string_view metadata);

std::filesystem::path csv_filename(std::string_view preset, std::string_view curve_label);

/// Writes the table to `dir / csv_filename(preset, label)`, creating `dir`
/// if needed. Throws ValidationError for an empty table and IoError with the
/// path on any file-system failure.
std::filesystem::path emit_csv(std::span<const InfoRecord> rows, const ExperimentConfig& config,
                               const std::filesystem::path& dir, std::string_view preset,
                               std::string_view curve_label, std::string_view metadata);

}  // namespace blochdense

#endif  // BLOCHDENSE_CSV_HPP
