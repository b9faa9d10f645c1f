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

#include "blochdense/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <system_error>

#include "blochdense/error.hpp"

namespace blochdense {

std::string format_time(double t) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", t);
  return buf;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_csv(std::span<const InfoRecord> rows, const ExperimentConfig& config,
                       std::string_view metadata) {
  std::string out;
  out.reserve(64 + rows.size() * (16 + 16 * config.quantities.size()));
  out += "# ";
  out += metadata;
  out += '\n';
  out += 't';
  for (Quantity q : config.quantities) {
    out += ',';
    out += quantity_column(q);
  }
  out += '\n';
  for (const InfoRecord& r : rows) {
    out += format_time(r.t);
    for (Quantity q : config.quantities) {
      out += ',';
      out += format_value(quantity_value(r, q));
    }
    out += '\n';
  }
  return out;
}

std::filesystem::path csv_filename(std::string_view preset, std::string_view curve_label) {
  return std::string(preset) + "_" + std::string(curve_label) + ".csv";
}

std::filesystem::path emit_csv(std::span<const InfoRecord> rows, const ExperimentConfig& config,
                               const std::filesystem::path& dir, std::string_view preset,
                               std::string_view curve_label, std::string_view metadata) {
  if (rows.empty()) throw ValidationError("emit_csv: refusing to write an empty table");
  if (config.quantities.empty()) throw ValidationError("emit_csv: no quantities selected");

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  const std::filesystem::path path = dir / csv_filename(preset, curve_label);
  const std::string body = format_csv(rows, config, metadata);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
  return path;
}

}  // namespace blochdense
