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

#include "blochdense/runner.hpp"

#include "blochdense/csv.hpp"
#include "blochdense/error.hpp"

namespace blochdense {

std::vector<InfoRecord> run(const ExperimentConfig& config) {
  config.check();
  const BlochPair carrier = config.initial_state.resolve();
  const ChannelParams params = config.channel.resolve();
  const std::vector<double> grid = config.time_grid();
  return info_series(carrier, params, config.info_options(), grid);
}

std::vector<std::filesystem::path> run_preset(const Preset& preset,
                                              const std::filesystem::path& out_dir) {
  // Compute everything before touching the file system so a failing curve
  // leaves no partial output behind.
  std::vector<std::vector<InfoRecord>> tables;
  tables.reserve(preset.curves.size());
  for (const Curve& curve : preset.curves) tables.push_back(run(curve.config));

  std::vector<std::filesystem::path> written;
  for (std::size_t i = 0; i < preset.curves.size(); ++i) {
    const Curve& curve = preset.curves[i];
    const std::string metadata = "blochdense preset=" + preset.name + " curve=" + curve.label +
                                 " | times in units where T2a=" + format_time(curve.config.channel.t2a) +
                                 ", T2b=" + format_time(curve.config.channel.t2b) + " | " +
                                 curve.config.describe();
    written.push_back(emit_csv(tables[i], curve.config, out_dir, preset.name, curve.label, metadata));
  }
  return written;
}

}  // namespace blochdense
