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

#ifndef BLOCHDENSE_RUNNER_HPP
#define BLOCHDENSE_RUNNER_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "blochdense/config.hpp"
#include "blochdense/infodyn.hpp"
#include "blochdense/presets.hpp"

namespace blochdense {

/// Evaluates the configured quantities on the config's time grid.
/// Rows come back in ascending t. Throws ValidationError for a bad config
/// and CptpViolation from strict evolution.
std::vector<InfoRecord> run(const ExperimentConfig& config);

/// Runs every curve of the preset and writes `<preset>_<label>.csv` files
/// into `out_dir`. Returns the written paths in curve order.
std::vector<std::filesystem::path> run_preset(const Preset& preset,
                                              const std::filesystem::path& out_dir);

}  // namespace blochdense

#endif  // BLOCHDENSE_RUNNER_HPP
