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

#ifndef BLOCHDENSE_PRESETS_HPP
#define BLOCHDENSE_PRESETS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "blochdense/config.hpp"

namespace blochdense {

struct Curve {
  std::string label;
  ExperimentConfig config;
};

/// A named figure panel: one or more curves sharing a time grid.
struct Preset {
  std::string name;
  std::string description;
  std::vector<Curve> curves;
};

/// Figure panels fig1a ... fig5b, plus `order-compare`, which runs the
/// fig1a parameters under both protocol orders.
std::vector<std::string_view> preset_names();

/// Throws ValidationError for an unknown name.
Preset preset(std::string_view name);

}  // namespace blochdense

#endif  // BLOCHDENSE_PRESETS_HPP
