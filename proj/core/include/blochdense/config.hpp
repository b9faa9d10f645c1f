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

#ifndef BLOCHDENSE_CONFIG_HPP
#define BLOCHDENSE_CONFIG_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blochdense/channel.hpp"
#include "blochdense/coding.hpp"
#include "blochdense/infodyn.hpp"
#include "blochdense/qstate.hpp"

namespace blochdense {

enum class Quantity { kDecoded, kLocalA, kLocalB, kMutual, kEve, kFidelity };

/// Short key used on the command line and in config files ("id", "ia", ...).
std::string_view quantity_key(Quantity q);
/// CSV column name ("I_d", "I_A", ...).
std::string_view quantity_column(Quantity q);
Quantity parse_quantity(std::string_view key);
double quantity_value(const InfoRecord& record, Quantity q);

/// Initial carrier, written as one of
///   bell:<phi_plus|phi_minus|psi_plus|psi_minus>
///   pes:<p>
///   product:<sx>,<sy>,<sz>,<rx>,<ry>,<rz>
///   file:<path>
struct InitialState {
  struct Bell {
    BellKind kind = BellKind::kPsiMinus;
  };
  struct Partial {
    double p = 0.0;
  };
  struct Product {
    Vec3 s = Vec3::Zero();
    Vec3 r = Vec3::Zero();
  };
  struct File {
    std::filesystem::path path;
  };

  std::variant<Bell, Partial, Product, File> value = Bell{};

  static InitialState parse(std::string_view text);
  std::string describe() const;
  BlochPair resolve() const;
};

/// Channel settings as given by the user. Either alpha or T1 may be given
/// per qubit, not both; resolve() turns them into ChannelParams.
struct ChannelSpec {
  double t2a = 100.0;
  double t2b = 100.0;
  std::optional<double> alpha_a;
  std::optional<double> alpha_b;
  std::optional<double> t1a;
  std::optional<double> t1b;
  double zeq_a = 0.0;
  double zeq_b = 0.0;
  EvolutionMode mode = EvolutionMode::kConsistent;
  std::optional<bool> strict;  // defaults to (mode == consistent)

  ChannelParams resolve() const;
};

struct ExperimentConfig {
  InitialState initial_state;
  ChannelSpec channel;
  ProtocolOrder order = ProtocolOrder::kChannelThenEncode;
  std::array<double, 4> eta{0.25, 0.25, 0.25, 0.25};
  EveVariant eve = EveVariant::kGain;
  double t_max = 300.0;
  int steps = 601;
  std::vector<Quantity> quantities{Quantity::kDecoded};
  std::uint64_t seed = 0;
  std::string label = "custom";
  std::optional<std::filesystem::path> out_dir;

  /// Applies one `key = value` setting. Keys match the CLI flag names
  /// without the leading dashes. Throws ValidationError naming the key.
  void set(std::string_view key, std::string_view value);

  /// Field-level problems; empty when the config is runnable.
  std::vector<std::string> problems() const;
  /// Throws ValidationError listing every problem.
  void check() const;

  std::vector<double> time_grid() const;
  InfoOptions info_options() const;
  std::string describe() const;
};

/// Parses `key = value` lines on top of `base`. `#` starts a comment.
/// Relative `file:` state paths are resolved against `base_dir`.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {},
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});

/// `steps` points from 0 to t_max inclusive.
std::vector<double> uniform_grid(double t_max, int steps);

}  // namespace blochdense

#endif  // BLOCHDENSE_CONFIG_HPP
