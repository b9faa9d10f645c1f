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

// Command-line runner: presets, ad-hoc runs and config validation.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "blochdense/config.hpp"
#include "blochdense/csv.hpp"
#include "blochdense/error.hpp"
#include "blochdense/presets.hpp"
#include "blochdense/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

// Keys that can be given as `--<key> <value>` to `run`, applied in this order
// after the config file.
struct RunKey {
  const char* key;
  const char* help;
};

constexpr RunKey kRunKeys[] = {
    {"state", "bell:<kind>, pes:<p>, product:<sx,sy,sz,rx,ry,rz> or file:<path>"},
    {"t2a", "T2 of qubit A"},
    {"t2b", "T2 of qubit B"},
    {"t1a", "T1 of qubit A (excludes --alpha-a)"},
    {"t1b", "T1 of qubit B (excludes --alpha-b)"},
    {"alpha-a", "T2/T1 ratio of qubit A"},
    {"alpha-b", "T2/T1 ratio of qubit B"},
    {"zeq-a", "equilibrium <sigma_z> of qubit A"},
    {"zeq-b", "equilibrium <sigma_z> of qubit B"},
    {"mode", "consistent or verbatim"},
    {"strict", "refuse non-CPTP factors (true/false)"},
    {"order", "channel_then_encode or encode_then_channel"},
    {"eve", "gain or verbatim"},
    {"eta", "four encoding probabilities"},
    {"tmax", "end of the time grid"},
    {"steps", "number of grid points"},
    {"quantities", "comma list of id, ia, ib, iab, iae, f"},
    {"seed", "recorded in the metadata line"},
    {"label", "output file becomes run_<label>.csv"},
    {"out-dir", "output directory"},
};

std::filesystem::path resolve_out_dir(const std::optional<std::filesystem::path>& explicit_dir) {
  if (explicit_dir) return *explicit_dir;
  if (const char* env = std::getenv("BLOCHDENSE_OUT"); env && *env) return env;
  return "out";
}

void print_paths(const std::vector<std::filesystem::path>& paths) {
  for (const auto& p : paths) std::cout << p.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit Bloch-channel dense-coding simulator"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Run one experiment from a config file and/or flags");
  std::string config_path;
  run_cmd->add_option("--config", config_path, "key = value config file");
  std::vector<std::pair<std::string, std::optional<std::string>>> run_flags;
  run_flags.reserve(std::size(kRunKeys));
  for (const RunKey& k : kRunKeys) run_flags.emplace_back(k.key, std::nullopt);
  for (std::size_t i = 0; i < run_flags.size(); ++i) {
    run_cmd->add_option("--" + run_flags[i].first, run_flags[i].second, kRunKeys[i].help);
  }

  // preset
  auto* preset_cmd = app.add_subcommand("preset", "Write the CSV curves of a named figure preset");
  std::string preset_name;
  std::optional<std::string> preset_out, preset_tmax, preset_steps;
  preset_cmd->add_option("name", preset_name, "Preset name (see list-presets)")->required();
  preset_cmd->add_option("--out-dir", preset_out, "Output directory");
  preset_cmd->add_option("--tmax", preset_tmax, "Override the end of the time grid");
  preset_cmd->add_option("--steps", preset_steps, "Override the number of grid points");

  // validate-config
  auto* validate_cmd = app.add_subcommand("validate-config", "Check a config file without running it");
  std::string validate_path;
  validate_cmd->add_option("file", validate_path, "Config file")->required();

  // list-presets
  auto* list_cmd = app.add_subcommand("list-presets", "List the available presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*list_cmd) {
      for (auto name : blochdense::preset_names()) {
        const auto p = blochdense::preset(name);
        std::cout << p.name << "\t" << p.curves.size() << " curve(s)\t" << p.description << '\n';
      }
      return kExitOk;
    }

    if (*validate_cmd) {
      const auto config = blochdense::load_config(validate_path);
      const auto problems = config.problems();
      if (!problems.empty()) {
        for (const auto& p : problems) std::cerr << validate_path << ": " << p << '\n';
        return kExitValidation;
      }
      std::cout << validate_path << ": ok\n" << config.describe() << '\n';
      return kExitOk;
    }

    if (*preset_cmd) {
      auto preset = blochdense::preset(preset_name);
      for (auto& curve : preset.curves) {
        if (preset_tmax) curve.config.set("tmax", *preset_tmax);
        if (preset_steps) curve.config.set("steps", *preset_steps);
      }
      std::optional<std::filesystem::path> dir;
      if (preset_out) dir = *preset_out;
      print_paths(blochdense::run_preset(preset, resolve_out_dir(dir)));
      return kExitOk;
    }

    if (*run_cmd) {
      blochdense::ExperimentConfig config;
      if (!config_path.empty()) config = blochdense::load_config(config_path);
      for (const auto& [key, value] : run_flags) {
        if (value) config.set(key, *value);
      }
      blochdense::Preset single{"run", "ad-hoc run", {{config.label, config}}};
      print_paths(blochdense::run_preset(single, resolve_out_dir(config.out_dir)));
      return kExitOk;
    }
  } catch (const blochdense::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const blochdense::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const blochdense::CptpViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
