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

#include "blochdense/presets.hpp"

#include <cstdio>
#include <string>

#include "blochdense/error.hpp"

namespace blochdense {
namespace {

constexpr double kPartialP = 0.5;

std::string tag(const char* prefix, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%.3f", prefix, v);
  return buf;
}

ExperimentConfig base(bool maximal, std::initializer_list<Quantity> quantities) {
  ExperimentConfig c;
  c.initial_state = maximal ? InitialState{InitialState::Bell{BellKind::kPsiMinus}}
                            : InitialState{InitialState::Partial{kPartialP}};
  c.channel.t2a = 100.0;
  c.channel.t2b = 100.0;
  c.t_max = 300.0;
  c.steps = 601;
  c.quantities = quantities;
  return c;
}

void set_channel(ExperimentConfig& c, double alpha, double zeq_a, double zeq_b) {
  c.channel.alpha_a = alpha;
  c.channel.alpha_b = alpha;
  c.channel.zeq_a = zeq_a;
  c.channel.zeq_b = zeq_b;
}

// Decoded information against the first qubit's equilibrium value.
Preset decoded_vs_zeq(std::string name, bool maximal) {
  Preset p{std::move(name), "", {}};
  p.description = std::string(maximal ? "maximally" : "partially") +
                  " entangled carrier, I_d for zeq-a = 1, 0.9, 0.8 (zeq-b = 0.9, alpha = 0.5)";
  for (double za : {1.0, 0.9, 0.8}) {
    ExperimentConfig c = base(maximal, {Quantity::kDecoded});
    set_channel(c, 0.5, za, 0.9);
    c.label = tag("zeq", za);
    p.curves.push_back({c.label, c});
  }
  return p;
}

// Decoded information against the relaxation-time ratio.
Preset decoded_vs_alpha(std::string name, bool maximal) {
  Preset p{std::move(name), "", {}};
  p.description = std::string(maximal ? "maximally" : "partially") +
                  " entangled carrier, I_d for alpha = 0.7, 0.6, 0.5 (zeq-a = 1, zeq-b = 0.9)";
  for (double alpha : {0.7, 0.6, 0.5}) {
    ExperimentConfig c = base(maximal, {Quantity::kDecoded});
    set_channel(c, alpha, 1.0, 0.9);
    c.label = tag("alpha", alpha);
    p.curves.push_back({c.label, c});
  }
  return p;
}

// Local, non-local and eavesdropper information for a single setting.
Preset information(std::string name, bool maximal, double alpha, double zeq_a, const char* label_prefix,
                   double label_value) {
  Preset p{std::move(name), "", {}};
  ExperimentConfig c =
      base(maximal, {Quantity::kLocalA, Quantity::kLocalB, Quantity::kMutual, Quantity::kEve});
  set_channel(c, alpha, zeq_a, 0.9);
  c.label = tag(label_prefix, label_value);
  p.description = std::string(maximal ? "maximally" : "partially") +
                  " entangled carrier, I_A, I_B, I_AB, I_AE (alpha = " + tag("", alpha) +
                  ", zeq-a = " + tag("", zeq_a) + ", zeq-b = 0.900)";
  p.curves.push_back({c.label, c});
  return p;
}

Preset order_compare() {
  Preset p{"order-compare",
           "fig1a parameters under both protocol orders (channel_then_encode, encode_then_channel)",
           {}};
  for (ProtocolOrder order : {ProtocolOrder::kChannelThenEncode, ProtocolOrder::kEncodeThenChannel}) {
    for (double za : {1.0, 0.9, 0.8}) {
      ExperimentConfig c = base(true, {Quantity::kDecoded});
      set_channel(c, 0.5, za, 0.9);
      c.order = order;
      c.label = std::string(to_string(order)) + "_" + tag("zeq", za);
      p.curves.push_back({c.label, c});
    }
  }
  return p;
}

}  // namespace

std::vector<std::string_view> preset_names() {
  return {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b",
          "fig4a", "fig4b", "fig5a", "fig5b", "order-compare"};
}

Preset preset(std::string_view name) {
  if (name == "fig1a") return decoded_vs_zeq("fig1a", true);
  if (name == "fig1b") return decoded_vs_alpha("fig1b", true);
  if (name == "fig2a") return decoded_vs_zeq("fig2a", false);
  if (name == "fig2b") return decoded_vs_alpha("fig2b", false);
  if (name == "fig3a") return information("fig3a", true, 0.7, 1.0, "zeq", 1.0);
  if (name == "fig3b") return information("fig3b", true, 0.7, 0.3, "zeq", 0.3);
  if (name == "fig4a") return information("fig4a", false, 0.7, 1.0, "zeq", 1.0);
  if (name == "fig4b") return information("fig4b", false, 0.7, 0.3, "zeq", 0.3);
  if (name == "fig5a") return information("fig5a", true, 0.3, 1.0, "alpha", 0.3);
  if (name == "fig5b") return information("fig5b", false, 0.3, 1.0, "alpha", 0.3);
  if (name == "order-compare") return order_compare();
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace blochdense
