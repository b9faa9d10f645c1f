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

#ifndef BLOCHDENSE_CODING_HPP
#define BLOCHDENSE_CODING_HPP

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "blochdense/channel.hpp"
#include "blochdense/qstate.hpp"

namespace blochdense {

/// Local unitaries applied to the first qubit, each chosen with its
/// probability.
struct EncodingSpec {
  std::array<Mat2c, 4> unitaries;
  std::array<double, 4> probabilities{0.25, 0.25, 0.25, 0.25};

  /// I, sigma_x, sigma_y, sigma_z with the given weights.
  static EncodingSpec pauli(const std::array<double, 4>& probabilities = {0.25, 0.25, 0.25, 0.25});
  void check() const;
};

enum class ProtocolOrder {
  kChannelThenEncode,  // U_j applied to the already-relaxed carrier
  kEncodeThenChannel,  // each encoded state relaxes independently
};

ProtocolOrder parse_protocol_order(std::string_view name);
std::string_view to_string(ProtocolOrder order);

struct EnsembleMember {
  double probability = 0.0;
  DensityMatrix state;
};

using Ensemble = std::vector<EnsembleMember>;

/// Member j is (eta_j, (U_j (x) I) rho (U_j (x) I)^dagger).
Ensemble encode_ensemble(const DensityMatrix& rho, const EncodingSpec& spec);
Ensemble encode_ensemble(const BlochPair& b, const EncodingSpec& spec);

DensityMatrix ensemble_average(const Ensemble& ensemble);

/// Holevo quantity S(sum eta_j rho_j) - sum eta_j S(rho_j), in bits.
double holevo(const Ensemble& ensemble);

/// The ensemble Bob receives at time t for the chosen protocol order.
Ensemble transmitted_ensemble(const BlochPair& carrier, const ChannelParams& params,
                              const EncodingSpec& spec, ProtocolOrder order, double t);

double decoded_info(const BlochPair& carrier, const ChannelParams& params,
                    const EncodingSpec& spec, ProtocolOrder order, double t);

struct DecodedSample {
  double t = 0.0;
  double decoded = 0.0;
};

/// decoded_info at every grid point. The grid must be non-decreasing.
std::vector<DecodedSample> decoded_info_series(const BlochPair& carrier,
                                               const ChannelParams& params,
                                               const EncodingSpec& spec, ProtocolOrder order,
                                               std::span<const double> times);

}  // namespace blochdense

#endif  // BLOCHDENSE_CODING_HPP
