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

#ifndef BLOCHDENSE_INFODYN_HPP
#define BLOCHDENSE_INFODYN_HPP

#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "blochdense/coding.hpp"

namespace blochdense {

/// One time sample of the information quantities, all in bits except F.
/// Fields that were not requested are NaN.
struct InfoRecord {
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

  double t = 0.0;
  double decoded = kUnset;   // I_d
  double local_a = kUnset;   // I_A
  double local_b = kUnset;   // I_B
  double mutual = kUnset;    // I_AB
  double eve = kUnset;       // I_AE
  double fidelity = kUnset;  // F
};

/// 1 - S(rho) for a single qubit.
double local_info(const QubitDensity& m);

/// S(rho_a) + S(rho_b) - S(rho_ab).
double mutual_info(const DensityMatrix& m);

enum class EveVariant {
  kGain,      // 1 - h(F), in [0, 1]
  kVerbatim,  // F log F + (1-F) log(1-F), in [-1, 0]
};

EveVariant parse_eve_variant(std::string_view name);
std::string_view to_string(EveVariant variant);

double eve_info(double fidelity, EveVariant variant);

/// <psi0| rho(t) |psi0> where psi0 is the (pure) initial carrier.
/// Throws ValidationError if the carrier is mixed.
double decoding_fidelity(const BlochPair& carrier, const ChannelParams& params, double t);

struct InfoOptions {
  EncodingSpec encoding = EncodingSpec::pauli();
  ProtocolOrder order = ProtocolOrder::kChannelThenEncode;
  EveVariant eve = EveVariant::kGain;
  bool entropic = true;  // I_d, I_A, I_B, I_AB
  bool fidelity = true;  // F, I_AE; needs a pure carrier
};

InfoRecord info_record(const BlochPair& carrier, const ChannelParams& params,
                       const InfoOptions& options, double t);

std::vector<InfoRecord> info_series(const BlochPair& carrier, const ChannelParams& params,
                                    const InfoOptions& options, std::span<const double> times);

}  // namespace blochdense

#endif  // BLOCHDENSE_INFODYN_HPP
