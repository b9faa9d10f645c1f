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

#include "blochdense/coding.hpp"

#include <cmath>
#include <string>

#include "blochdense/error.hpp"

namespace blochdense {

EncodingSpec EncodingSpec::pauli(const std::array<double, 4>& probabilities) {
  EncodingSpec spec;
  spec.unitaries[0] = Mat2c::Identity();
  for (int k = 0; k < 3; ++k) spec.unitaries[static_cast<std::size_t>(k + 1)] = blochdense::pauli()[k];
  spec.probabilities = probabilities;
  return spec;
}

void EncodingSpec::check() const {
  double total = 0.0;
  for (double eta : probabilities) {
    if (!(eta >= 0.0)) throw ValidationError("encoding: probabilities must be non-negative");
    total += eta;
  }
  if (!(std::abs(total - 1.0) <= 1e-12)) {
    throw ValidationError("encoding: probabilities sum to " + std::to_string(total) + ", not 1");
  }
  for (std::size_t j = 0; j < unitaries.size(); ++j) {
    const double dev = (unitaries[j].adjoint() * unitaries[j] - Mat2c::Identity()).cwiseAbs().maxCoeff();
    if (!(dev <= 1e-12)) {
      throw ValidationError("encoding: operator " + std::to_string(j) + " is not unitary");
    }
  }
}

ProtocolOrder parse_protocol_order(std::string_view name) {
  if (name == "channel_then_encode" || name == "channel-then-encode") {
    return ProtocolOrder::kChannelThenEncode;
  }
  if (name == "encode_then_channel" || name == "encode-then-channel") {
    return ProtocolOrder::kEncodeThenChannel;
  }
  throw ValidationError("unknown protocol order '" + std::string(name) +
                        "' (expected channel_then_encode or encode_then_channel)");
}

std::string_view to_string(ProtocolOrder order) {
  return order == ProtocolOrder::kChannelThenEncode ? "channel_then_encode" : "encode_then_channel";
}

Ensemble encode_ensemble(const DensityMatrix& rho, const EncodingSpec& spec) {
  spec.check();
  Ensemble out;
  out.reserve(spec.unitaries.size());
  for (std::size_t j = 0; j < spec.unitaries.size(); ++j) {
    const Mat4c u = kron(spec.unitaries[j], Mat2c::Identity());
    out.push_back({spec.probabilities[j], DensityMatrix(u * rho.matrix() * u.adjoint())});
  }
  return out;
}

Ensemble encode_ensemble(const BlochPair& b, const EncodingSpec& spec) {
  return encode_ensemble(to_density(b), spec);
}

DensityMatrix ensemble_average(const Ensemble& ensemble) {
  Mat4c avg = Mat4c::Zero();
  for (const auto& member : ensemble) avg += member.probability * member.state.matrix();
  return DensityMatrix(avg);
}

double holevo(const Ensemble& ensemble) {
  if (ensemble.empty()) throw ValidationError("holevo: empty ensemble");
  double total = 0.0;
  double mixed = 0.0;
  for (const auto& member : ensemble) {
    if (!(member.probability >= 0.0)) throw ValidationError("holevo: negative probability");
    total += member.probability;
    if (member.probability > 0.0) mixed += member.probability * entropy(member.state);
  }
  if (!(std::abs(total - 1.0) <= 1e-12)) {
    throw ValidationError("holevo: probabilities sum to " + std::to_string(total) + ", not 1");
  }
  return entropy(ensemble_average(ensemble)) - mixed;
}

Ensemble transmitted_ensemble(const BlochPair& carrier, const ChannelParams& params,
                              const EncodingSpec& spec, ProtocolOrder order, double t) {
  if (order == ProtocolOrder::kChannelThenEncode) {
    return encode_ensemble(to_density(evolve(carrier, params, t)), spec);
  }
  Ensemble out = encode_ensemble(to_density(carrier), spec);
  for (auto& member : out) {
    member.state = to_density(evolve(from_density(member.state), params, t));
  }
  return out;
}

double decoded_info(const BlochPair& carrier, const ChannelParams& params,
                    const EncodingSpec& spec, ProtocolOrder order, double t) {
  return holevo(transmitted_ensemble(carrier, params, spec, order, t));
}

std::vector<DecodedSample> decoded_info_series(const BlochPair& carrier,
                                               const ChannelParams& params,
                                               const EncodingSpec& spec, ProtocolOrder order,
                                               std::span<const double> times) {
  std::vector<DecodedSample> out;
  out.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] >= times[i - 1])) {
      throw ValidationError("decoded_info_series: time grid must be non-decreasing");
    }
    out.push_back({times[i], decoded_info(carrier, params, spec, order, times[i])});
  }
  return out;
}

}  // namespace blochdense
