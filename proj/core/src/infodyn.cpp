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

#include "blochdense/infodyn.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "blochdense/error.hpp"

namespace blochdense {
namespace {

double fidelity_against(const Vec4c& psi0, const BlochPair& carrier, const ChannelParams& params,
                        double t) {
  return fidelity_pure(psi0, to_density(evolve(carrier, params, t)));
}

InfoRecord make_record(const BlochPair& carrier, const ChannelParams& params,
                       const InfoOptions& options, const std::optional<Vec4c>& psi0, double t) {
  InfoRecord rec;
  rec.t = t;
  if (options.entropic) {
    const Ensemble ensemble =
        transmitted_ensemble(carrier, params, options.encoding, options.order, t);
    const DensityMatrix coded = ensemble_average(ensemble);
    rec.decoded = holevo(ensemble);
    rec.local_a = local_info(partial_trace_second(coded));
    rec.local_b = local_info(partial_trace_first(coded));
    rec.mutual = mutual_info(coded);
  }
  if (psi0) {
    rec.fidelity = fidelity_against(*psi0, carrier, params, t);
    rec.eve = eve_info(rec.fidelity, options.eve);
  }
  return rec;
}

}  // namespace

double local_info(const QubitDensity& m) { return 1.0 - entropy(m); }

double mutual_info(const DensityMatrix& m) {
  const double joint = entropy(m);
  const double a = entropy(partial_trace_second(m));
  const double b = entropy(partial_trace_first(m));
  return std::max(0.0, a + b - joint);
}

EveVariant parse_eve_variant(std::string_view name) {
  if (name == "gain") return EveVariant::kGain;
  if (name == "verbatim") return EveVariant::kVerbatim;
  throw ValidationError("unknown eavesdropper variant '" + std::string(name) +
                        "' (expected gain or verbatim)");
}

std::string_view to_string(EveVariant variant) {
  return variant == EveVariant::kGain ? "gain" : "verbatim";
}

double eve_info(double fidelity, EveVariant variant) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw ValidationError("eve_info: fidelity must lie in [0, 1], got " + std::to_string(fidelity));
  }
  const double signed_entropy = -binary_entropy(fidelity);
  return variant == EveVariant::kGain ? 1.0 + signed_entropy : signed_entropy;
}

double decoding_fidelity(const BlochPair& carrier, const ChannelParams& params, double t) {
  return fidelity_against(pure_state_vector(to_density(carrier)), carrier, params, t);
}

InfoRecord info_record(const BlochPair& carrier, const ChannelParams& params,
                       const InfoOptions& options, double t) {
  std::optional<Vec4c> psi0;
  if (options.fidelity) psi0 = pure_state_vector(to_density(carrier));
  return make_record(carrier, params, options, psi0, t);
}

std::vector<InfoRecord> info_series(const BlochPair& carrier, const ChannelParams& params,
                                    const InfoOptions& options, std::span<const double> times) {
  std::optional<Vec4c> psi0;
  if (options.fidelity) psi0 = pure_state_vector(to_density(carrier));
  std::vector<InfoRecord> out;
  out.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] >= times[i - 1])) {
      throw ValidationError("info_series: time grid must be non-decreasing");
    }
    out.push_back(make_record(carrier, params, options, psi0, times[i]));
  }
  return out;
}

}  // namespace blochdense
