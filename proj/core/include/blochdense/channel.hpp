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

#ifndef BLOCHDENSE_CHANNEL_HPP
#define BLOCHDENSE_CHANNEL_HPP

#include <string_view>
#include <vector>

#include "blochdense/qstate.hpp"
#include "blochdense/types.hpp"

namespace blochdense {

/// Phenomenological T1/T2 relaxation of one qubit toward <sigma_z> = z_eq.
///
/// The longitudinal time is tied to the transverse one through
/// `alpha = T2 / T1`, so gamma = exp(-t/T1) = beta^alpha. A quantum channel
/// requires T2 <= 2 T1, i.e. alpha <= 2.
struct QubitRelaxation {
  double t2 = 100.0;
  double alpha = 1.0;
  double z_eq = 0.0;

  static QubitRelaxation from_times(double t1, double t2, double z_eq);
  double t1() const { return t2 / alpha; }
  /// Throws ValidationError unless t2 > 0, alpha > 0 and |z_eq| <= 1.
  void check() const;
};

/// How the two-qubit closed form is evaluated.
///
/// kConsistent is the tensor product of the two single-qubit affine maps.
/// kVerbatim is an alternative component-wise form with sign flips on the
/// y components, q12 in both Q_xy and Q_yx, and swapped equilibrium labels
/// on the Q_xz and Q_zz cross terms. It is generally not a quantum
/// channel and does not reduce to the identity at t = 0.
enum class EvolutionMode { kConsistent, kVerbatim };

EvolutionMode parse_evolution_mode(std::string_view name);
std::string_view to_string(EvolutionMode mode);

struct ChannelParams {
  QubitRelaxation qubit_a;
  QubitRelaxation qubit_b;
  EvolutionMode mode = EvolutionMode::kConsistent;
  bool strict_cptp = true;
};

struct RelaxationFactors {
  double beta = 1.0;   // transverse: exp(-t/T2)
  double gamma = 1.0;  // longitudinal: exp(-t/T1)
};

RelaxationFactors factors(const QubitRelaxation& q, double t);

/// Bloch-vector map v -> scale .* v + shift.
struct SingleQubitAffineMap {
  Vec3 scale = Vec3::Ones();
  Vec3 shift = Vec3::Zero();

  static SingleQubitAffineMap identity() { return {}; }
  Vec3 apply(const Vec3& v) const { return scale.cwiseProduct(v) + shift; }
  /// Action on an arbitrary (not necessarily unit-trace) 2x2 operator.
  Mat2c apply(const Mat2c& op) const;
};

/// Exact solution of the single-qubit Bloch equations over time t:
/// scale = (beta, beta, gamma), shift = (0, 0, (1 - gamma) z_eq).
SingleQubitAffineMap single_qubit_map(const QubitRelaxation& q, double t);

/// Two-qubit state after both qubits spend time t in their channels.
/// Throws ValidationError for t < 0 and CptpViolation when
/// `params.strict_cptp` is set and either qubit has beta^2 > gamma.
BlochPair evolve(const BlochPair& b, const ChannelParams& params, double t);

using KrausSet = std::vector<Mat2c>;

/// Kraus operators realising single_qubit_map(q, t): generalized amplitude
/// damping (decay 1 - gamma toward z_eq) followed by phase damping with
/// coherence factor beta / sqrt(gamma). Throws CptpViolation when
/// beta > sqrt(gamma).
KrausSet kraus_set(const QubitRelaxation& q, double t);

/// Max-entry residual of sum_k K_k^dagger K_k - I.
double completeness_residual(const KrausSet& set);

/// rho -> sum_ij (K_i (x) L_j) rho (K_i (x) L_j)^dagger.
/// Throws ValidationError when either set is incomplete.
DensityMatrix kraus_apply(const DensityMatrix& m, const KrausSet& ka, const KrausSet& kb);

/// Choi matrix sum_ij |i><j| (x) map(|i><j|) with input as the first factor.
Mat4c choi_matrix(const SingleQubitAffineMap& map);

/// True iff the Choi matrix is PSD within tol::kPsd and its output partial
/// trace is the identity.
bool is_cptp(const SingleQubitAffineMap& map);

}  // namespace blochdense

#endif  // BLOCHDENSE_CHANNEL_HPP
