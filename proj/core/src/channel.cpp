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

#include "blochdense/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>
#include <string>

#include "blochdense/error.hpp"
#include "blochdense/jacobi.hpp"

namespace blochdense {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void check_time(double t, const char* where) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ValidationError(std::string(where) + ": time must be finite and >= 0, got " + fmt(t));
  }
}

// beta^2 <= gamma with a relative slack for the alpha == 2 boundary.
bool physical(const RelaxationFactors& f) { return f.beta * f.beta <= f.gamma * (1.0 + 1e-12); }

BlochPair evolve_consistent(const BlochPair& b, const SingleQubitAffineMap& ma,
                            const SingleQubitAffineMap& mb) {
  // Tensor product of the two affine maps, written on the correlation
  // tensor: q'_ij = a_i b_j q_ij + ca_i (b_j r_j) + cb_j (a_i s_i) + ca_i cb_j.
  BlochPair out;
  out.s = ma.apply(b.s);
  out.r = mb.apply(b.r);
  const Vec3 scaled_s = ma.scale.cwiseProduct(b.s);
  const Vec3 scaled_r = mb.scale.cwiseProduct(b.r);
  out.q = ma.scale.asDiagonal() * b.q * mb.scale.asDiagonal();
  out.q += ma.shift * scaled_r.transpose();
  out.q += scaled_s * mb.shift.transpose();
  out.q += ma.shift * mb.shift.transpose();
  return out;
}

// Component-wise closed form with flipped y signs and swapped equilibrium
// labels. za/zb are the first/second qubit equilibrium values.
BlochPair evolve_verbatim(const BlochPair& b, const RelaxationFactors& fa,
                          const RelaxationFactors& fb, double za, double zb) {
  const double b1 = fa.beta, g1 = fa.gamma;
  const double b2 = fb.beta, g2 = fb.gamma;
  const double sx = b.s(0), sy = b.s(1), sz = b.s(2);
  const double rx = b.r(0), ry = b.r(1), rz = b.r(2);
  const Mat3& q = b.q;

  BlochPair out;
  out.s = Vec3(sx * b1, -b1 * sy, g1 * sz + (1 - g1) * za);
  out.r = Vec3(b2 * rx, -b2 * ry, g2 * rz + (1 - g2) * zb);

  Mat3& o = out.q;
  o(0, 0) = b1 * b2 * q(0, 0);
  o(0, 1) = -q(0, 1) * b1 * b2;
  o(0, 2) = b1 * g2 * q(0, 2) + b1 * (1 - g2) * za * sx;
  o(1, 0) = -q(0, 1) * b1 * b2;
  o(1, 1) = q(1, 1) * b1 * b2;
  o(1, 2) = -b1 * g2 * q(1, 2) - b1 * (1 - g2) * zb * sy;
  o(2, 0) = b2 * g1 * q(2, 0) + b2 * (1 - g1) * za * rx;
  o(2, 1) = -b2 * g1 * q(2, 1) - b2 * (1 - g1) * za * ry;
  o(2, 2) = g1 * g2 * q(2, 2) + (1 - g1) * (1 - g2) * za * zb + g1 * (1 - g2) * zb * sz +
            g2 * (1 - g1) * zb * rz;
  return out;
}

}  // namespace

QubitRelaxation QubitRelaxation::from_times(double t1, double t2, double z_eq) {
  if (!(t1 > 0.0) || !std::isfinite(t1)) throw ValidationError("T1 must be positive, got " + fmt(t1));
  if (!(t2 > 0.0) || !std::isfinite(t2)) throw ValidationError("T2 must be positive, got " + fmt(t2));
  QubitRelaxation q{t2, t2 / t1, z_eq};
  q.check();
  return q;
}

void QubitRelaxation::check() const {
  if (!(t2 > 0.0) || !std::isfinite(t2)) throw ValidationError("T2 must be positive, got " + fmt(t2));
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("alpha must be positive, got " + fmt(alpha));
  }
  if (!(z_eq >= -1.0 && z_eq <= 1.0)) {
    throw ValidationError("equilibrium <sigma_z> must lie in [-1, 1], got " + fmt(z_eq));
  }
}

EvolutionMode parse_evolution_mode(std::string_view name) {
  if (name == "consistent") return EvolutionMode::kConsistent;
  if (name == "verbatim") return EvolutionMode::kVerbatim;
  throw ValidationError("unknown evolution mode '" + std::string(name) +
                        "' (expected consistent or verbatim)");
}

std::string_view to_string(EvolutionMode mode) {
  return mode == EvolutionMode::kConsistent ? "consistent" : "verbatim";
}

RelaxationFactors factors(const QubitRelaxation& q, double t) {
  q.check();
  check_time(t, "factors");
  const double x = t / q.t2;
  return {std::exp(-x), std::exp(-q.alpha * x)};
}

Mat2c SingleQubitAffineMap::apply(const Mat2c& op) const {
  const auto& sigma = pauli();
  const Complex x0 = op.trace();
  Mat2c out = x0 * Mat2c::Identity();
  for (int k = 0; k < 3; ++k) {
    const Complex xk = (op * sigma[k]).trace();
    out += (scale(k) * xk + shift(k) * x0) * sigma[k];
  }
  return out / 2.0;
}

SingleQubitAffineMap single_qubit_map(const QubitRelaxation& q, double t) {
  const RelaxationFactors f = factors(q, t);
  SingleQubitAffineMap m;
  m.scale = Vec3(f.beta, f.beta, f.gamma);
  m.shift = Vec3(0.0, 0.0, (1.0 - f.gamma) * q.z_eq);
  return m;
}

BlochPair evolve(const BlochPair& b, const ChannelParams& params, double t) {
  check_time(t, "evolve");
  const RelaxationFactors fa = factors(params.qubit_a, t);
  const RelaxationFactors fb = factors(params.qubit_b, t);
  if (params.strict_cptp) {
    for (const auto& [name, f, q] : {std::tuple{"first", fa, params.qubit_a},
                                     std::tuple{"second", fb, params.qubit_b}}) {
      if (!physical(f)) {
        throw CptpViolation(std::string(name) + " qubit: alpha = " + fmt(q.alpha) +
                            " gives beta^2 > gamma (T2 > 2 T1); not a quantum channel");
      }
    }
  }
  if (params.mode == EvolutionMode::kVerbatim) {
    return evolve_verbatim(b, fa, fb, params.qubit_a.z_eq, params.qubit_b.z_eq);
  }
  return evolve_consistent(b, single_qubit_map(params.qubit_a, t),
                           single_qubit_map(params.qubit_b, t));
}

KrausSet kraus_set(const QubitRelaxation& q, double t) {
  const RelaxationFactors f = factors(q, t);
  const double root_gamma = std::sqrt(f.gamma);
  if (!physical(f)) {
    throw CptpViolation("kraus_set: beta = " + fmt(f.beta) + " exceeds sqrt(gamma) = " +
                        fmt(root_gamma) + "; no Kraus representation");
  }
  const double lambda = 1.0 - f.gamma;
  const double p = (1.0 + q.z_eq) / 2.0;
  const double dephase = std::min(1.0, f.beta / root_gamma);

  // Generalized amplitude damping toward <sigma_z> = z_eq.
  Mat2c k0, k1, k2, k3;
  k0 << 1, 0, 0, root_gamma;
  k1 << 0, std::sqrt(lambda), 0, 0;
  k2 << root_gamma, 0, 0, 1;
  k3 << 0, 0, std::sqrt(lambda), 0;
  k0 *= std::sqrt(p);
  k1 *= std::sqrt(p);
  k2 *= std::sqrt(1.0 - p);
  k3 *= std::sqrt(1.0 - p);

  // Pure dephasing that brings the transverse factor from sqrt(gamma) to beta.
  const Mat2c d0 = std::sqrt((1.0 + dephase) / 2.0) * Mat2c::Identity();
  const Mat2c d1 = std::sqrt((1.0 - dephase) / 2.0) * pauli()[2];

  KrausSet out;
  for (const Mat2c* d : {&d0, &d1}) {
    for (const Mat2c* k : {&k0, &k1, &k2, &k3}) {
      Mat2c op = (*d) * (*k);
      if (op.cwiseAbs().maxCoeff() > 0.0) out.push_back(op);
    }
  }
  return out;
}

double completeness_residual(const KrausSet& set) {
  Mat2c sum = Mat2c::Zero();
  for (const Mat2c& k : set) sum += k.adjoint() * k;
  return (sum - Mat2c::Identity()).cwiseAbs().maxCoeff();
}

DensityMatrix kraus_apply(const DensityMatrix& m, const KrausSet& ka, const KrausSet& kb) {
  for (const auto* set : {&ka, &kb}) {
    const double res = completeness_residual(*set);
    if (set->empty() || !(res <= 1e-10)) {
      throw ValidationError("kraus_apply: Kraus set is not complete (residual " + fmt(res) + ")");
    }
  }
  Mat4c out = Mat4c::Zero();
  for (const Mat2c& a : ka) {
    for (const Mat2c& b : kb) {
      const Mat4c k = kron(a, b);
      out += k * m.matrix() * k.adjoint();
    }
  }
  return DensityMatrix(out);
}

Mat4c choi_matrix(const SingleQubitAffineMap& map) {
  Mat4c choi;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Mat2c unit = Mat2c::Zero();
      unit(i, j) = 1.0;
      choi.block<2, 2>(2 * i, 2 * j) = map.apply(unit);
    }
  }
  return choi;
}

bool is_cptp(const SingleQubitAffineMap& map) {
  const Mat4c choi = choi_matrix(map);
  Mat2c input_marginal;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) input_marginal(i, j) = choi.block<2, 2>(2 * i, 2 * j).trace();
  }
  if (!((input_marginal - Mat2c::Identity()).cwiseAbs().maxCoeff() <= tol::kTrace)) return false;
  return eig_hermitian(choi).values.minCoeff() >= -tol::kPsd;
}

}  // namespace blochdense
