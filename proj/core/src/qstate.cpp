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

#include "blochdense/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "blochdense/error.hpp"

namespace blochdense {
namespace {

const Mat2c& id2() {
  static const Mat2c i = Mat2c::Identity();
  return i;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void require_hermitian_unit_trace(const DensityMatrix& m, const char* where) {
  const double herm = (m.matrix() - m.matrix().adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= tol::kHermitian)) {
    throw ValidationError(std::string(where) + ": matrix is not Hermitian (deviation " + fmt(herm) + ")");
  }
  const double tr = std::abs(m.matrix().trace() - 1.0);
  if (!(tr <= tol::kTrace)) {
    throw ValidationError(std::string(where) + ": trace differs from 1 by " + fmt(tr));
  }
}

}  // namespace

Validation validate(const MatXc& m, double eps_psd) {
  Validation v;
  if (m.rows() != m.cols() || m.rows() == 0) {
    v.diagnostic = "not a square matrix";
    return v;
  }
  v.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  v.trace_error = std::abs(m.trace() - 1.0);
  const MatXc h = 0.5 * (m + m.adjoint());
  v.min_eigenvalue = eig_hermitian(h).values.minCoeff();

  std::string diag;
  auto append = [&diag](const std::string& s) {
    if (!diag.empty()) diag += "; ";
    diag += s;
  };
  if (!(v.hermiticity_error <= tol::kHermitian)) {
    append("not Hermitian: max |M - M^dagger| = " + fmt(v.hermiticity_error));
  }
  if (!(v.trace_error <= tol::kTrace)) append("trace off by " + fmt(v.trace_error));
  if (!(v.min_eigenvalue >= -eps_psd)) {
    append("not positive semidefinite: min eigenvalue " + fmt(v.min_eigenvalue));
  }
  v.ok = diag.empty();
  v.diagnostic = v.ok ? "valid" : diag;
  return v;
}

DensityMatrix to_density(const BlochPair& b) {
  const auto& sigma = pauli();
  Mat4c m = kron(id2(), id2());
  for (int i = 0; i < 3; ++i) {
    m += b.s(i) * kron(sigma[i], id2());
    m += b.r(i) * kron(id2(), sigma[i]);
    for (int j = 0; j < 3; ++j) m += b.q(i, j) * kron(sigma[i], sigma[j]);
  }
  return DensityMatrix(m / 4.0);
}

BlochPair from_density(const DensityMatrix& m) {
  require_hermitian_unit_trace(m, "from_density");
  const auto& sigma = pauli();
  const Mat4c& rho = m.matrix();
  BlochPair b;
  for (int i = 0; i < 3; ++i) {
    b.s(i) = (rho * kron(sigma[i], id2())).trace().real();
    b.r(i) = (rho * kron(id2(), sigma[i])).trace().real();
    for (int j = 0; j < 3; ++j) b.q(i, j) = (rho * kron(sigma[i], sigma[j])).trace().real();
  }
  return b;
}

QubitDensity qubit_density(const Vec3& bloch) {
  const auto& sigma = pauli();
  Mat2c m = id2();
  for (int i = 0; i < 3; ++i) m += bloch(i) * sigma[i];
  return QubitDensity(m / 2.0);
}

Vec3 bloch_vector(const QubitDensity& m) {
  const auto& sigma = pauli();
  Vec3 v;
  for (int i = 0; i < 3; ++i) v(i) = (m.matrix() * sigma[i]).trace().real();
  return v;
}

QubitDensity partial_trace_first(const DensityMatrix& m) {
  Mat2c out = Mat2c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out(i, j) += m(2 * k + i, 2 * k + j);
    }
  }
  return QubitDensity(out);
}

QubitDensity partial_trace_second(const DensityMatrix& m) {
  Mat2c out = Mat2c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out(i, j) += m(2 * i + k, 2 * j + k);
    }
  }
  return QubitDensity(out);
}

double entropy(const MatXc& m) {
  const Validation v = validate(m);
  if (!v.ok) throw ValidationError("entropy: invalid density matrix (" + v.diagnostic + ")");
  const Spectrum spec = eig_hermitian(0.5 * (m + m.adjoint()));
  double s = 0.0;
  for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
    const double lambda = spec.values(k);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("binary_entropy: p outside [0, 1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double purity(const DensityMatrix& m) { return (m.matrix() * m.matrix()).trace().real(); }

double fidelity_pure(const Vec4c& psi, const DensityMatrix& m) {
  if (!(std::abs(psi.norm() - 1.0) <= 1e-10)) {
    throw ValidationError("fidelity_pure: reference vector is not normalized (norm " +
                          fmt(psi.norm()) + ")");
  }
  const Validation v = validate(m);
  if (!v.ok) throw ValidationError("fidelity_pure: invalid density matrix (" + v.diagnostic + ")");
  const double f = (psi.adjoint() * m.matrix() * psi)(0, 0).real();
  return std::clamp(f, 0.0, 1.0);
}

Vec4c pure_state_vector(const DensityMatrix& m, double eps_entropy) {
  const double s = entropy(m);
  if (s > eps_entropy) {
    throw ValidationError("pure_state_vector: state is mixed (entropy " + fmt(s) + " bits)");
  }
  const Spectrum spec = eig_hermitian(m.matrix());
  Vec4c v = spec.vectors.col(0);
  return v / v.norm();
}

BellKind parse_bell_kind(std::string_view name) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "phi_plus") return BellKind::kPhiPlus;
  if (n == "phi_minus") return BellKind::kPhiMinus;
  if (n == "psi_plus") return BellKind::kPsiPlus;
  if (n == "psi_minus") return BellKind::kPsiMinus;
  throw ValidationError("unknown Bell state '" + std::string(name) +
                        "' (expected phi_plus, phi_minus, psi_plus or psi_minus)");
}

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::kPhiPlus: return "phi_plus";
    case BellKind::kPhiMinus: return "phi_minus";
    case BellKind::kPsiPlus: return "psi_plus";
    case BellKind::kPsiMinus: return "psi_minus";
  }
  return "?";
}

Vec4c bell_vector(BellKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  Vec4c v = Vec4c::Zero();
  switch (kind) {
    case BellKind::kPhiPlus: v << h, 0, 0, h; break;
    case BellKind::kPhiMinus: v << h, 0, 0, -h; break;
    case BellKind::kPsiPlus: v << 0, h, h, 0; break;
    case BellKind::kPsiMinus: v << 0, h, -h, 0; break;
  }
  return v;
}

BlochPair bell_state(BellKind kind) {
  const Vec4c v = bell_vector(kind);
  return from_density(DensityMatrix(v * v.adjoint()));
}

BlochPair partial_entangled(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("partial_entangled: p must lie in [0, 1], got " + fmt(p));
  }
  const double c = std::sqrt(1.0 - p * p);
  BlochPair b;
  b.s = Vec3(0.0, 0.0, p);
  b.r = Vec3(0.0, 0.0, -p);
  b.q = Vec3(-c, -c, -1.0).asDiagonal();
  return b;
}

BlochPair product_state(const Vec3& s, const Vec3& r) {
  BlochPair b;
  b.s = s;
  b.r = r;
  b.q = s * r.transpose();
  return b;
}

}  // namespace blochdense
