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

#ifndef BLOCHDENSE_QSTATE_HPP
#define BLOCHDENSE_QSTATE_HPP

#include <string>
#include <string_view>

#include "blochdense/jacobi.hpp"
#include "blochdense/types.hpp"

namespace blochdense {

/// Two-qubit state in Bloch form:
///
///   rho = 1/4 (I + s.sigma (x) I + I (x) r.sigma + sum_ij q_ij sigma_i (x) sigma_j)
///
/// `s` and `r` are the single-qubit Bloch vectors, `q` the correlation
/// tensor <sigma_i (x) sigma_j>. Any real values are representable; use
/// validate(to_density(b)) to check physicality.
struct BlochPair {
  Vec3 s = Vec3::Zero();
  Vec3 r = Vec3::Zero();
  Mat3 q = Mat3::Zero();
};

/// Square complex matrix of fixed dimension used as a quantum state. The
/// wrapper does not enforce positivity; operations that need a physical
/// state check it and throw ValidationError.
template <int Dim>
class Density {
 public:
  using Matrix = Eigen::Matrix<Complex, Dim, Dim>;

  Density() : m_(Matrix::Identity() / static_cast<double>(Dim)) {}
  explicit Density(Matrix m) : m_(std::move(m)) {}

  static constexpr int dim() { return Dim; }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
};

using DensityMatrix = Density<4>;
using QubitDensity = Density<2>;

/// Result of validate(). `ok` is true iff all three checks pass.
struct Validation {
  bool ok = false;
  double hermiticity_error = 0.0;  // max |m - m^dagger|
  double trace_error = 0.0;        // |tr m - 1|
  double min_eigenvalue = 0.0;
  std::string diagnostic;
};

Validation validate(const MatXc& m, double eps_psd = tol::kPsd);

template <int Dim>
Validation validate(const Density<Dim>& m, double eps_psd = tol::kPsd) {
  return validate(MatXc(m.matrix()), eps_psd);
}

DensityMatrix to_density(const BlochPair& b);

/// Inverse of to_density via Pauli expectations. Throws ValidationError
/// when the input is not Hermitian or not unit trace.
BlochPair from_density(const DensityMatrix& m);

QubitDensity qubit_density(const Vec3& bloch);
Vec3 bloch_vector(const QubitDensity& m);

/// Traces out the first qubit; the result is the second qubit's state.
QubitDensity partial_trace_first(const DensityMatrix& m);
/// Traces out the second qubit; the result is the first qubit's state.
QubitDensity partial_trace_second(const DensityMatrix& m);

/// von Neumann entropy in bits. Eigenvalues in [-eps_psd, 0) are treated as
/// zero; anything more negative is rejected along with non-Hermitian or
/// non-unit-trace input.
double entropy(const MatXc& m);

template <int Dim>
double entropy(const Density<Dim>& m) {
  return entropy(MatXc(m.matrix()));
}

/// Binary Shannon entropy h(p) in bits, with 0 log 0 = 0.
double binary_entropy(double p);

double purity(const DensityMatrix& m);

/// <psi| m |psi>, clamped to [0, 1]. `psi` must be normalized within 1e-10.
double fidelity_pure(const Vec4c& psi, const DensityMatrix& m);

/// State vector of a pure two-qubit state (the dominant eigenvector).
/// Throws ValidationError if the entropy exceeds `eps_entropy`.
Vec4c pure_state_vector(const DensityMatrix& m, double eps_entropy = 1e-9);

enum class BellKind { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

BellKind parse_bell_kind(std::string_view name);
std::string_view to_string(BellKind kind);

Vec4c bell_vector(BellKind kind);

/// Bloch form of the Bell projector, built from the state vector.
BlochPair bell_state(BellKind kind);

/// One-parameter partially entangled pure family:
/// s = (0,0,p), r = (0,0,-p), q = diag(-sqrt(1-p^2), -sqrt(1-p^2), -1).
BlochPair partial_entangled(double p);

/// Product state with correlation tensor s r^T.
BlochPair product_state(const Vec3& s, const Vec3& r);

}  // namespace blochdense

#endif  // BLOCHDENSE_QSTATE_HPP
