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

#include "blochdense/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "blochdense/error.hpp"

namespace blochdense {
namespace {

double off_diagonal_norm(const MatXc& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p, q) with the unitary
//   U = [[c, s], [-s conj(e), c conj(e)]]  on rows/cols (p, q),
// where e = a(p, q) / |a(p, q)|. Accumulates U into v.
void rotate(MatXc& a, MatXc& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex e = apq / mag;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * std::conj(e);
  const Complex uqq = c * std::conj(e);

  const Eigen::Index n = a.rows();
  // A <- A U
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  // A <- U^dagger A
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  // V <- V U
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace

Spectrum eig_hermitian(const MatXc& m, const JacobiOptions& options) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || !(n == 2 || n == 4 || n == 8 || n == 16)) {
    throw ValidationError("eig_hermitian: expected a square matrix of dimension 2, 4, 8 or 16, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= tol::kHermitian)) {
    throw ValidationError("eig_hermitian: matrix is not Hermitian (max |M - M^dagger| = " +
                          std::to_string(herm) + ")");
  }

  MatXc a = 0.5 * (m + m.adjoint());
  MatXc v = MatXc::Identity(n, n);
  const double threshold = options.tolerance * std::max(1.0, a.norm());

  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (sweep == options.max_sweeps) {
      throw ConvergenceError("eig_hermitian: off-diagonal norm " +
                             std::to_string(off_diagonal_norm(a)) + " after " +
                             std::to_string(sweep) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    ++sweep;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() > a(j, j).real();
  });

  Spectrum out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

}  // namespace blochdense
