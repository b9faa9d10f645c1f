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

#ifndef BLOCHDENSE_TYPES_HPP
#define BLOCHDENSE_TYPES_HPP

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace blochdense {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;
using MatXc = Eigen::MatrixXcd;

/// Validity tolerances shared by every module.
namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-9;
}  // namespace tol

/// Pauli matrices in the computational basis, indexed x=0, y=1, z=2.
inline const std::array<Mat2c, 3>& pauli() {
  static const std::array<Mat2c, 3> p = [] {
    const Complex i{0.0, 1.0};
    std::array<Mat2c, 3> m;
    m[0] << 0, 1, 1, 0;
    m[1] << 0, -i, i, 0;
    m[2] << 1, 0, 0, -1;
    return m;
  }();
  return p;
}

/// Kronecker product of two 2x2 operators. The left factor acts on the
/// first qubit (most significant index).
inline Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace blochdense

#endif  // BLOCHDENSE_TYPES_HPP
