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

#ifndef BLOCHDENSE_JACOBI_HPP
#define BLOCHDENSE_JACOBI_HPP

#include "blochdense/types.hpp"

namespace blochdense {

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; column k of `vectors` belongs to `values[k]`.
struct Spectrum {
  Eigen::VectorXd values;
  MatXc vectors;
};

struct JacobiOptions {
  double tolerance = 1e-13;  // off-diagonal Frobenius norm, relative to max(1, |A|_F)
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi diagonalization. Accepts square matrices of
/// dimension 2, 4, 8 or 16 that are Hermitian within tol::kHermitian.
///
/// Throws ValidationError for unsupported shapes or non-Hermitian input,
/// ConvergenceError when `max_sweeps` is exhausted.
Spectrum eig_hermitian(const MatXc& m, const JacobiOptions& options = {});

}  // namespace blochdense

#endif  // BLOCHDENSE_JACOBI_HPP
