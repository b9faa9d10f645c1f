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

#ifndef BLOCHDENSE_ERROR_HPP
#define BLOCHDENSE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace blochdense {

/// Bad argument, malformed state, or configuration that fails validation.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by strict-mode evolution when a relaxation setting has no valid
/// quantum channel (beta^2 > gamma), and by the Kraus construction.
class CptpViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The Jacobi sweep budget ran out before the off-diagonal norm converged.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File-system failure. The message always carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blochdense

#endif  // BLOCHDENSE_ERROR_HPP
