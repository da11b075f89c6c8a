// Copyright 2026 The covpovm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace covpovm {

/// Base class of every precondition violation raised by the library.
class Error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// A quadrature box or window does not contain the region it integrates over.
class CoverageError : public Error {
  public:
    using Error::Error;
};

/// Input rejected as a density operator (hermiticity, trace or positivity).
class InvalidDensity : public Error {
  public:
    using Error::Error;
};

/// Dilation that is not an integer power of the grid ratio.
class GridCompatibilityError : public Error {
  public:
    using Error::Error;
};

class SupportLossError : public Error {
  public:
    using Error::Error;
};

/// Quadrature parameters outside the admissible set (node counts, lattice, modulation bound).
class QuadratureConstraintError : public Error {
  public:
    using Error::Error;
};

/// A computed quantity failed a post-condition the library asserts on its own output.
class NumericalCheckFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace covpovm
