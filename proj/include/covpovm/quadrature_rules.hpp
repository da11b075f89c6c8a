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

#include <cstddef>
#include <vector>

namespace covpovm {

/// One-dimensional rule: integral over [lo, hi] of f ~= sum_i weights[i] * f(nodes[i]).
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi]; exact for polynomials of degree 2n - 1.
[[nodiscard]] Rule1D gauss_legendre(std::size_t n, double lo = -1.0, double hi = 1.0);

/// n equispaced nodes including both endpoints, half weight at the ends.
[[nodiscard]] Rule1D trapezoid(std::size_t n, double lo, double hi);

}  // namespace covpovm
