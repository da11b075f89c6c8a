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

#include "covpovm/quadrature_rules.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "covpovm/errors.hpp"

namespace covpovm {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
    }
    const double dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

Rule1D gauss_legendre(std::size_t n, double lo, double hi) {
    if (n < 1) throw QuadratureConstraintError("gauss_legendre: need at least one node");
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double half = (hi - lo) / 2.0;
    const double mid = (hi + lo) / 2.0;
    if (n == 1) {
        rule.nodes[0] = mid;
        rule.weights[0] = 2.0 * half;
        return rule;
    }
    // Roots are symmetric; solve for the upper half and mirror.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, d] = legendre(n, x);
            dp = d;
            const double step = p / d;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        dp = legendre(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

Rule1D trapezoid(std::size_t n, double lo, double hi) {
    if (n < 2) throw QuadratureConstraintError("trapezoid: need at least two nodes, got " + std::to_string(n));
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.assign(n, (hi - lo) / static_cast<double>(n - 1));
    for (std::size_t i = 0; i < n; ++i) rule.nodes[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    rule.nodes.back() = hi;
    rule.weights.front() /= 2.0;
    rule.weights.back() /= 2.0;
    return rule;
}

}  // namespace covpovm
