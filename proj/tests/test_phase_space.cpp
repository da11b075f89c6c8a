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

#include "covpovm/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "covpovm/errors.hpp"
#include "covpovm/quadrature_rules.hpp"

using namespace covpovm;

namespace {

double integrate(const Rule1D& r, auto&& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(r.nodes[i]);
    return s;
}

}  // namespace

TEST(quadrature_rules, gauss_legendre_exact_for_polynomials) {
    for (std::size_t n : {1, 2, 5, 16, 64, 128, 400}) {
        const Rule1D r = gauss_legendre(n, -1.0, 3.0);
        for (std::size_t k = 0; k < std::min<std::size_t>(2 * n, 12); ++k) {
            const double exact = (std::pow(3.0, k + 1.0) - std::pow(-1.0, k + 1.0)) / (k + 1.0);
            EXPECT_NEAR(integrate(r, [&](double x) { return std::pow(x, k); }), exact, 1e-12 * std::max(1.0, exact))
                << "n=" << n << " k=" << k;
        }
    }
}

TEST(quadrature_rules, gauss_legendre_nodes_sorted_inside) {
    const Rule1D r = gauss_legendre(33, 0.0, 1.0);
    for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i) EXPECT_LT(r.nodes[i], r.nodes[i + 1]);
    EXPECT_GT(r.nodes.front(), 0.0);
    EXPECT_LT(r.nodes.back(), 1.0);
    EXPECT_NEAR(r.nodes[16], 0.5, 1e-15);
}

TEST(quadrature_rules, gauss_legendre_gaussian) {
    const Rule1D r = gauss_legendre(64, -8.0, 8.0);
    EXPECT_NEAR(integrate(r, [](double x) { return std::exp(-x * x / 2.0); }), std::sqrt(2 * std::numbers::pi), 1e-13);
}

TEST(quadrature_rules, trapezoid_endpoints) {
    const Rule1D r = trapezoid(5, 0.0, 2.0);
    EXPECT_EQ(r.nodes.front(), 0.0);
    EXPECT_EQ(r.nodes.back(), 2.0);
    EXPECT_DOUBLE_EQ(r.weights.front(), 0.25);
    EXPECT_DOUBLE_EQ(r.weights[2], 0.5);
    EXPECT_NEAR(integrate(r, [](double x) { return x; }), 2.0, 1e-15);
    EXPECT_THROW((void)trapezoid(1, 0.0, 1.0), QuadratureConstraintError);
}

TEST(phase_space_region, membership_is_union) {
    const auto region = PhaseSpaceRegion::rect(0, 1, 0, 1).unite(PhaseSpaceRegion::disk(0.5, 0.5, 1.0));
    EXPECT_TRUE(region.contains(0.9, 0.9));
    EXPECT_TRUE(region.contains(-0.4, 0.5));
    EXPECT_FALSE(region.contains(2.0, 2.0));
    EXPECT_FALSE(PhaseSpaceRegion().contains(0, 0));
    EXPECT_TRUE(PhaseSpaceRegion().empty());
}

TEST(phase_space_region, translation_moves_every_primitive) {
    const auto region = PhaseSpaceRegion::rect(0, 1, 0, 1).unite(PhaseSpaceRegion::disk(5, 5, 1)).translated(1, -2);
    EXPECT_TRUE(region.contains(1.5, -1.5));
    EXPECT_TRUE(region.contains(6, 3));
    const Rect box = *region.bounding_box();
    EXPECT_DOUBLE_EQ(box.p_lo, 1.0);
    EXPECT_DOUBLE_EQ(box.p_hi, 7.0);
    EXPECT_DOUBLE_EQ(box.q_lo, -2.0);
    EXPECT_DOUBLE_EQ(box.q_hi, 4.0);
}

TEST(phase_space_region, area) {
    EXPECT_DOUBLE_EQ(PhaseSpaceRegion::rect(0, 2, 0, 3).area(), 6.0);
    EXPECT_DOUBLE_EQ(PhaseSpaceRegion::disk(0, 0, 2).area(), 4 * std::numbers::pi);
    const auto disjoint = PhaseSpaceRegion::rect(0, 1, 0, 1).unite(PhaseSpaceRegion::rect(2, 3, 0, 1));
    EXPECT_DOUBLE_EQ(disjoint.area(), 2.0);
    const auto overlapping = PhaseSpaceRegion::rect(0, 1, 0, 1).unite(PhaseSpaceRegion::disk(1, 1, 1));
    EXPECT_THROW((void)overlapping.area(), Error);
}

TEST(phase_space_region, rejects_invalid_primitives) {
    EXPECT_THROW((void)PhaseSpaceRegion::rect(1, 0, 0, 1), Error);
    EXPECT_THROW((void)PhaseSpaceRegion::disk(0, 0, -1), Error);
    EXPECT_THROW((void)PhaseSpaceRegion::rect(0, INFINITY, 0, 1), Error);
}

TEST(quadrature_spec, coverage_and_node_counts) {
    const auto spec = QuadratureSpec::over(Rect{-1, 1, -1, 1});
    EXPECT_NO_THROW(spec.require_covers(PhaseSpaceRegion::disk(0, 0, 1)));
    EXPECT_THROW(spec.require_covers(PhaseSpaceRegion::disk(0, 0, 1.1)), CoverageError);
    EXPECT_NO_THROW(spec.require_covers(PhaseSpaceRegion()));
    EXPECT_THROW((void)QuadratureSpec::over(Rect{-1, 1, -1, 1}, QuadratureRule::trapezoid, 1, 4),
                 QuadratureConstraintError);
    const auto moved = spec.translated(2, 0);
    EXPECT_NO_THROW(moved.require_covers(PhaseSpaceRegion::disk(2, 0, 1)));
}
