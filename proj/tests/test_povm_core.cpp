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

#include "covpovm/povm_core.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "covpovm/errors.hpp"

using namespace covpovm;

namespace {

std::vector<PhasePoint> square_points(double half_width, std::size_t per_axis) {
    std::vector<PhasePoint> points;
    for (std::size_t i = 0; i < per_axis; ++i) {
        for (std::size_t j = 0; j < per_axis; ++j) {
            const double step = 2.0 * half_width / static_cast<double>(per_axis - 1);
            points.push_back({-half_width + step * static_cast<double>(i), -half_width + step * static_cast<double>(j)});
        }
    }
    return points;
}

}  // namespace

TEST(povm_core, sup_distance_examples) {
    const FockSpace space(8);
    const std::vector<DensityOperator> probes{vacuum_density(space)};
    const std::vector<PhasePoint> points{{0, 0}, {1, -1}};
    EXPECT_EQ(povm_sup_distance(vacuum_density(space), vacuum_density(space), probes, points), 0.0);
    const double d = povm_sup_distance(vacuum_density(space), fock_density(space, 1), probes, points);
    EXPECT_GE(d, 1.0 / (2.0 * std::numbers::pi) - 1e-12);
    EXPECT_GE(d, 0.159);
}

TEST(povm_core, sup_distance_symmetric) {
    std::mt19937_64 rng(20);
    const FockSpace space(6);
    const std::vector<DensityOperator> probes{vacuum_density(space), random_density(space, 2, rng)};
    const auto points = square_points(2, 5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto t1 = random_density(space, 3, rng);
        const auto t2 = random_density(space, 1, rng);
        EXPECT_EQ(povm_sup_distance(t1, t2, probes, points), povm_sup_distance(t2, t1, probes, points));
    }
}

TEST(povm_core, sup_distance_errors) {
    const FockSpace space(6);
    const std::vector<DensityOperator> probes{vacuum_density(space)};
    const std::vector<PhasePoint> points{{0, 0}};
    EXPECT_THROW((void)povm_sup_distance(vacuum_density(space), vacuum_density(FockSpace(5)), probes, points),
                 DimensionMismatch);
    EXPECT_THROW((void)povm_sup_distance(vacuum_density(space), vacuum_density(space), {}, points), Error);
    EXPECT_THROW((void)povm_sup_distance(vacuum_density(space), vacuum_density(space), probes, {}), Error);
}

TEST(povm_core, injectivity_separates_distant_pairs) {
    std::mt19937_64 rng(21);
    const FockSpace space(8);
    std::vector<DensityOperator> probes;
    for (std::size_t n = 0; n < 4; ++n) probes.push_back(fock_density(space, n));
    for (int k = 0; k < 4; ++k) probes.push_back(pure_density(random_pure_state(space, rng)));
    const auto points = square_points(3, 21);
    int checked = 0;
    while (checked < 20) {
        const auto t1 = random_density(space, 1 + checked % 8, rng);
        const auto t2 = random_density(space, 1 + (checked * 3) % 8, rng);
        if (trace_distance(t1, t2) < 0.1) continue;
        EXPECT_GT(povm_sup_distance(t1, t2, probes, points), 1e-3);
        ++checked;
    }
}

TEST(povm_core, normalization_zero_box) {
    const FockSpace space(8);
    EXPECT_NEAR(normalization_defect(vacuum_density(space), 0.0, 4,
                                     QuadratureSpec::over(Rect{-1, 1, -1, 1}, QuadratureRule::gauss_legendre, 8, 8)),
                1.0, 1e-15);
}

TEST(povm_core, normalization_vacuum) {
    const FockSpace space(32);
    const auto quad = QuadratureSpec::over(Rect{-8, 8, -8, 8}, QuadratureRule::gauss_legendre, 128, 128);
    const double defect = normalization_defect(vacuum_density(space), 8.0, 4, quad);
    EXPECT_LE(defect, 1e-3);
}

TEST(povm_core, normalization_monotone_in_box) {
    const FockSpace space(24);
    double previous = 2.0;
    for (double r : {1.0, 2.0, 3.0, 4.0, 5.0}) {
        const auto quad = QuadratureSpec::over(Rect{-r, r, -r, r}, QuadratureRule::gauss_legendre, 64, 64);
        const double defect = normalization_defect(vacuum_density(space), r, 3, quad);
        EXPECT_LE(defect, previous + 1e-12) << "R = " << r;
        previous = defect;
    }
}

TEST(povm_core, normalization_errors) {
    const FockSpace space(8);
    const auto quad = QuadratureSpec::over(Rect{-1, 1, -1, 1}, QuadratureRule::gauss_legendre, 8, 8);
    EXPECT_THROW((void)normalization_defect(vacuum_density(space), 2.0, 2, quad), CoverageError);
    EXPECT_THROW((void)normalization_defect(vacuum_density(space), 1.0, 5, quad), Error);
    EXPECT_THROW((void)normalization_defect(vacuum_density(space), 1.0, 0, quad), Error);
}
