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

// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "covpovm/affine.hpp"
#include "covpovm/density.hpp"
#include "covpovm/fock_space.hpp"
#include "covpovm/heisenberg_povm.hpp"
#include "covpovm/povm_core.hpp"

using namespace covpovm;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

int failures = 0;

void criterion(int index, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool passed = out.passed;
    std::string detail = out.detail;
    if (time_limit_s > 0.0 && seconds >= time_limit_s) {
        passed = false;
        detail += fmt::format("; runtime limit {:g} s exceeded", time_limit_s);
    }
    if (!passed) ++failures;
    std::printf("[%s] AC%-2d %s: %s (%.2f s)\n", passed ? "PASS" : "FAIL", index, title, detail.c_str(), seconds);
    std::fflush(stdout);
}

QuadratureSpec gl(const Rect& box, std::size_t n) { return QuadratureSpec::over(box, QuadratureRule::gauss_legendre, n, n); }

double husimi_error(const HeisenbergPovm& povm, const DensityOperator& rho, double half_width, std::size_t per_axis) {
    double worst = 0.0;
    const double step = 2.0 * half_width / static_cast<double>(per_axis - 1);
    for (std::size_t i = 0; i < per_axis; ++i) {
        for (std::size_t j = 0; j < per_axis; ++j) {
            const double p = -half_width + step * static_cast<double>(i);
            const double q = -half_width + step * static_cast<double>(j);
            const double exact = std::exp(-(p * p + q * q) / 2.0) / kTwoPi;
            worst = std::max(worst, std::abs(povm.density(rho, p, q) - exact));
        }
    }
    return worst;
}

Outcome vacuum_husimi() {
    const FockSpace space(32);
    const HeisenbergPovm povm(vacuum_density(space));
    const DensityOperator rho = vacuum_density(space);
    const double inner = husimi_error(povm, rho, 2.0, 41);
    const double outer = husimi_error(povm, rho, 4.0, 81);
    return {inner <= 1e-8 && outer <= 1e-4,
            fmt::format("max error {:.3e} on [-2,2]^2 (tol 1e-8), {:.3e} on [-4,4]^2 (tol 1e-4)", inner, outer)};
}

Outcome normalization() {
    const FockSpace space(32);
    const double defect = normalization_defect(vacuum_density(space), 8.0, 4, gl(Rect{-8, 8, -8, 8}, 128));
    return {defect <= 1e-3, fmt::format("defect {:.3e} (tol 1e-3)", defect)};
}

Outcome covariance() {
    const FockSpace space(32);
    const std::vector<double> three{0.5, 0.3, 0.2};
    const std::vector<std::pair<const char*, DensityOperator>> seeds{
        {"vacuum", vacuum_density(space)}, {"fock:1", fock_density(space, 1)}, {"mixed 3-level", diagonal_density(space, three)}};
    std::vector<PhasePoint> shifts{{0.0, 0.0}, {0.5, 0.0}, {0.0, -0.5}, {0.3, 0.4}};
    for (int k = 0; k < 8; ++k) {
        const double angle = kTwoPi * k / 8.0;
        shifts.push_back({std::cos(angle), std::sin(angle)});
    }
    const auto disk = PhaseSpaceRegion::disk(0, 0, 1);
    const auto quad = gl(*disk.bounding_box(), 80);
    double worst = 0.0;
    std::string detail;
    for (const auto& [name, seed] : seeds) {
        const HeisenbergPovm povm(seed);
        double seed_worst = 0.0;
        for (const PhasePoint& s : shifts) seed_worst = std::max(seed_worst, povm.covariance_residual(s, disk, quad));
        detail += fmt::format("{} {:.2e}; ", name, seed_worst);
        worst = std::max(worst, seed_worst);
    }
    return {worst <= 1e-5, fmt::format("{}{} shifts, worst {:.3e} (tol 1e-5)", detail, shifts.size(), worst)};
}

Outcome trace_identity() {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> coord(-4, 4);
    const FockSpace space(24);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
        const HeisenbergPovm povm(random_density(space, 1 + 5 * t, rng));
        for (int r = 0; r < 20; ++r) {
            const double a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
            const auto rect = PhaseSpaceRegion::rect(std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d));
            const LinearOperator q = povm.element(rect, gl(*rect.bounding_box(), 12));
            worst = std::max(worst, std::abs(q.trace().real() - phase_space_measure(rect)));
        }
    }
    return {worst <= 1e-6, fmt::format("5 seeds x 20 rectangles, worst {:.3e} (tol 1e-6)", worst)};
}

Outcome positivity_additivity() {
    std::mt19937_64 rng(5);
    const FockSpace space(24);
    const std::vector<double> three{0.5, 0.3, 0.2};
    std::vector<DensityOperator> seeds{vacuum_density(space), fock_density(space, 1), diagonal_density(space, three)};
    for (int k = 0; k < 3; ++k) seeds.push_back(random_density(space, 1 + 4 * k, rng));
    const std::vector<PhaseSpaceRegion> regions{
        PhaseSpaceRegion::disk(0, 0, 1),
        PhaseSpaceRegion::disk(1, -1, 0.5),
        PhaseSpaceRegion::rect(-3, 2, -1, 0.5),
        PhaseSpaceRegion::rect(-1, 0, 0, 1).unite(PhaseSpaceRegion::disk(2, 2, 1)),
        PhaseSpaceRegion::rect(-4, 4, -4, 4),
    };
    double lowest = std::numeric_limits<double>::infinity();
    double additivity = 0.0;
    std::size_t elements = 0;
    for (const auto& seed : seeds) {
        const HeisenbergPovm povm(seed);
        for (const auto& region : regions) {
            lowest = std::min(lowest, min_hermitian_eigenvalue(povm.element(region, gl(*region.bounding_box(), 48))));
            ++elements;
        }
        // Disjoint rectangles evaluated on one shared tensor grid.
        const auto quad = gl(Rect{-3, 3, -2, 2}, 60);
        const auto a = PhaseSpaceRegion::rect(-3, -0.5, -2, 2);
        const auto b = PhaseSpaceRegion::rect(0.5, 3, -2, 0);
        const auto c = PhaseSpaceRegion::rect(0.5, 3, 0.25, 2);
        const LinearOperator joint = povm.element(a.unite(b).unite(c), quad);
        const LinearOperator sum = povm.element(a, quad) + povm.element(b, quad) + povm.element(c, quad);
        additivity = std::max(additivity, (joint - sum).cwiseAbs().maxCoeff());
    }
    return {lowest >= -1e-10 && additivity <= 1e-12,
            fmt::format("{} elements, min eigenvalue {:.3e} (tol -1e-10); additivity residual {:.3e} (tol 1e-12)",
                        elements, lowest, additivity)};
}

Outcome injectivity() {
    std::mt19937_64 rng(6);
    const FockSpace space(8);
    std::vector<DensityOperator> probes;
    for (std::size_t n = 0; n < 4; ++n) probes.push_back(fock_density(space, n));
    for (int k = 0; k < 4; ++k) probes.push_back(pure_density(random_pure_state(space, rng)));
    std::vector<PhasePoint> points;
    for (int i = 0; i < 21; ++i) {
        for (int j = 0; j < 21; ++j) points.push_back({-3.0 + 0.3 * i, -3.0 + 0.3 * j});
    }
    double weakest = std::numeric_limits<double>::infinity();
    int pairs = 0, skipped = 0;
    while (pairs < 100) {
        const auto t1 = random_density(space, 1 + pairs % 8, rng);
        const auto t2 = random_density(space, 1 + (pairs * 5 + 3) % 8, rng);
        if (trace_distance(t1, t2) < 0.1) {
            ++skipped;
            continue;
        }
        weakest = std::min(weakest, povm_sup_distance(t1, t2, probes, points));
        ++pairs;
    }
    return {weakest > 1e-3, fmt::format("{} pairs ({} rejected for trace distance < 0.1), smallest sup distance {:.3e} "
                                        "(must exceed 1e-3)",
                                        pairs, skipped, weakest)};
}

SampledFunction middle_bump(const HalfLineGrid& grid) {
    return log_bump(grid, grid.node(grid.size() / 3), grid.node(2 * grid.size() / 3));
}

Outcome c_relation() {
    const HalfLineGrid grid(1e-3, 1.02, 512);
    const SampledFunction bump = middle_bump(grid);
    SampledFunction f(grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        f.values()(i) = bump.values()(i) * std::polar(1.0, 0.07 * static_cast<double>(k));
    }
    double worst = 0.0;
    int count = 0;
    for (int m = -160; m <= 160; m += 20) {
        for (double b : {0.0, 0.25, -1.5, 7.0}) {
            const AffineElement g(b, grid.dilation(m));
            const double delta = haar_and_modular(g).delta;
            const SampledFunction lhs = apply_pi_plus(g, apply_C(f)).value;
            const SampledFunction rhs = std::complex<double>(1.0 / std::sqrt(delta)) * apply_C(apply_pi_plus(g, f).value);
            worst = std::max(worst, (lhs - rhs).norm());
            ++count;
        }
    }
    return {worst <= 1e-12, fmt::format("{} group elements, worst defect {:.3e} (tol 1e-12)", count, worst)};
}

Outcome orthogonality() {
    struct Level {
        std::size_t count;
        double ratio;
    };
    const std::vector<Level> levels{{512, 1.02}, {1024, std::sqrt(1.02)}, {2048, std::sqrt(std::sqrt(1.02))}};
    std::vector<double> defects;
    std::string detail;
    for (const Level& level : levels) {
        const HalfLineGrid grid(1e-3, level.ratio, level.count);
        const SampledFunction u = middle_bump(grid);
        const GroupQuadrature quad = resolving_quadrature(u);
        const GroupRegion window = full_window(u, quad);
        defects.push_back(orthogonality_defect(u, u, window, quad));
        detail += fmt::format("M={} B={:.2f}: {:.3e}; ", level.count, window.b_hi, defects.back());
    }
    const bool decreasing = defects[1] < defects[0] && defects[2] < defects[1];
    return {defects[0] <= 2e-2 && decreasing,
            fmt::format("{}reference defect tol 2e-2, sequence {}", detail, decreasing ? "decreasing" : "NOT decreasing")};
}

Outcome rank_one_identity() {
    const HalfLineGrid grid(1e-3, 1.02, 512);
    const SampledFunction eta = middle_bump(grid);
    const SampledFunction narrow = log_bump(grid, grid.node(220), grid.node(300));
    SampledFunction twisted(grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        twisted.values()(i) = narrow.values()(i) * std::polar(1.0, 0.11 * static_cast<double>(k));
    }
    const GroupQuadrature quad = resolving_quadrature(eta);
    const double b_edge = std::floor(4.0 / quad.b_step) * quad.b_step;
    const std::vector<GroupRegion> regions{{-b_edge, b_edge, grid.dilation(-200), grid.dilation(200)},
                                           {0.0, b_edge, grid.dilation(-40), grid.dilation(90)}};
    double worst = 0.0;
    double smallest = std::numeric_limits<double>::infinity();
    for (const SampledFunction* u : {&eta, static_cast<const SampledFunction*>(&twisted)}) {
        for (const GroupRegion& region : regions) {
            const double form = povm_quadratic_form(SpectralDensity::rank_one(eta), region, *u, quad);
            const double wavelet = wavelet_quadratic_form(*u, eta, region, quad);
            worst = std::max(worst, std::abs(form - wavelet));
            smallest = std::min(smallest, form);
        }
    }
    return {worst <= 1e-10, fmt::format("4 (u, region) cases, forms >= {:.3e}, worst gap {:.3e} (tol 1e-10)", smallest, worst)};
}

Outcome commutator() {
    double worst = 0.0;
    for (std::size_t n : {2u, 4u, 16u, 64u}) {
        const FockSpace space(n);
        const Generators gen = generators(space);
        LinearOperator expected = LinearOperator::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        expected(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n - 1)) =
            Complex(0.0, -static_cast<double>(n));
        const LinearOperator c = gen.Q * gen.P - gen.P * gen.Q -
                                 Complex(0.0, 1.0) * LinearOperator::Identity(static_cast<Eigen::Index>(n),
                                                                              static_cast<Eigen::Index>(n));
        worst = std::max(worst, (c - expected).cwiseAbs().maxCoeff());
    }
    return {worst <= 1e-12, fmt::format("N in {{2,4,16,64}}, max deviation from diag(0,...,0,-iN) {:.3e} (tol 1e-12)", worst)};
}

}  // namespace

int main() {
    criterion(1, "vacuum Husimi closed form", 5.0, vacuum_husimi);
    criterion(2, "normalization Q(R^2) = I", 30.0, normalization);
    criterion(3, "displacement covariance", 60.0, covariance);
    criterion(4, "trace identity", 0.0, trace_identity);
    criterion(5, "positivity and additivity", 0.0, positivity_additivity);
    criterion(6, "injectivity separation", 60.0, injectivity);
    criterion(7, "ax+b covariance relation of C", 0.0, c_relation);
    criterion(8, "ax+b orthogonality and convergence", 0.0, orthogonality);
    criterion(9, "rank-one wavelet identity", 10.0, rank_one_identity);
    criterion(10, "truncated commutator", 0.0, commutator);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
