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

#include "covpovm/heisenberg_povm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "covpovm/errors.hpp"
#include "covpovm/parallel.hpp"

namespace covpovm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kImaginaryTolerance = 1e-10;

}  // namespace

double phase_space_measure(const PhaseSpaceRegion& region) { return region.area() / kTwoPi; }

double max_abs_block(const LinearOperator& m, std::size_t block) {
    const auto b = static_cast<Eigen::Index>(std::min<std::size_t>(block, static_cast<std::size_t>(m.rows())));
    if (b == 0) return 0.0;
    return m.topLeftCorner(b, b).cwiseAbs().maxCoeff();
}

HeisenbergPovm::HeisenbergPovm(DensityOperator seed) : seed_(std::move(seed)), kernel_(FockSpace(seed_.dim())) {}

void HeisenbergPovm::require_matching(const DensityOperator& rho) const {
    if (rho.dim() != dim()) {
        throw DimensionMismatch("dimension mismatch: state has " + std::to_string(rho.dim()) +
                                " levels, POVM seed has " + std::to_string(dim()));
    }
}

LinearOperator HeisenbergPovm::conjugated_seed(double p, double q) const {
    const Eigen::MatrixXcd y = kernel_.apply(p, q, seed_.factor());
    return y * y.adjoint();
}

LinearOperator HeisenbergPovm::element(const PhaseSpaceRegion& region, const QuadratureSpec& quad) const {
    quad.require_covers(region);
    const auto n = static_cast<Eigen::Index>(dim());
    const LinearOperator zero = LinearOperator::Zero(n, n);
    if (region.empty()) return zero;

    const Rule1D pr = quad.p_rule();
    const Rule1D qr = quad.q_rule();
    // One chunk per p-node; the q sweep inside a chunk is sequential.
    LinearOperator total = ordered_reduce(pr.nodes.size(), quad.threads, zero, [&](std::size_t i) {
        LinearOperator acc = zero;
        const double p = pr.nodes[i];
        for (std::size_t j = 0; j < qr.nodes.size(); ++j) {
            const double q = qr.nodes[j];
            if (!region.contains(p, q)) continue;
            const Eigen::MatrixXcd y = kernel_.apply(p, q, seed_.factor());
            acc.noalias() += (pr.weights[i] * qr.weights[j]) * (y * y.adjoint());
        }
        return acc;
    });
    return total / kTwoPi;
}

double HeisenbergPovm::density(const DensityOperator& rho, double p, double q) const {
    require_matching(rho);
    const Eigen::MatrixXcd y = kernel_.apply(p, q, seed_.factor());
    const Complex value = (y.adjoint() * rho.matrix() * y).trace() / kTwoPi;
    if (std::abs(value.imag()) > kImaginaryTolerance) {
        throw NumericalCheckFailure("outcome_density: imaginary part " + std::to_string(value.imag()) +
                                    " exceeds tolerance");
    }
    return value.real();
}

double HeisenbergPovm::probability(const DensityOperator& rho, const PhaseSpaceRegion& region,
                                   const QuadratureSpec& quad) const {
    require_matching(rho);
    quad.require_covers(region);
    if (region.empty()) return 0.0;
    const Rule1D pr = quad.p_rule();
    const Rule1D qr = quad.q_rule();
    return ordered_reduce(pr.nodes.size(), quad.threads, 0.0, [&](std::size_t i) {
        double acc = 0.0;
        const double p = pr.nodes[i];
        for (std::size_t j = 0; j < qr.nodes.size(); ++j) {
            const double q = qr.nodes[j];
            if (region.contains(p, q)) acc += pr.weights[i] * qr.weights[j] * density(rho, p, q);
        }
        return acc;
    });
}

double HeisenbergPovm::covariance_residual(PhasePoint shift, const PhaseSpaceRegion& region,
                                           const QuadratureSpec& quad) const {
    quad.require_covers(region);
    const LinearOperator base = element(region, quad);
    const LinearOperator moved = element(region.translated(shift.p, shift.q), quad.translated(shift.p, shift.q));
    const LinearOperator d = kernel_.matrix(shift.p, shift.q);
    const LinearOperator transported = d * base * d.adjoint();
    return max_abs_block(transported - moved, dim() / 2);
}

LinearOperator povm_element(const DensityOperator& T, const PhaseSpaceRegion& region, const QuadratureSpec& quad) {
    return HeisenbergPovm(T).element(region, quad);
}

double outcome_density(const DensityOperator& T, const DensityOperator& rho, double p, double q) {
    return HeisenbergPovm(T).density(rho, p, q);
}

double probability(const DensityOperator& T, const DensityOperator& rho, const PhaseSpaceRegion& region,
                   const QuadratureSpec& quad) {
    return HeisenbergPovm(T).probability(rho, region, quad);
}

double covariance_residual(const DensityOperator& T, PhasePoint shift, const PhaseSpaceRegion& region,
                           const QuadratureSpec& quad) {
    return HeisenbergPovm(T).covariance_residual(shift, region, quad);
}

}  // namespace covpovm
