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

#include "covpovm/fock_space.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "covpovm/errors.hpp"

namespace covpovm {

namespace {

void require_finite(double p, double q) {
    if (!std::isfinite(p) || !std::isfinite(q)) {
        throw Error("displacement: phase-space point (" + std::to_string(p) + ", " + std::to_string(q) +
                    ") is not finite");
    }
}

Eigen::VectorXcd level_phases(std::size_t dim, double angle) {
    Eigen::VectorXcd phases(static_cast<Eigen::Index>(dim));
    for (std::size_t n = 0; n < dim; ++n) phases[static_cast<Eigen::Index>(n)] = std::polar(1.0, angle * n);
    return phases;
}

}  // namespace

FockSpace::FockSpace(std::size_t dim) : dim_(dim) {
    if (dim < 2) throw Error("FockSpace: dimension must be at least 2, got " + std::to_string(dim));
}

StateVector FockSpace::basis_state(std::size_t n) const {
    if (n >= dim_) {
        throw Error("FockSpace: level " + std::to_string(n) + " outside dimension " + std::to_string(dim_));
    }
    StateVector e = StateVector::Zero(static_cast<Eigen::Index>(dim_));
    e[static_cast<Eigen::Index>(n)] = 1.0;
    return e;
}

Generators generators(const FockSpace& space) {
    const auto n = static_cast<Eigen::Index>(space.dim());
    Generators g;
    g.a = LinearOperator::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) g.a(k - 1, k) = std::sqrt(static_cast<double>(k));
    g.a_dag = g.a.adjoint();
    const double s = 1.0 / std::sqrt(2.0);
    g.Q = s * (g.a + g.a_dag);
    // (a - a^dag) / (sqrt2 i) = -i s (a - a^dag)
    g.P = Complex(0.0, -s) * (g.a - g.a_dag);
    return g;
}

DisplacementKernel::DisplacementKernel(const FockSpace& space) : space_(space) {
    const auto n = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index k = 1; k < n; ++k) {
        q(k - 1, k) = q(k, k - 1) = s * std::sqrt(static_cast<double>(k));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q);
    eigenvectors_ = solver.eigenvectors();
    eigenvalues_ = solver.eigenvalues();
}

Eigen::MatrixXcd DisplacementKernel::apply(double p, double q, const Eigen::MatrixXcd& block) const {
    require_finite(p, q);
    const auto n = static_cast<Eigen::Index>(space_.dim());
    if (block.rows() != n) {
        throw DimensionMismatch("displacement: block has " + std::to_string(block.rows()) + " rows, space has " +
                                std::to_string(n) + " levels");
    }
    if (p == 0.0 && q == 0.0) return block;  // D(0,0) = I exactly, not V V^T to rounding

    const double r = std::hypot(p, q);
    const double phi = std::atan2(q, p);
    const Eigen::VectorXcd rot = level_phases(space_.dim(), phi);

    Eigen::MatrixXcd work = rot.conjugate().asDiagonal() * block;
    work = eigenvectors_.transpose() * work;
    for (Eigen::Index k = 0; k < n; ++k) work.row(k) *= std::polar(1.0, r * eigenvalues_[k]);
    work = eigenvectors_ * work;
    return rot.asDiagonal() * work;
}

LinearOperator DisplacementKernel::matrix(double p, double q) const {
    const auto n = static_cast<Eigen::Index>(space_.dim());
    return apply(p, q, LinearOperator::Identity(n, n));
}

LinearOperator displacement(const FockSpace& space, double p, double q) {
    require_finite(p, q);
    return DisplacementKernel(space).matrix(p, q);
}

StateVector coherent_state(const FockSpace& space, double p, double q) {
    require_finite(p, q);
    return DisplacementKernel(space).apply(p, q, space.basis_state(0));
}

HeisenbergElement heisenberg_compose(const HeisenbergElement& g, const HeisenbergElement& h) {
    return {g.p + h.p, g.q + h.q, g.t + h.t + (g.p * h.q - g.q * h.p) / 2.0};
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& g) { return {-g.p, -g.q, -g.t}; }

}  // namespace covpovm
