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

#include "covpovm/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "covpovm/errors.hpp"

namespace covpovm {

namespace {

double hermiticity_defect(const LinearOperator& op) { return (op - op.adjoint()).cwiseAbs().maxCoeff(); }

void require_square(const LinearOperator& op, const char* who) {
    if (op.rows() != op.cols() || op.rows() == 0) {
        throw DimensionMismatch(std::string(who) + ": operator is " + std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()) + ", expected non-empty square");
    }
}

}  // namespace

DensityOperator validate_density(const LinearOperator& entries, double tol) {
    require_square(entries, "validate_density");
    if (!entries.allFinite()) throw InvalidDensity("validate_density: non-finite entry");

    const double herm = hermiticity_defect(entries);
    if (herm > tol) {
        throw InvalidDensity("validate_density: hermiticity defect " + std::to_string(herm) + " exceeds " +
                             std::to_string(tol));
    }
    const LinearOperator hermitian = (entries + entries.adjoint()) / 2.0;
    const double trace_defect = std::abs(hermitian.trace().real() - 1.0);
    if (trace_defect > tol) {
        throw InvalidDensity("validate_density: trace defect " + std::to_string(trace_defect) + " exceeds " +
                             std::to_string(tol));
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
    Eigen::VectorXd lambda = solver.eigenvalues();
    if (lambda.minCoeff() < -tol) {
        throw InvalidDensity("validate_density: negative eigenvalue " + std::to_string(lambda.minCoeff()) +
                             " below -" + std::to_string(tol));
    }

    DensityOperator rho;
    rho.eigenvectors_ = solver.eigenvectors();
    rho.clamp_magnitude_ = std::max(0.0, -lambda.minCoeff());
    if (rho.clamp_magnitude_ > 0.0) {
        lambda = lambda.cwiseMax(0.0);
        rho.matrix_ = rho.eigenvectors_ * lambda.cast<Complex>().asDiagonal() * rho.eigenvectors_.adjoint();
        rho.matrix_ = (rho.matrix_ + rho.matrix_.adjoint()).eval() / 2.0;
    } else {
        rho.matrix_ = hermitian;
    }
    rho.eigenvalues_ = lambda;

    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] > 0.0) support.push_back(i);
    }
    rho.factor_.resize(lambda.size(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j) {
        const auto i = support[j];
        rho.factor_.col(static_cast<Eigen::Index>(j)) = std::sqrt(lambda[i]) * rho.eigenvectors_.col(i);
    }
    return rho;
}

DensityOperator pure_density(const StateVector& psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidDensity("pure_density: zero or non-finite vector");
    const StateVector unit = psi / norm;
    return validate_density(unit * unit.adjoint());
}

DensityOperator fock_density(const FockSpace& space, std::size_t n) { return pure_density(space.basis_state(n)); }

DensityOperator diagonal_density(const FockSpace& space, std::span<const double> weights) {
    if (weights.empty() || weights.size() > space.dim()) {
        throw InvalidDensity("diagonal_density: need between 1 and " + std::to_string(space.dim()) + " weights, got " +
                             std::to_string(weights.size()));
    }
    const auto n = static_cast<Eigen::Index>(space.dim());
    LinearOperator d = LinearOperator::Zero(n, n);
    for (std::size_t i = 0; i < weights.size(); ++i) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = weights[i];
    return validate_density(d);
}

namespace {

Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

}  // namespace

StateVector random_pure_state(const FockSpace& space, std::mt19937_64& rng) {
    StateVector psi = gaussian_matrix(static_cast<Eigen::Index>(space.dim()), 1, rng).col(0);
    return psi / psi.norm();
}

DensityOperator random_density(const FockSpace& space, std::size_t rank, std::mt19937_64& rng) {
    if (rank == 0 || rank > space.dim()) throw InvalidDensity("random_density: rank must lie in [1, dim]");
    const Eigen::MatrixXcd g = gaussian_matrix(static_cast<Eigen::Index>(space.dim()), static_cast<Eigen::Index>(rank), rng);
    LinearOperator rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()).eval() / 2.0;
    return validate_density(rho);
}

double min_hermitian_eigenvalue(const LinearOperator& op) {
    require_square(op, "min_hermitian_eigenvalue");
    const LinearOperator hermitian = (op + op.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

CheckReport psd_hermiticity_report(const LinearOperator& op, double tol, std::optional<double> trace_target) {
    require_square(op, "psd_hermiticity_report");
    CheckReport report;
    if (!op.allFinite()) {
        report.hermiticity_defect = report.trace_defect = std::numeric_limits<double>::infinity();
        report.min_eigenvalue = -std::numeric_limits<double>::infinity();
        return report;
    }
    report.hermiticity_defect = hermiticity_defect(op);
    report.min_eigenvalue = min_hermitian_eigenvalue(op);
    report.trace_defect = trace_target ? std::abs(op.trace().real() - *trace_target) : 0.0;
    report.passed = report.hermiticity_defect <= tol && report.min_eigenvalue >= -tol && report.trace_defect <= tol;
    return report;
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("trace_distance: dimensions differ");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix() - b.matrix(), Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace covpovm
