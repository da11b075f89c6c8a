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
#include <optional>
#include <random>
#include <span>

#include <Eigen/Dense>

#include "covpovm/fock_space.hpp"

namespace covpovm {

/// Trace-one positive operator with its spectral data computed at construction.
///
/// Built only through validate_density (or the presets below), so every instance
/// is Hermitian, has nonnegative eigenvalues and unit trace.
class DensityOperator {
  public:
    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    [[nodiscard]] const LinearOperator& matrix() const { return matrix_; }
    /// Ascending, clamped to be nonnegative.
    [[nodiscard]] const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    [[nodiscard]] const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
    /// Largest |lambda| of the negative eigenvalues that were set to zero.
    [[nodiscard]] double clamp_magnitude() const { return clamp_magnitude_; }
    /// B with B B^dag = matrix(); one column sqrt(lambda_i) e_i per positive eigenvalue.
    [[nodiscard]] const Eigen::MatrixXcd& factor() const { return factor_; }
    [[nodiscard]] std::size_t rank() const { return static_cast<std::size_t>(factor_.cols()); }

  private:
    friend DensityOperator validate_density(const LinearOperator& entries, double tol);
    DensityOperator() = default;

    LinearOperator matrix_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
    Eigen::MatrixXcd factor_;
    double clamp_magnitude_ = 0.0;
};

/// Rejects (InvalidDensity) when max|A - A^dag| > tol, |tr A - 1| > tol or an
/// eigenvalue of the Hermitian part is below -tol. Eigenvalues in [-tol, 0) are
/// clamped to zero and the operator rebuilt from the clamped spectrum.
[[nodiscard]] DensityOperator validate_density(const LinearOperator& entries, double tol = 1e-10);

[[nodiscard]] DensityOperator pure_density(const StateVector& psi);
[[nodiscard]] DensityOperator fock_density(const FockSpace& space, std::size_t n);
[[nodiscard]] inline DensityOperator vacuum_density(const FockSpace& space) { return fock_density(space, 0); }
/// diag(weights) padded with zeros; weights must sum to one.
[[nodiscard]] DensityOperator diagonal_density(const FockSpace& space, std::span<const double> weights);

/// Haar-random unit vector (normalized complex Gaussian).
[[nodiscard]] StateVector random_pure_state(const FockSpace& space, std::mt19937_64& rng);
/// G G^dag / tr(G G^dag) with G a dim x rank complex Gaussian matrix.
[[nodiscard]] DensityOperator random_density(const FockSpace& space, std::size_t rank, std::mt19937_64& rng);

struct CheckReport {
    double hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    double trace_defect = 0.0;
    bool passed = false;
};

/// Never throws on numerical content; only a non-square input is rejected.
[[nodiscard]] CheckReport psd_hermiticity_report(const LinearOperator& op, double tol,
                                                 std::optional<double> trace_target = std::nullopt);

/// Smallest eigenvalue of the Hermitian part.
[[nodiscard]] double min_hermitian_eigenvalue(const LinearOperator& op);

/// (1/2) * sum of |eigenvalues| of (a - b).
[[nodiscard]] double trace_distance(const DensityOperator& a, const DensityOperator& b);

}  // namespace covpovm
