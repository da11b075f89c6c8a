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

#include "covpovm/density.hpp"
#include "covpovm/fock_space.hpp"
#include "covpovm/phase_space.hpp"

namespace covpovm {

struct PhasePoint {
    double p = 0.0;
    double q = 0.0;
};

/// Haar measure of G/Z = R^2 normalized as dp dq / 2pi, so that C = 1.
[[nodiscard]] double phase_space_measure(const PhaseSpaceRegion& region);

/// The covariant POVM X -> Q_T(X) = (1/2pi) int_X D(p,q) T D(p,q)^dag dp dq fixed by
/// a density operator T. Holds the displacement kernel for T's dimension, so repeated
/// evaluations share one diagonalization.
class HeisenbergPovm {
  public:
    explicit HeisenbergPovm(DensityOperator seed);

    [[nodiscard]] const DensityOperator& seed() const { return seed_; }
    [[nodiscard]] const DisplacementKernel& kernel() const { return kernel_; }
    [[nodiscard]] std::size_t dim() const { return seed_.dim(); }

    /// D T D^dag at one phase-space point (no 1/2pi).
    [[nodiscard]] LinearOperator conjugated_seed(double p, double q) const;

    [[nodiscard]] LinearOperator element(const PhaseSpaceRegion& region, const QuadratureSpec& quad) const;
    [[nodiscard]] double density(const DensityOperator& rho, double p, double q) const;
    [[nodiscard]] double probability(const DensityOperator& rho, const PhaseSpaceRegion& region,
                                     const QuadratureSpec& quad) const;
    /// max |D(s) Q(X) D(s)^dag - Q(X + s)| over the top-left dim/2 block. Q(X + s) is
    /// integrated with the quadrature box translated by s as well.
    [[nodiscard]] double covariance_residual(PhasePoint shift, const PhaseSpaceRegion& region,
                                             const QuadratureSpec& quad) const;

  private:
    void require_matching(const DensityOperator& rho) const;

    DensityOperator seed_;
    DisplacementKernel kernel_;
};

[[nodiscard]] LinearOperator povm_element(const DensityOperator& T, const PhaseSpaceRegion& region,
                                          const QuadratureSpec& quad);

/// (1/2pi) tr(rho D(p,q) T D(p,q)^dag).
[[nodiscard]] double outcome_density(const DensityOperator& T, const DensityOperator& rho, double p, double q);

/// Integral of outcome_density over the region; computed node by node, independently
/// of povm_element.
[[nodiscard]] double probability(const DensityOperator& T, const DensityOperator& rho,
                                 const PhaseSpaceRegion& region, const QuadratureSpec& quad);

[[nodiscard]] double covariance_residual(const DensityOperator& T, PhasePoint shift, const PhaseSpaceRegion& region,
                                         const QuadratureSpec& quad);

/// Largest |entry| of m restricted to its top-left block x block corner.
[[nodiscard]] double max_abs_block(const LinearOperator& m, std::size_t block);

}  // namespace covpovm
