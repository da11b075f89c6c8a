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

#include <algorithm>
#include <cmath>
#include <string>

#include "covpovm/errors.hpp"

namespace covpovm {

double povm_sup_distance(const DensityOperator& T1, const DensityOperator& T2, std::span<const DensityOperator> probes,
                         std::span<const PhasePoint> points) {
    if (T1.dim() != T2.dim()) throw DimensionMismatch("povm_sup_distance: T1 and T2 dimensions differ");
    if (probes.empty() || points.empty()) throw Error("povm_sup_distance: need at least one probe and one point");
    const HeisenbergPovm first(T1);
    const HeisenbergPovm second(T2);
    double best = 0.0;
    for (const auto& rho : probes) {
        if (rho.dim() != T1.dim()) throw DimensionMismatch("povm_sup_distance: probe dimension differs from T");
        for (const auto& pt : points) {
            best = std::max(best, std::abs(first.density(rho, pt.p, pt.q) - second.density(rho, pt.p, pt.q)));
        }
    }
    return best;
}

double normalization_defect(const DensityOperator& T, double half_width, std::size_t low_block,
                            const QuadratureSpec& quad) {
    if (!(half_width >= 0.0) || !std::isfinite(half_width)) {
        throw Error("normalization_defect: half width must be finite and nonnegative");
    }
    if (low_block == 0 || low_block > T.dim() / 2) {
        throw Error("normalization_defect: low block " + std::to_string(low_block) + " must lie in [1, " +
                    std::to_string(T.dim() / 2) + "]");
    }
    const auto square = PhaseSpaceRegion::rect(-half_width, half_width, -half_width, half_width);
    quad.require_covers(square);
    QuadratureSpec on_square = quad;
    on_square.box = *square.bounding_box();

    const LinearOperator q = HeisenbergPovm(T).element(square, on_square);
    const auto b = static_cast<Eigen::Index>(low_block);
    double diagonal = 0.0;
    double off_diagonal = 0.0;
    for (Eigen::Index i = 0; i < b; ++i) {
        for (Eigen::Index j = 0; j < b; ++j) {
            if (i == j) {
                diagonal = std::max(diagonal, std::abs(q(i, i) - 1.0));
            } else {
                off_diagonal = std::max(off_diagonal, std::abs(q(i, j)));
            }
        }
    }
    return diagonal + off_diagonal;
}

}  // namespace covpovm
