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
#include <span>

#include "covpovm/density.hpp"
#include "covpovm/heisenberg_povm.hpp"
#include "covpovm/phase_space.hpp"

namespace covpovm {

/// max over probes rho and points (p,q) of |density_T1 - density_T2|. A positive value
/// certifies Q_T1 != Q_T2; zero only says the densities agree on the sampled set.
[[nodiscard]] double povm_sup_distance(const DensityOperator& T1, const DensityOperator& T2,
                                       std::span<const DensityOperator> probes, std::span<const PhasePoint> points);

/// Distance of Q_T([-R,R]^2) from the identity on levels n < low_block:
///   max_n |<n|Q|n> - 1| + max_{m != n} |<m|Q|n>|.
/// The rule and node counts of `quad` are applied on the square itself; its box must cover the square.
[[nodiscard]] double normalization_defect(const DensityOperator& T, double half_width, std::size_t low_block,
                                          const QuadratureSpec& quad);

}  // namespace covpovm
