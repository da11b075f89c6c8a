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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace covpovm {

using Complex = std::complex<double>;

/// Dense operator on a truncated Fock space; (row, col) = (output level, input level).
using LinearOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Fock levels 0..dim-1 of a single bosonic mode.
class FockSpace {
  public:
    explicit FockSpace(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] StateVector basis_state(std::size_t n) const;

    friend bool operator==(const FockSpace&, const FockSpace&) = default;

  private:
    std::size_t dim_;
};

struct Generators {
    LinearOperator a;
    LinearOperator a_dag;
    LinearOperator Q;
    LinearOperator P;
};

/// Ladder operators and quadratures Q = (a + a^dag)/sqrt2, P = (a - a^dag)/(sqrt2 i),
/// truncated to the space. Q is real symmetric and P is purely imaginary antisymmetric.
[[nodiscard]] Generators generators(const FockSpace& space);

/// Exponentials of i(pQ + qP) on one truncated space.
///
/// The truncated generator is diagonalized through the identity
///   pQ + qP = R(phi) (r Q) R(phi)^dag,   p + iq = r e^{i phi},   R(phi) = e^{i phi a^dag a},
/// which holds exactly in the truncation because a^dag a is diagonal. Only Q
/// is diagonalized (once, in real arithmetic), so every displacement is
///   D(p,q) = R(phi) V diag(e^{i r lambda}) V^T R(phi)^dag
/// and is unitary to roundoff. In the usual optics notation D = D(alpha) with
/// alpha = (ip - q)/sqrt2.
class DisplacementKernel {
  public:
    explicit DisplacementKernel(const FockSpace& space);

    [[nodiscard]] const FockSpace& space() const { return space_; }

    /// exp(i(pQ + qP)) as a dense matrix.
    [[nodiscard]] LinearOperator matrix(double p, double q) const;

    /// exp(i(pQ + qP)) * block without forming the full matrix: O(N^2 * cols).
    [[nodiscard]] Eigen::MatrixXcd apply(double p, double q, const Eigen::MatrixXcd& block) const;

  private:
    FockSpace space_;
    Eigen::MatrixXd eigenvectors_;
    Eigen::VectorXd eigenvalues_;
};

/// exp(i(pQ + qP)); throws Error on non-finite arguments.
[[nodiscard]] LinearOperator displacement(const FockSpace& space, double p, double q);

/// D(p, q) applied to the lowest level.
[[nodiscard]] StateVector coherent_state(const FockSpace& space, double p, double q);

/// Element (p, q, t) of the Heisenberg group.
struct HeisenbergElement {
    double p = 0.0;
    double q = 0.0;
    double t = 0.0;

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

/// (p,q,t)(p',q',t') = (p+p', q+q', t+t' + (pq' - qp')/2).
[[nodiscard]] HeisenbergElement heisenberg_compose(const HeisenbergElement& g, const HeisenbergElement& h);

[[nodiscard]] HeisenbergElement heisenberg_inverse(const HeisenbergElement& g);

}  // namespace covpovm
