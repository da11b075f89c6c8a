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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "covpovm/quadrature_rules.hpp"

namespace covpovm {

/// Element (b, a) of the ax+b group, a > 0. Composition (b,a)(b',a') = (b + a b', a a').
class AffineElement {
  public:
    AffineElement() = default;
    AffineElement(double b, double a);

    [[nodiscard]] double b() const { return b_; }
    [[nodiscard]] double a() const { return a_; }

    friend bool operator==(const AffineElement&, const AffineElement&) = default;

  private:
    double b_ = 0.0;
    double a_ = 1.0;
};

[[nodiscard]] AffineElement affine_compose(const AffineElement& g, const AffineElement& h);
[[nodiscard]] AffineElement affine_inverse(const AffineElement& g);

struct HaarModular {
    double haar_density;  ///< left Haar density a^-2 w.r.t. db da
    double delta;         ///< modular function 1/a
};

[[nodiscard]] HaarModular haar_and_modular(const AffineElement& g);

/// Geometric grid x_k = x_min * ratio^k, k < count, on (0, inf) with weights x_k ln(ratio).
///
/// A dilation by ratio^m maps node k to node k + m, so grid-compatible group
/// elements act by index shifts with no resampling.
class HalfLineGrid {
  public:
    HalfLineGrid(double x_min, double ratio, std::size_t count);

    [[nodiscard]] double x_min() const { return x_min_; }
    [[nodiscard]] double ratio() const { return ratio_; }
    [[nodiscard]] double log_ratio() const { return log_ratio_; }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] double node(std::size_t k) const { return nodes_[k]; }
    [[nodiscard]] double weight(std::size_t k) const { return weights_[k]; }
    [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

    /// m with a == ratio^m, |m| < size(); GridCompatibilityError (naming the nearest
    /// compatible dilation) otherwise.
    [[nodiscard]] int dilation_index(double a) const;
    [[nodiscard]] double dilation(int m) const;

    friend bool operator==(const HalfLineGrid& l, const HalfLineGrid& r) {
        return l.x_min_ == r.x_min_ && l.ratio_ == r.ratio_ && l.nodes_.size() == r.nodes_.size();
    }

  private:
    double x_min_;
    double ratio_;
    double log_ratio_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Samples of an L^2((0, inf), dx) function on a HalfLineGrid.
class SampledFunction {
  public:
    explicit SampledFunction(HalfLineGrid grid);
    SampledFunction(HalfLineGrid grid, Eigen::VectorXcd values);

    [[nodiscard]] static SampledFunction from(const HalfLineGrid& grid, const std::function<std::complex<double>(double)>& f);

    [[nodiscard]] const HalfLineGrid& grid() const { return grid_; }
    [[nodiscard]] const Eigen::VectorXcd& values() const { return values_; }
    [[nodiscard]] Eigen::VectorXcd& values() { return values_; }

    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] double norm() const;
    /// [first, last] indices of the nonzero samples; nullopt when identically zero.
    [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> support() const;
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] SampledFunction operator+(const SampledFunction& other) const;
    [[nodiscard]] SampledFunction operator-(const SampledFunction& other) const;
    [[nodiscard]] friend SampledFunction operator*(std::complex<double> c, const SampledFunction& f) {
        return SampledFunction(f.grid_, c * f.values_);
    }

  private:
    HalfLineGrid grid_;
    Eigen::VectorXcd values_;
};

/// <f, g> = sum_k w_k f_k conj(g_k); linear in the first argument.
[[nodiscard]] std::complex<double> inner(const SampledFunction& f, const SampledFunction& g);

/// Smooth bump exp(-1/(1 - s^2)) in s = affine image of ln x onto [-1, 1] over [x_lo, x_hi], unit norm.
[[nodiscard]] SampledFunction log_bump(const HalfLineGrid& grid, double x_lo, double x_hi);

struct PiPlusResult {
    SampledFunction value;
    double support_loss;  ///< fraction of |f|^2 shifted off the grid
};

/// [pi+(b,a) f](x_k) = a^{1/2} e^{2 pi i b x_k} f(x_{k+m}), a = ratio^m. Samples shifted past
/// either end are dropped; SupportLossError when their share of |f|^2 exceeds max_support_loss.
[[nodiscard]] PiPlusResult apply_pi_plus(const AffineElement& g, const SampledFunction& f,
                                         double max_support_loss = 0.0);

/// Root C of the formal degree: multiplication by x^{1/2}. This is the positive operator
/// with pi+(g) C = Delta(g)^{-1/2} C pi+(g) and int_G |<u, pi+(g) C v>|^2 dmu_G = |u|^2 |v|^2.
[[nodiscard]] SampledFunction apply_C(const SampledFunction& f);
/// Multiplication by x^{-1/2}.
[[nodiscard]] SampledFunction apply_C_inverse(const SampledFunction& f);

/// Share of |f|^2 carried by the first and last `edge_nodes` samples.
[[nodiscard]] double edge_mass(const SampledFunction& f, std::size_t edge_nodes = 8);

/// (W_{C eta} v)(g) = <v, pi+(g) C eta>, evaluated sample by sample.
[[nodiscard]] std::complex<double> wavelet_coefficient(const SampledFunction& v, const SampledFunction& eta,
                                                       const AffineElement& g);

/// Rectangle [b_lo, b_hi] x [a_lo, a_hi] in the group.
struct GroupRegion {
    double b_lo = 0.0;
    double b_hi = 0.0;
    double a_lo = 1.0;
    double a_hi = 1.0;

    void validate() const;
};

/// Tensor rule for int ... a^-2 db da: trapezoid in b on the lattice b_step * Z, and
/// trapezoid in ln a over the grid-compatible dilations ratio^m.
struct GroupQuadrature {
    double b_step = 0.025;
    unsigned threads = 1;
};

struct GroupRule {
    Rule1D b;
    std::vector<int> dilations;   ///< m with a = ratio^m
    std::vector<double> a_weights;  ///< a^-2 times the d a weight of the node
};

/// Nodes of the tensor rule; the region's b bounds must lie on the lattice and its a bounds must be
/// grid compatible (QuadratureConstraintError / GridCompatibilityError otherwise).
[[nodiscard]] GroupRule group_rule(const HalfLineGrid& grid, const GroupRegion& region, const GroupQuadrature& quad);

/// Largest |b| for which e^{2 pi i b x} stays resolved on the samples of u:
/// 1 / (4 * max node spacing over the support of u). Infinite for u == 0.
[[nodiscard]] double modulation_bound(const SampledFunction& u);

/// Window over every dilation the grid represents, b in [-B, B] with B the largest lattice
/// point below modulation_bound(u).
[[nodiscard]] GroupRegion full_window(const SampledFunction& u, const GroupQuadrature& quad);

/// b step that resolves the oscillation of |<u, pi+(b,a) C v>|^2 in b: 1/(32 x), x the top of u's support.
[[nodiscard]] GroupQuadrature resolving_quadrature(const SampledFunction& u, unsigned threads = 1);

/// int_X |<u, pi+(g) C v>|^2 a^-2 db da on the quadrature nodes.
[[nodiscard]] double coefficient_integral(const SampledFunction& u, const SampledFunction& v, const GroupRegion& region,
                                          const GroupQuadrature& quad);

/// Positive trace-one operator given spectrally: sum_i weight_i |e_i><e_i|.
class SpectralDensity {
  public:
    /// Throws Error unless weights >= 0, sum to 1 within 1e-10 and the vectors are orthonormal within 1e-8.
    SpectralDensity(std::vector<double> weights, std::vector<SampledFunction> vectors);

    [[nodiscard]] static SpectralDensity rank_one(const SampledFunction& eta);

    [[nodiscard]] std::span<const double> weights() const { return weights_; }
    [[nodiscard]] std::span<const SampledFunction> vectors() const { return vectors_; }

  private:
    std::vector<double> weights_;
    std::vector<SampledFunction> vectors_;
};

/// <Q_T(X) u, u> = sum_i lambda_i int_X |<C pi+(g^-1) u, e_i>|^2 dmu_G(g).
[[nodiscard]] double povm_quadratic_form(const SpectralDensity& T, const GroupRegion& region, const SampledFunction& u,
                                         const GroupQuadrature& quad);

/// Rank-one form through the wavelet operator: sum over the quadrature nodes of
/// |wavelet_coefficient(u, eta, g)|^2 times the node weight. Shares no code with
/// coefficient_integral beyond the node list.
[[nodiscard]] double wavelet_quadratic_form(const SampledFunction& u, const SampledFunction& eta,
                                            const GroupRegion& region, const GroupQuadrature& quad);

/// | coefficient_integral(u, v) - |u|^2 |v|^2 |.
[[nodiscard]] double orthogonality_defect(const SampledFunction& u, const SampledFunction& v, const GroupRegion& window,
                                          const GroupQuadrature& quad);

}  // namespace covpovm
