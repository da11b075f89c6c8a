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

#include "covpovm/affine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "covpovm/errors.hpp"
#include "covpovm/parallel.hpp"

namespace covpovm {

namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_grid(const SampledFunction& f, const SampledFunction& g, const char* who) {
    if (!(f.grid() == g.grid())) throw DimensionMismatch(std::string(who) + ": functions live on different grids");
}

// Index of the lattice point b_step * k equal to b, or QuadratureConstraintError.
long lattice_index(double b, double step, const char* which) {
    const double t = b / step;
    const double k = std::round(t);
    if (std::abs(t - k) > 1e-9 * std::max(1.0, std::abs(t))) {
        throw QuadratureConstraintError(std::string("group quadrature: ") + which + " = " + std::to_string(b) +
                                        " is not a multiple of b_step = " + std::to_string(step));
    }
    return static_cast<long>(k);
}

}  // namespace

AffineElement::AffineElement(double b, double a) : b_(b), a_(a) {
    if (!std::isfinite(b) || !std::isfinite(a) || !(a > 0.0)) {
        throw Error("AffineElement: need finite b and a > 0, got (" + std::to_string(b) + ", " + std::to_string(a) + ")");
    }
}

AffineElement affine_compose(const AffineElement& g, const AffineElement& h) {
    return {g.b() + g.a() * h.b(), g.a() * h.a()};
}

AffineElement affine_inverse(const AffineElement& g) { return {-g.b() / g.a(), 1.0 / g.a()}; }

HaarModular haar_and_modular(const AffineElement& g) { return {1.0 / (g.a() * g.a()), 1.0 / g.a()}; }

HalfLineGrid::HalfLineGrid(double x_min, double ratio, std::size_t count) : x_min_(x_min), ratio_(ratio) {
    if (!std::isfinite(x_min) || !(x_min > 0.0)) throw Error("HalfLineGrid: x_min must be positive and finite");
    if (!std::isfinite(ratio) || !(ratio > 1.0)) throw Error("HalfLineGrid: ratio must exceed 1");
    if (count < 8) throw Error("HalfLineGrid: need at least 8 nodes, got " + std::to_string(count));
    log_ratio_ = std::log(ratio);
    nodes_.resize(count);
    weights_.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        nodes_[k] = x_min * std::pow(ratio, static_cast<double>(k));
        weights_[k] = nodes_[k] * log_ratio_;
    }
    if (!std::isfinite(nodes_.back())) throw Error("HalfLineGrid: largest node overflows");
}

int HalfLineGrid::dilation_index(double a) const {
    if (!std::isfinite(a) || !(a > 0.0)) throw GridCompatibilityError("dilation must be positive and finite");
    const double t = std::log(a) / log_ratio_;
    const double m = std::round(t);
    const double limit = static_cast<double>(size()) - 1.0;
    const double nearest = std::clamp(m, -limit, limit);
    if (std::abs(t - m) > 1e-9 * std::max(1.0, std::abs(t)) || std::abs(m) > limit) {
        throw GridCompatibilityError("dilation a = " + std::to_string(a) + " is not ratio^m with |m| < " +
                                     std::to_string(size()) + "; nearest compatible a = " +
                                     std::to_string(std::pow(ratio_, nearest)) + " (m = " +
                                     std::to_string(static_cast<long>(nearest)) + ")");
    }
    return static_cast<int>(m);
}

double HalfLineGrid::dilation(int m) const { return std::pow(ratio_, static_cast<double>(m)); }

SampledFunction::SampledFunction(HalfLineGrid grid)
    : grid_(std::move(grid)), values_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid_.size()))) {}

SampledFunction::SampledFunction(HalfLineGrid grid, Eigen::VectorXcd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != static_cast<Eigen::Index>(grid_.size())) {
        throw DimensionMismatch("SampledFunction: " + std::to_string(values_.size()) + " values for " +
                                std::to_string(grid_.size()) + " nodes");
    }
    if (!values_.allFinite()) throw Error("SampledFunction: non-finite sample");
}

SampledFunction SampledFunction::from(const HalfLineGrid& grid, const std::function<Complex(double)>& f) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t k = 0; k < grid.size(); ++k) v[static_cast<Eigen::Index>(k)] = f(grid.node(k));
    return {grid, std::move(v)};
}

double SampledFunction::norm_squared() const {
    double total = 0.0;
    for (std::size_t k = 0; k < grid_.size(); ++k) total += grid_.weight(k) * std::norm(values_[static_cast<Eigen::Index>(k)]);
    return total;
}

double SampledFunction::norm() const { return std::sqrt(norm_squared()); }

std::optional<std::pair<std::size_t, std::size_t>> SampledFunction::support() const {
    std::optional<std::pair<std::size_t, std::size_t>> range;
    for (std::size_t k = 0; k < grid_.size(); ++k) {
        if (values_[static_cast<Eigen::Index>(k)] == Complex(0.0)) continue;
        if (!range) range.emplace(k, k);
        range->second = k;
    }
    return range;
}

bool SampledFunction::is_zero() const { return !support().has_value(); }

SampledFunction SampledFunction::operator+(const SampledFunction& other) const {
    require_same_grid(*this, other, "SampledFunction::operator+");
    return {grid_, values_ + other.values_};
}

SampledFunction SampledFunction::operator-(const SampledFunction& other) const {
    require_same_grid(*this, other, "SampledFunction::operator-");
    return {grid_, values_ - other.values_};
}

Complex inner(const SampledFunction& f, const SampledFunction& g) {
    require_same_grid(f, g, "inner");
    Complex total = 0.0;
    for (std::size_t k = 0; k < f.grid().size(); ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        total += f.grid().weight(k) * f.values()[i] * std::conj(g.values()[i]);
    }
    return total;
}

SampledFunction log_bump(const HalfLineGrid& grid, double x_lo, double x_hi) {
    if (!(x_lo > 0.0) || !(x_hi > x_lo)) throw Error("log_bump: need 0 < x_lo < x_hi");
    const double l0 = std::log(x_lo);
    const double span = std::log(x_hi) - l0;
    SampledFunction f = SampledFunction::from(grid, [&](double x) -> Complex {
        const double s = 2.0 * (std::log(x) - l0) / span - 1.0;
        return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0;
    });
    const double n = f.norm();
    if (!(n > 0.0)) throw Error("log_bump: no grid node inside (x_lo, x_hi)");
    return (1.0 / n) * f;
}

PiPlusResult apply_pi_plus(const AffineElement& g, const SampledFunction& f, double max_support_loss) {
    const HalfLineGrid& grid = f.grid();
    const int m = grid.dilation_index(g.a());
    const auto size = static_cast<long>(grid.size());
    const double amplitude = std::sqrt(g.a());
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(size);
    double kept = 0.0;
    for (long k = 0; k < size; ++k) {
        const long src = k + m;
        if (src < 0 || src >= size) continue;
        const Complex value = f.values()[src];
        kept += grid.weight(static_cast<std::size_t>(src)) * std::norm(value);
        out[k] = amplitude * std::polar(1.0, kTwoPi * g.b() * grid.node(static_cast<std::size_t>(k))) * value;
    }
    const double total = f.norm_squared();
    const double loss = total > 0.0 ? std::max(0.0, total - kept) / total : 0.0;
    if (loss > max_support_loss) {
        throw SupportLossError("apply_pi_plus: dilation index " + std::to_string(m) + " shifts " + std::to_string(loss) +
                               " of |f|^2 off the grid (threshold " + std::to_string(max_support_loss) + ")");
    }
    return {SampledFunction(grid, std::move(out)), loss};
}

SampledFunction apply_C(const SampledFunction& f) {
    Eigen::VectorXcd v = f.values();
    for (std::size_t k = 0; k < f.grid().size(); ++k) v[static_cast<Eigen::Index>(k)] *= std::sqrt(f.grid().node(k));
    return {f.grid(), std::move(v)};
}

SampledFunction apply_C_inverse(const SampledFunction& f) {
    Eigen::VectorXcd v = f.values();
    for (std::size_t k = 0; k < f.grid().size(); ++k) v[static_cast<Eigen::Index>(k)] /= std::sqrt(f.grid().node(k));
    return {f.grid(), std::move(v)};
}

double edge_mass(const SampledFunction& f, std::size_t edge_nodes) {
    const double total = f.norm_squared();
    if (!(total > 0.0)) return 0.0;
    const std::size_t size = f.grid().size();
    double edge = 0.0;
    for (std::size_t k = 0; k < size; ++k) {
        if (k < edge_nodes || k + edge_nodes >= size) edge += f.grid().weight(k) * std::norm(f.values()[static_cast<Eigen::Index>(k)]);
    }
    return edge / total;
}

Complex wavelet_coefficient(const SampledFunction& v, const SampledFunction& eta, const AffineElement& g) {
    require_same_grid(v, eta, "wavelet_coefficient");
    const HalfLineGrid& grid = v.grid();
    const int m = grid.dilation_index(g.a());
    const SampledFunction c_eta = apply_C(eta);
    const auto size = static_cast<long>(grid.size());
    const double amplitude = std::sqrt(g.a());
    Complex total = 0.0;
    for (long k = 0; k < size; ++k) {
        const long src = k + m;
        if (src < 0 || src >= size) continue;
        const Complex moved = amplitude * std::polar(1.0, kTwoPi * g.b() * grid.node(static_cast<std::size_t>(k))) *
                              c_eta.values()[src];
        total += grid.weight(static_cast<std::size_t>(k)) * v.values()[k] * std::conj(moved);
    }
    return total;
}

void GroupRegion::validate() const {
    const bool finite = std::isfinite(b_lo) && std::isfinite(b_hi) && std::isfinite(a_lo) && std::isfinite(a_hi);
    if (!finite || b_lo > b_hi || !(a_lo > 0.0) || a_lo > a_hi) {
        throw Error("GroupRegion: need finite b_lo <= b_hi and 0 < a_lo <= a_hi");
    }
}

GroupRule group_rule(const HalfLineGrid& grid, const GroupRegion& region, const GroupQuadrature& quad) {
    region.validate();
    if (!std::isfinite(quad.b_step) || !(quad.b_step > 0.0)) {
        throw QuadratureConstraintError("group quadrature: b_step must be positive");
    }
    const long k_lo = lattice_index(region.b_lo, quad.b_step, "b_lo");
    const long k_hi = lattice_index(region.b_hi, quad.b_step, "b_hi");
    const int m_lo = grid.dilation_index(region.a_lo);
    const int m_hi = grid.dilation_index(region.a_hi);

    GroupRule rule;
    if (k_hi == k_lo || m_hi == m_lo) return rule;  // measure zero

    for (long k = k_lo; k <= k_hi; ++k) {
        rule.b.nodes.push_back(static_cast<double>(k) * quad.b_step);
        rule.b.weights.push_back(k == k_lo || k == k_hi ? quad.b_step / 2.0 : quad.b_step);
    }
    for (int m = m_lo; m <= m_hi; ++m) {
        // a^-2 * (a ln r) per step in ln a
        const double w = grid.log_ratio() / grid.dilation(m);
        rule.dilations.push_back(m);
        rule.a_weights.push_back(m == m_lo || m == m_hi ? w / 2.0 : w);
    }
    return rule;
}

double modulation_bound(const SampledFunction& u) {
    const auto range = u.support();
    if (!range) return std::numeric_limits<double>::infinity();
    const HalfLineGrid& grid = u.grid();
    auto [first, last] = *range;
    if (first == last) {
        if (last + 1 < grid.size()) {
            ++last;
        } else {
            --first;
        }
    }
    double spacing = 0.0;
    for (std::size_t k = first; k < last; ++k) spacing = std::max(spacing, grid.node(k + 1) - grid.node(k));
    return 1.0 / (4.0 * spacing);
}

GroupRegion full_window(const SampledFunction& u, const GroupQuadrature& quad) {
    const HalfLineGrid& grid = u.grid();
    const int top = static_cast<int>(grid.size()) - 1;
    const double bound = modulation_bound(u);
    if (!std::isfinite(bound)) throw Error("full_window: u is identically zero");
    const double b_max = std::floor(bound / quad.b_step) * quad.b_step;
    return {-b_max, b_max, grid.dilation(-top), grid.dilation(top)};
}

GroupQuadrature resolving_quadrature(const SampledFunction& u, unsigned threads) {
    const auto range = u.support();
    if (!range) throw Error("resolving_quadrature: u is identically zero");
    return {1.0 / (32.0 * u.grid().node(range->second)), threads};
}

double coefficient_integral(const SampledFunction& u, const SampledFunction& v, const GroupRegion& region,
                            const GroupQuadrature& quad) {
    require_same_grid(u, v, "coefficient_integral");
    const HalfLineGrid& grid = u.grid();
    const GroupRule rule = group_rule(grid, region, quad);
    const double b_extent = std::max(std::abs(region.b_lo), std::abs(region.b_hi));
    const double bound = modulation_bound(u);
    if (b_extent > bound * (1.0 + 1e-12)) {
        throw QuadratureConstraintError("group quadrature: |b| up to " + std::to_string(b_extent) +
                                        " exceeds the modulation bound " + std::to_string(bound) +
                                        " of the sampled function");
    }
    const auto range = u.support();
    if (!range || v.is_zero() || rule.dilations.empty()) return 0.0;

    const auto [first, last] = *range;
    const auto width = static_cast<Eigen::Index>(last - first + 1);
    const auto nb = static_cast<Eigen::Index>(rule.b.nodes.size());
    // phases(i, s) = exp(-2 pi i b_i x_{first+s})
    Eigen::MatrixXcd phases(nb, width);
    for (Eigen::Index s = 0; s < width; ++s) {
        const double x = grid.node(first + static_cast<std::size_t>(s));
        for (Eigen::Index i = 0; i < nb; ++i) phases(i, s) = std::polar(1.0, -kTwoPi * rule.b.nodes[i] * x);
    }
    const Eigen::Map<const Eigen::VectorXd> b_weights(rule.b.weights.data(), nb);
    const SampledFunction c_v = apply_C(v);
    const auto size = static_cast<long>(grid.size());

    return ordered_reduce(rule.dilations.size(), quad.threads, 0.0, [&](std::size_t idx) {
        const int m = rule.dilations[idx];
        const double amplitude = std::sqrt(grid.dilation(m));
        Eigen::VectorXcd y = Eigen::VectorXcd::Zero(width);
        bool any = false;
        for (Eigen::Index s = 0; s < width; ++s) {
            const long k = static_cast<long>(first) + s;
            const long src = k + m;
            if (src < 0 || src >= size) continue;
            const Complex cv = c_v.values()[src];
            if (cv == Complex(0.0)) continue;
            y[s] = grid.weight(static_cast<std::size_t>(k)) * u.values()[k] * amplitude * std::conj(cv);
            any = true;
        }
        if (!any) return 0.0;
        const Eigen::VectorXcd coefficients = phases * y;
        return rule.a_weights[idx] * b_weights.dot(coefficients.cwiseAbs2());
    });
}

SpectralDensity::SpectralDensity(std::vector<double> weights, std::vector<SampledFunction> vectors)
    : weights_(std::move(weights)), vectors_(std::move(vectors)) {
    if (weights_.empty() || weights_.size() != vectors_.size()) {
        throw Error("SpectralDensity: need matching, nonempty weight and vector lists");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) throw Error("SpectralDensity: weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10) throw Error("SpectralDensity: weights sum to " + std::to_string(sum) + ", not 1");
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        for (std::size_t j = i; j < vectors_.size(); ++j) {
            require_same_grid(vectors_[i], vectors_[j], "SpectralDensity");
            const double target = i == j ? 1.0 : 0.0;
            const double gram = std::abs(inner(vectors_[i], vectors_[j]) - target);
            if (gram > 1e-8) {
                throw Error("SpectralDensity: vectors " + std::to_string(i) + ", " + std::to_string(j) +
                            " not orthonormal (defect " + std::to_string(gram) + ")");
            }
        }
    }
}

SpectralDensity SpectralDensity::rank_one(const SampledFunction& eta) { return {{1.0}, {eta}}; }

double povm_quadratic_form(const SpectralDensity& T, const GroupRegion& region, const SampledFunction& u,
                           const GroupQuadrature& quad) {
    double total = 0.0;
    for (std::size_t i = 0; i < T.weights().size(); ++i) {
        // <C pi(g^-1) u, e_i> = <u, pi(g) C e_i>
        total += T.weights()[i] * coefficient_integral(u, T.vectors()[i], region, quad);
    }
    return total;
}

double wavelet_quadratic_form(const SampledFunction& u, const SampledFunction& eta, const GroupRegion& region,
                              const GroupQuadrature& quad) {
    require_same_grid(u, eta, "wavelet_quadratic_form");
    const HalfLineGrid& grid = u.grid();
    const GroupRule rule = group_rule(grid, region, quad);
    const double b_extent = std::max(std::abs(region.b_lo), std::abs(region.b_hi));
    if (b_extent > modulation_bound(u) * (1.0 + 1e-12)) {
        throw QuadratureConstraintError("wavelet_quadratic_form: |b| exceeds the modulation bound");
    }
    return ordered_reduce(rule.dilations.size(), quad.threads, 0.0, [&](std::size_t idx) {
        const double a = grid.dilation(rule.dilations[idx]);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.b.nodes.size(); ++i) {
            acc += rule.b.weights[i] * std::norm(wavelet_coefficient(u, eta, AffineElement(rule.b.nodes[i], a)));
        }
        return rule.a_weights[idx] * acc;
    });
}

double orthogonality_defect(const SampledFunction& u, const SampledFunction& v, const GroupRegion& window,
                            const GroupQuadrature& quad) {
    return std::abs(coefficient_integral(u, v, window, quad) - u.norm_squared() * v.norm_squared());
}

}  // namespace covpovm
