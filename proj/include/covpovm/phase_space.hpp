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
#include <variant>
#include <vector>

#include "covpovm/quadrature_rules.hpp"

namespace covpovm {

/// Closed rectangle [p_lo, p_hi] x [q_lo, q_hi].
struct Rect {
    double p_lo = 0.0;
    double p_hi = 0.0;
    double q_lo = 0.0;
    double q_hi = 0.0;

    [[nodiscard]] bool contains(double p, double q) const { return p >= p_lo && p <= p_hi && q >= q_lo && q <= q_hi; }
    [[nodiscard]] bool covers(const Rect& other, double slack = 1e-12) const;
    [[nodiscard]] double area() const { return (p_hi - p_lo) * (q_hi - q_lo); }
};

/// Closed disk.
struct Disk {
    double center_p = 0.0;
    double center_q = 0.0;
    double radius = 0.0;

    [[nodiscard]] bool contains(double p, double q) const;
    [[nodiscard]] Rect bounding_box() const;
    [[nodiscard]] double area() const;
};

using RegionPrimitive = std::variant<Rect, Disk>;

/// Finite union of rectangles and disks in phase space (p, q).
/// The indicator is 1 on the union, so overlapping primitives are not double counted.
class PhaseSpaceRegion {
  public:
    PhaseSpaceRegion() = default;

    [[nodiscard]] static PhaseSpaceRegion rect(double p_lo, double p_hi, double q_lo, double q_hi);
    [[nodiscard]] static PhaseSpaceRegion disk(double center_p, double center_q, double radius);

    /// Union with every primitive of `other`.
    [[nodiscard]] PhaseSpaceRegion unite(const PhaseSpaceRegion& other) const;
    [[nodiscard]] PhaseSpaceRegion translated(double dp, double dq) const;

    [[nodiscard]] bool empty() const { return primitives_.empty(); }
    [[nodiscard]] const std::vector<RegionPrimitive>& primitives() const { return primitives_; }
    [[nodiscard]] bool contains(double p, double q) const;
    /// Smallest rectangle enclosing every primitive; nullopt for the empty region.
    [[nodiscard]] std::optional<Rect> bounding_box() const;
    /// Lebesgue area. Throws Error if two primitives have overlapping bounding boxes,
    /// since the union area is then not computed.
    [[nodiscard]] double area() const;

  private:
    explicit PhaseSpaceRegion(RegionPrimitive p);
    std::vector<RegionPrimitive> primitives_;
};

enum class QuadratureRule { trapezoid, gauss_legendre };

/// Tensor rule over a bounding box, applied to indicator-masked integrands.
struct QuadratureSpec {
    QuadratureRule rule = QuadratureRule::gauss_legendre;
    std::size_t nodes_p = 64;
    std::size_t nodes_q = 64;
    Rect box;
    unsigned threads = 1;

    [[nodiscard]] static QuadratureSpec over(const Rect& box, QuadratureRule rule = QuadratureRule::gauss_legendre,
                                             std::size_t nodes_p = 64, std::size_t nodes_q = 64);

    [[nodiscard]] QuadratureSpec translated(double dp, double dq) const;

    /// Throws QuadratureConstraintError on bad node counts or box.
    void validate() const;
    /// Throws CoverageError unless the box encloses every primitive of `region`.
    void require_covers(const PhaseSpaceRegion& region) const;

    [[nodiscard]] Rule1D p_rule() const;
    [[nodiscard]] Rule1D q_rule() const;
};

}  // namespace covpovm
