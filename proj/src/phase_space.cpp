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

#include "covpovm/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "covpovm/errors.hpp"

namespace covpovm {

namespace {

void require_valid(const Rect& r) {
    const bool finite = std::isfinite(r.p_lo) && std::isfinite(r.p_hi) && std::isfinite(r.q_lo) && std::isfinite(r.q_hi);
    if (!finite || r.p_lo > r.p_hi || r.q_lo > r.q_hi) {
        throw Error("rectangle [" + std::to_string(r.p_lo) + ", " + std::to_string(r.p_hi) + "] x [" +
                    std::to_string(r.q_lo) + ", " + std::to_string(r.q_hi) + "] is not a finite ordered box");
    }
}

Rect box_of(const RegionPrimitive& prim) {
    return std::visit(
        [](const auto& x) -> Rect {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rect>) {
                return x;
            } else {
                return x.bounding_box();
            }
        },
        prim);
}

bool boxes_overlap(const Rect& a, const Rect& b) {
    return a.p_lo < b.p_hi && b.p_lo < a.p_hi && a.q_lo < b.q_hi && b.q_lo < a.q_hi;
}

}  // namespace

bool Rect::covers(const Rect& other, double slack) const {
    return other.p_lo >= p_lo - slack && other.p_hi <= p_hi + slack && other.q_lo >= q_lo - slack &&
           other.q_hi <= q_hi + slack;
}

bool Disk::contains(double p, double q) const {
    const double dp = p - center_p;
    const double dq = q - center_q;
    return dp * dp + dq * dq <= radius * radius;
}

Rect Disk::bounding_box() const {
    return {center_p - radius, center_p + radius, center_q - radius, center_q + radius};
}

double Disk::area() const { return std::numbers::pi * radius * radius; }

PhaseSpaceRegion::PhaseSpaceRegion(RegionPrimitive p) { primitives_.push_back(p); }

PhaseSpaceRegion PhaseSpaceRegion::rect(double p_lo, double p_hi, double q_lo, double q_hi) {
    Rect r{p_lo, p_hi, q_lo, q_hi};
    require_valid(r);
    return PhaseSpaceRegion(r);
}

PhaseSpaceRegion PhaseSpaceRegion::disk(double center_p, double center_q, double radius) {
    if (!std::isfinite(center_p) || !std::isfinite(center_q) || !std::isfinite(radius) || radius < 0.0) {
        throw Error("disk radius must be finite and nonnegative, center finite");
    }
    return PhaseSpaceRegion(Disk{center_p, center_q, radius});
}

PhaseSpaceRegion PhaseSpaceRegion::unite(const PhaseSpaceRegion& other) const {
    PhaseSpaceRegion out = *this;
    out.primitives_.insert(out.primitives_.end(), other.primitives_.begin(), other.primitives_.end());
    return out;
}

PhaseSpaceRegion PhaseSpaceRegion::translated(double dp, double dq) const {
    PhaseSpaceRegion out;
    for (const auto& prim : primitives_) {
        if (const auto* r = std::get_if<Rect>(&prim)) {
            out.primitives_.push_back(Rect{r->p_lo + dp, r->p_hi + dp, r->q_lo + dq, r->q_hi + dq});
        } else {
            const auto& d = std::get<Disk>(prim);
            out.primitives_.push_back(Disk{d.center_p + dp, d.center_q + dq, d.radius});
        }
    }
    return out;
}

bool PhaseSpaceRegion::contains(double p, double q) const {
    return std::any_of(primitives_.begin(), primitives_.end(),
                       [&](const RegionPrimitive& prim) { return std::visit([&](const auto& x) { return x.contains(p, q); }, prim); });
}

std::optional<Rect> PhaseSpaceRegion::bounding_box() const {
    if (primitives_.empty()) return std::nullopt;
    Rect box = box_of(primitives_.front());
    for (const auto& prim : primitives_) {
        const Rect b = box_of(prim);
        box.p_lo = std::min(box.p_lo, b.p_lo);
        box.p_hi = std::max(box.p_hi, b.p_hi);
        box.q_lo = std::min(box.q_lo, b.q_lo);
        box.q_hi = std::max(box.q_hi, b.q_hi);
    }
    return box;
}

double PhaseSpaceRegion::area() const {
    for (std::size_t i = 0; i < primitives_.size(); ++i) {
        for (std::size_t j = i + 1; j < primitives_.size(); ++j) {
            if (boxes_overlap(box_of(primitives_[i]), box_of(primitives_[j]))) {
                throw Error("PhaseSpaceRegion::area: primitives " + std::to_string(i) + " and " + std::to_string(j) +
                            " may overlap");
            }
        }
    }
    double total = 0.0;
    for (const auto& prim : primitives_) total += std::visit([](const auto& x) { return x.area(); }, prim);
    return total;
}

QuadratureSpec QuadratureSpec::over(const Rect& box, QuadratureRule rule, std::size_t nodes_p, std::size_t nodes_q) {
    QuadratureSpec spec;
    spec.rule = rule;
    spec.nodes_p = nodes_p;
    spec.nodes_q = nodes_q;
    spec.box = box;
    spec.validate();
    return spec;
}

QuadratureSpec QuadratureSpec::translated(double dp, double dq) const {
    QuadratureSpec out = *this;
    out.box = Rect{box.p_lo + dp, box.p_hi + dp, box.q_lo + dq, box.q_hi + dq};
    return out;
}

void QuadratureSpec::validate() const {
    if (nodes_p < 2 || nodes_q < 2) {
        throw QuadratureConstraintError("quadrature needs at least 2 nodes per axis, got " + std::to_string(nodes_p) +
                                        "x" + std::to_string(nodes_q));
    }
    try {
        require_valid(box);
    } catch (const Error& e) {
        throw QuadratureConstraintError(std::string("quadrature box: ") + e.what());
    }
}

void QuadratureSpec::require_covers(const PhaseSpaceRegion& region) const {
    validate();
    const auto bbox = region.bounding_box();
    if (bbox && !box.covers(*bbox)) {
        throw CoverageError("quadrature box [" + std::to_string(box.p_lo) + ", " + std::to_string(box.p_hi) + "] x [" +
                            std::to_string(box.q_lo) + ", " + std::to_string(box.q_hi) +
                            "] does not cover the region bounding box [" + std::to_string(bbox->p_lo) + ", " +
                            std::to_string(bbox->p_hi) + "] x [" + std::to_string(bbox->q_lo) + ", " +
                            std::to_string(bbox->q_hi) + "]");
    }
}

Rule1D QuadratureSpec::p_rule() const {
    return rule == QuadratureRule::gauss_legendre ? gauss_legendre(nodes_p, box.p_lo, box.p_hi)
                                                  : trapezoid(nodes_p, box.p_lo, box.p_hi);
}

Rule1D QuadratureSpec::q_rule() const {
    return rule == QuadratureRule::gauss_legendre ? gauss_legendre(nodes_q, box.q_lo, box.q_hi)
                                                  : trapezoid(nodes_q, box.q_lo, box.q_hi);
}

}  // namespace covpovm
