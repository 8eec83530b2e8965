#pragma once

#include <array>
#include <optional>
#include <vector>

#include "trp/form.hpp"
#include "trp/realroots.hpp"

namespace trp {

/// f(p0(t), p1(t), p2(t)) as a polynomial in t.
UniPoly compose(const TernaryForm& f, const std::array<UniPoly, 3>& p);

/// A real point (p0(t) : p1(t) : p2(t)) of the plane, where t is the real root isolated by `t`.
/// Coordinates are in the original (user) frame.
struct AlgebraicPoint {
    IsolatingInterval t;
    std::array<UniPoly, 3> coords;
    /// Intersection multiplicity when the point comes from an intersection, 1 otherwise.
    int multiplicity = 1;

    /// True iff f vanishes at the point (exact).
    bool vanishes(const TernaryForm& f) const;
    /// The point itself when its parameter is rational.
    std::optional<ProjectivePoint> rational() const;
    /// Enclosures of the homogeneous coordinates over the current parameter interval.
    std::array<Interval, 3> enclose() const;
    /// Coordinates in the chart z = 1, approximately.
    std::array<double, 2> approx_affine() const;
    void refine(const Rational& width) { t.refine(width); }
};

/// Real points of V(f) on the line {p + s q : s real}, with multiplicities; the parameter of
/// each point is s.  The point q itself (s = infinity) is not included.  Throws DomainError when
/// the line lies in V(f).
std::vector<AlgebraicPoint> line_intersections(const TernaryForm& f, const ProjectivePoint& p,
                                               const ProjectivePoint& q);

/// A p, applied to polynomial homogeneous coordinates.
std::array<UniPoly, 3> apply(const RationalMatrix& a, const std::array<UniPoly, 3>& p);

}  // namespace trp
