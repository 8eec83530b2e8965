#include "trp/point.hpp"

#include <vector>

#include "trp/errors.hpp"

namespace trp {

UniPoly compose(const TernaryForm& f, const std::array<UniPoly, 3>& p) {
    const int d = f.degree();
    std::array<std::vector<UniPoly>, 3> pw;
    for (size_t i = 0; i < 3; ++i) {
        pw[i].push_back(UniPoly::constant(1));
        for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * p[i]);
    }
    UniPoly acc;
    for (const auto& [e, c] : f.coeffs())
        acc += pw[0][static_cast<size_t>(e[0])] * pw[1][static_cast<size_t>(e[1])] * pw[2][static_cast<size_t>(e[2])] * c;
    return acc;
}

std::array<UniPoly, 3> apply(const RationalMatrix& a, const std::array<UniPoly, 3>& p) {
    std::array<UniPoly, 3> out;
    for (size_t i = 0; i < 3; ++i)
        out[i] = p[0] * a(i, 0) + p[1] * a(i, 1) + p[2] * a(i, 2);
    return out;
}

std::vector<AlgebraicPoint> line_intersections(const TernaryForm& f, const ProjectivePoint& p,
                                               const ProjectivePoint& q) {
    std::array<UniPoly, 3> coords;
    for (int i = 0; i < 3; ++i) coords[static_cast<size_t>(i)] = UniPoly({p[i], q[i]});
    UniPoly r = compose(f, coords);
    if (r.is_zero()) throw DomainError("line contained in the curve");
    std::vector<AlgebraicPoint> out;
    for (auto& root : isolate_roots(r)) {
        int m = root.multiplicity;
        out.push_back({std::move(root), coords, m});
    }
    return out;
}

bool AlgebraicPoint::vanishes(const TernaryForm& f) const { return vanishes_at(compose(f, coords), t); }

std::optional<ProjectivePoint> AlgebraicPoint::rational() const {
    auto v = rational_value(t);
    if (!v) return std::nullopt;
    return ProjectivePoint(coords[0](*v), coords[1](*v), coords[2](*v));
}

std::array<Interval, 3> AlgebraicPoint::enclose() const {
    Interval ti = t.interval();
    return {coords[0](ti), coords[1](ti), coords[2](ti)};
}

std::array<double, 2> AlgebraicPoint::approx_affine() const {
    AlgebraicPoint p = *this;
    p.refine(pow2(-40));
    Rational m = p.t.interval().mid();
    Rational z = coords[2](m);
    if (z == 0) return {0.0, 0.0};
    return {to_double(coords[0](m) / z), to_double(coords[1](m) / z)};
}

}  // namespace trp
