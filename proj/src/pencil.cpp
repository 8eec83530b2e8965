#include "trp/pencil.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "trp/errors.hpp"

namespace trp {

namespace {

UniPoly linear_t() { return UniPoly({Rational(0), Rational(1)}); }

bool has_real_root(const UniPoly& p) { return !p.is_constant() && count_real_roots(p) > 0; }

// A point strictly between a and b, preferring simple fractions.
Rational strictly_inside(const Rational& a, const Rational& b) {
    Rational s = simplest_between(a, b);
    if (s == a || s == b) s = (a + b) / 2;
    return s;
}

AlgebraicPoint at_rational(const ProjectivePoint& p) {
    AlgebraicPoint a;
    a.t.low = a.t.high = 0;
    a.t.poly = detail::ZPoly{Integer(0), Integer(1)};
    for (size_t i = 0; i < 3; ++i) a.coords[i] = UniPoly::constant(p.v[i]);
    return a;
}

std::vector<Rational> small_rationals(size_t n) {
    std::vector<Rational> out{0};
    for (long q = 1; out.size() < n; ++q)
        for (long p = 1; p <= 4 * q && out.size() < n; ++p) {
            if (std::gcd(p, q) != 1) continue;
            out.push_back(Rational(p, q));
            out.push_back(Rational(-p, q));
        }
    return out;
}

}  // namespace

std::string to_string(const PencilParameter& p) { return p.slope ? to_string(*p.slope) : "inf"; }

TernaryForm Pencil::member(const PencilParameter& p) const {
    if (p.at_infinity()) return f;
    return g + f * *p.slope;
}

Pencil build_pencil(const std::vector<ProjectivePoint>& points, int k) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].same_point(points[j])) throw DomainError("base points must be distinct");
    auto basis = interpolation_space(points, k);
    if (basis.size() < 2) throw DomainError("no pencil through these points");
    return Pencil{k, basis[0], basis[1], points};
}

MemberIntersection intersect_member(const TernaryForm& c, const TernaryForm& member, std::uint64_t seed) {
    const int d = c.degree(), k = member.degree();
    if (k < 1 || member.is_zero()) throw DomainError("member must have positive degree");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt <= kMaxChartRetries; ++attempt) {
        ProjectiveMap w = attempt == 0 ? ProjectiveMap() : ProjectiveMap::random(rng);
        BiPoly cw = c.pullback(w.matrix()).dehomogenize();
        BiPoly mw = member.pullback(w.matrix()).dehomogenize();
        if (cw.degree() != d || mw.degree() != k) continue;
        UniPoly r = resultant(cw, mw);
        if (r.is_zero()) throw DomainError("member shares a component with the curve");
        if (r.degree() != d * k) continue;
        auto s = subresultant(cw, mw, 1);
        if (s[1].is_zero() || has_real_root(gcd(square_free_part(r), s[1]))) continue;
        MemberIntersection out;
        out.total = d * k;
        const std::array<UniPoly, 3> local{linear_t() * s[1], -s[0], s[1]};
        const auto coords = trp::apply(w.matrix(), local);
        for (auto& root : isolate_roots(r)) {
            AlgebraicPoint p;
            p.t = root;
            p.coords = coords;
            p.multiplicity = root.multiplicity;
            out.real += root.multiplicity;
            out.points.push_back(std::move(p));
        }
        return out;
    }
    throw GenericPositionError("member intersection");
}

TotalRealityCertificate certify_totally_real(const TernaryForm& c, const Pencil& p, std::uint64_t seed) {
    const int d = c.degree(), k = p.k;
    if (k >= d) throw DomainError("pencil degree must be below the curve degree");
    // A member with non-real intersections already decides the verdict.
    {
        TotalRealityCertificate quick;
        std::vector<PencilParameter> probes{{}};
        for (long v : {0, 1, -1, 2, -2}) probes.push_back({Rational(v)});
        for (const auto& pp : probes) {
            auto mi = intersect_member(c, p.member(pp), seed);
            quick.checks.push_back({pp, pp.at_infinity() ? "infinity" : "probe", mi.real, mi.total});
            if (mi.real != mi.total) {
                quick.witness = pp;
                return quick;
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt <= kMaxChartRetries; ++attempt) {
        ProjectiveMap w = attempt == 0 ? ProjectiveMap() : ProjectiveMap::random(rng);
        BiPoly cw = c.pullback(w.matrix()).dehomogenize();
        if (cw.degree() != d) continue;
        TernaryForm fw = p.f.pullback(w.matrix()), gw = p.g.pullback(w.matrix());
        const Rational fy = fw.coeff({0, k, 0}), gy = gw.coeff({0, k, 0});
        if (fy == 0 && gy == 0) continue;
        const BiPoly fb = fw.dehomogenize(), gb = gw.dehomogenize();

        // R(x, l) = Res_y(C, g + l f) has degree at most d in l.
        std::vector<Rational> nodes;
        std::vector<UniPoly> values;
        for (long i = 0; static_cast<int>(nodes.size()) <= d; ++i) {
            Rational l = i % 2 ? Rational((i + 1) / 2) : Rational(-(i / 2));
            if (gy + l * fy == 0) continue;
            nodes.push_back(l);
            values.push_back(resultant(cw, gb + fb * l));
        }
        int xdeg = -1;
        for (const auto& v : values) xdeg = std::max(xdeg, v.degree());
        if (xdeg < 0) throw DomainError("member shares a component with the curve");
        if (xdeg != d * k) continue;
        std::vector<UniPoly> by_x;
        for (int e = 0; e <= xdeg; ++e) {
            std::vector<Rational> ys;
            for (const auto& v : values) ys.push_back(v.coeff(e));
            by_x.push_back(interpolate(nodes, ys));
        }
        // Base points on C are common roots of every member: divide out the content in x.
        BiPoly by_l = BiPoly(by_x).transposed();
        UniPoly content;
        for (const auto& cj : by_l.coeffs()) content = gcd(content, cj);
        std::vector<UniPoly> reduced;
        for (const auto& cj : by_l.coeffs()) reduced.push_back(exact_div(cj, content));
        BiPoly moving = BiPoly(reduced).transposed();

        UniPoly crit = UniPoly::constant(1);
        if (moving.degree() >= 2) {
            UniPoly disc = discriminant(moving);
            if (disc.is_zero()) continue;
            crit = disc * moving.leading();
        } else if (moving.degree() == 1) {
            crit = moving.leading();
        }

        TotalRealityCertificate cert;
        if (!crit.is_constant()) cert.critical_parameters = isolate_roots(crit);
        const auto& cp = cert.critical_parameters;
        std::vector<std::pair<Rational, std::string>> params;
        if (cp.empty()) {
            params.push_back({Rational(0), "sample"});
        } else {
            params.push_back({Rational(floor(cp.front().low) - 1), "sample"});
            for (size_t i = 0; i < cp.size(); ++i) {
                if (cp[i].exact()) params.push_back({cp[i].low, "critical"});
                if (i + 1 < cp.size()) params.push_back({strictly_inside(cp[i].high, cp[i + 1].low), "sample"});
            }
            params.push_back({Rational(floor(cp.back().high) + 2), "sample"});
        }
        for (const auto& [l, role] : params) cert.checks.push_back({PencilParameter{l}, role, 0, 0});
        cert.checks.push_back({PencilParameter{}, "infinity", 0, 0});
        cert.totally_real = true;
        for (auto& ch : cert.checks) {
            auto mi = intersect_member(c, p.member(ch.parameter), seed);
            ch.real = mi.real;
            ch.total = mi.total;
            if (ch.real != ch.total && cert.totally_real) {
                cert.totally_real = false;
                cert.witness = ch.parameter;
            }
        }
        return cert;
    }
    throw GenericPositionError("pencil certification");
}

std::vector<AlgebraicPoint> base_locus_on_curve(const TernaryForm& c, const Pencil& p, std::uint64_t seed) {
    std::vector<AlgebraicPoint> out;
    for (auto& pt : intersect_member(c, p.f, seed).points)
        if (pt.vanishes(p.g)) out.push_back(std::move(pt));
    return out;
}

std::vector<int> degree_partition_at(const TernaryForm& c, const CurveTopology& t, const Pencil& p,
                                     const PencilParameter& at, std::uint64_t seed) {
    std::vector<int> counts(static_cast<size_t>(t.count()), 0);
    for (const auto& pt : intersect_member(c, p.member(at), seed).points) {
        if (pt.vanishes(p.f) && pt.vanishes(p.g)) continue;
        counts[static_cast<size_t>(t.component_of(pt))] += pt.multiplicity;
    }
    return counts;
}

std::vector<int> degree_partition(const TernaryForm& c, const CurveTopology& t, const Pencil& p,
                                  const TotalRealityCertificate& cert, std::uint64_t seed) {
    if (!cert.totally_real) throw DomainError("degree partition needs a totally real pencil");
    std::vector<PencilParameter> tries;
    for (const auto& ch : cert.checks)
        if (ch.role == "sample") tries.push_back(ch.parameter);
    // Any rational outside the closed critical intervals is regular as well.
    for (const auto& a : small_rationals(8)) {
        const bool critical = std::any_of(cert.critical_parameters.begin(), cert.critical_parameters.end(),
                                          [&](const IsolatingInterval& r) { return r.low <= a && a <= r.high; });
        if (!critical) tries.push_back({a});
    }
    for (const auto& at : tries) {
        try {
            return degree_partition_at(c, t, p, at, seed);
        } catch (const GenericPositionError&) {
        }
    }
    throw DomainError("no regular parameter could be located on the topology");
}

std::vector<ProjectivePoint> rational_points_on(const TernaryForm& c, const CurveTopology& t, int component,
                                                int limit) {
    std::vector<ProjectivePoint> out;
    if (limit <= 0) return out;
    for (const auto& a : small_rationals(25)) {
        for (int axis = 0; axis < 2; ++axis) {
            // axis 0: the line y = a z; axis 1: the line x = a z.
            ProjectivePoint base = axis == 0 ? ProjectivePoint(0, a, 1) : ProjectivePoint(a, 0, 1);
            ProjectivePoint dir = axis == 0 ? ProjectivePoint(1, 0, 0) : ProjectivePoint(0, 1, 0);
            UniPoly r = c.restrict_to_line(base, dir);
            if (r.is_zero() || r.is_constant()) continue;
            for (auto& root : isolate_roots(r)) {
                auto s = rational_value(root);
                if (!s) continue;
                ProjectivePoint q = axis == 0 ? ProjectivePoint(*s, a, 1) : ProjectivePoint(a, *s, 1);
                if (std::any_of(out.begin(), out.end(), [&](const ProjectivePoint& o) { return o.same_point(q); }))
                    continue;
                try {
                    if (t.component_of(at_rational(q)) != component) continue;
                } catch (const GenericPositionError&) {
                    continue;
                }
                out.push_back(q);
                if (static_cast<int>(out.size()) >= limit) return out;
            }
        }
    }
    return out;
}

SearchReport search_totally_real_pencil(const TernaryForm& c, const CurveTopology& t, const SearchOptions& options) {
    if (t.count() == 0) throw DomainError("no real components");
    const int d = c.degree();
    const int k = options.degree > 0 ? options.degree : d - 3;
    if (k < 1 || k >= d) throw DomainError("pencil degree must lie between 1 and d - 1");
    const int g = t.genus;

    std::vector<int> order;
    for (int i = 0; i < t.count(); ++i)
        if (t.components[static_cast<size_t>(i)].kind == ComponentKind::oval) order.push_back(i);
    if (t.pseudo_line() >= 0) order.push_back(t.pseudo_line());

    std::vector<std::vector<ProjectivePoint>> candidates(static_cast<size_t>(t.count()));
    for (int i = 0; i < t.count(); ++i) {
        auto& cand = candidates[static_cast<size_t>(i)];
        if (!options.interior_only) cand = rational_points_on(c, t, i, 2);
        if (t.components[static_cast<size_t>(i)].kind == ComponentKind::oval)
            for (auto& q : interior_points(t, i, 4)) cand.push_back(q);
    }

    SearchReport report;
    auto done = [&] {
        return static_cast<int>(report.found.size()) >= options.wanted ||
               static_cast<int>(report.attempts.size()) >= options.budget;
    };
    for (int size : {g - 2, g - 1}) {
        if (size < 1 || size > static_cast<int>(order.size())) continue;
        // Subsets of `order` of the given size, in lexicographic order of positions.
        std::vector<int> pick(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<size_t>(i)] = i;
        for (;;) {
            std::vector<int> comps;
            for (int i : pick) comps.push_back(order[static_cast<size_t>(i)]);
            bool usable = std::all_of(comps.begin(), comps.end(),
                                      [&](int comp) { return !candidates[static_cast<size_t>(comp)].empty(); });
            std::vector<size_t> idx(comps.size(), 0);
            while (usable && !done()) {
                std::vector<ProjectivePoint> pts;
                for (size_t i = 0; i < comps.size(); ++i)
                    pts.push_back(candidates[static_cast<size_t>(comps[i])][idx[i]]);
                SearchAttempt att{comps, pts, ""};
                try {
                    Pencil pen = build_pencil(pts, k);
                    auto cert = certify_totally_real(c, pen, options.seed);
                    att.outcome = cert.totally_real ? "totally-real" : "not-totally-real";
                    if (cert.totally_real) report.found.push_back({pen, cert});
                } catch (const Error& e) {
                    att.outcome = e.what();
                }
                report.attempts.push_back(std::move(att));
                // Odometer over the candidate lists, last component fastest.
                size_t pos = comps.size();
                while (pos > 0) {
                    --pos;
                    if (++idx[pos] < candidates[static_cast<size_t>(comps[pos])].size()) break;
                    idx[pos] = 0;
                    if (pos == 0) usable = false;
                }
            }
            if (done()) return report;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == static_cast<int>(order.size()) - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return report;
}

}  // namespace trp
