#include "trp/orientation.hpp"

#include "trp/errors.hpp"

namespace trp {

namespace {

// Sign of q at the root isolated by r.
int sign_at_root(const UniPoly& q, IsolatingInterval r) {
    if (q.is_zero() || vanishes_at(q, r)) return 0;
    for (;;) {
        int s = q(r.interval()).certain_sign();
        if (s != 0) return s;
        r.bisect();
    }
}

std::vector<int> branches_of(const Sweep& sw, int comp, int slice) {
    std::vector<int> out;
    for (int b = 0; b < sw.branch_count(slice); ++b)
        if (sw.component_of({slice, b}) == comp) out.push_back(b);
    return out;
}

BiPoly local_form(const TernaryForm& f, const Sweep& sw) { return f.pullback(sw.chart().matrix()).dehomogenize(); }

struct ArcData {
    bool ok = false;
    int arc = 0;
    ProjectivePoint mid;
};

// The arc of the line through a and b (as {a + s b}) that avoids the pseudo-line and the oval
// `inner`.
ArcData pick_arc(const CurveTopology& t, const ProjectivePoint& a, const ProjectivePoint& b, int inner) {
    const int j = t.pseudo_line();
    bool j_hit[2] = {false, false}, inner_hit[2] = {false, false};
    for (auto& pt : line_intersections(t.sweep->curve(), a, b)) {
        const int side = pt.t.compare(Rational(0)) > 0 ? 0 : 1;
        const int comp = t.component_of(pt);
        if (comp == j) j_hit[side] = true;
        if (comp == inner) inner_hit[side] = true;
    }
    for (int side = 0; side < 2; ++side) {
        if (j_hit[side] || inner_hit[side]) continue;
        const int s = side == 0 ? 1 : -1;
        ProjectivePoint m(a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]);
        return {true, s, m};
    }
    return {};
}

TernaryForm line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
    return TernaryForm::linear(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]);
}

// Triangle spanned by three interior points whose sides avoid the pseudo-line, tested
// against the interior point w of the oval `inner`.
std::optional<TriangleWitness> triangle_around(const CurveTopology& t, const std::array<int, 3>& ovals,
                                               const std::array<ProjectivePoint, 3>& pts, int inner,
                                               const ProjectivePoint& w) {
    static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    TriangleWitness tw{ovals, inner, pts, {}, {}};
    for (int i = 0; i < 3; ++i) tw.lines[static_cast<size_t>(i)] = line_through(pts[pairs[i][0]], pts[pairs[i][1]]);
    for (const auto& l : tw.lines)
        if (l.is_zero()) return std::nullopt;
    // Sign products of the two other lines along each selected arc.
    int prod[3];
    for (int i = 0; i < 3; ++i) {
        ArcData arc = pick_arc(t, pts[pairs[i][0]], pts[pairs[i][1]], inner);
        if (!arc.ok) return std::nullopt;
        tw.arcs[static_cast<size_t>(i)] = arc.arc;
        int p = 1;
        for (int k = 0; k < 3; ++k)
            if (k != i) p *= sign(tw.lines[static_cast<size_t>(k)](arc.mid));
        prod[i] = p;
    }
    // The selected arcs bound a triangle iff the products are consistent; its sign vector is
    // then (1, prod of arc on line 2, prod of arc on line 1) up to a global sign.
    if (prod[0] * prod[1] * prod[2] != 1) return std::nullopt;
    const int tau[3] = {1, prod[2], prod[1]};
    int s[3];
    for (int i = 0; i < 3; ++i) {
        s[i] = sign(tw.lines[static_cast<size_t>(i)](w));
        if (s[i] == 0) return std::nullopt;
    }
    const bool inside = (s[0] == tau[0] && s[1] == tau[1] && s[2] == tau[2]) ||
                        (s[0] == -tau[0] && s[1] == -tau[1] && s[2] == -tau[2]);
    if (!inside) return std::nullopt;
    return tw;
}

}  // namespace

std::string to_string(Position p) {
    switch (p) {
        case Position::convex: return "convex";
        case Position::non_convex: return "non-convex";
        default: return "inapplicable";
    }
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::separating: return "separating";
        case Conclusion::non_separating: return "non-separating";
        default: return "unknown";
    }
}

ComponentOrientation induced_orientation(const TernaryForm& c, const CurveTopology& t, const Pencil& p,
                                         const TotalRealityCertificate& cert) {
    if (!cert.totally_real) throw DomainError("orientation needs a totally real pencil");
    if (!t.sweep) return {};
    const Sweep& sw = *t.sweep;
    (void)c;
    // Along the tangent (F_y, -F_x) the parameter -g/f changes with the sign of
    // H = F_x (f g_y - g f_y) - F_y (f g_x - g f_x).
    const BiPoly& F = sw.local();
    const BiPoly fx = F.derivative_outer(), fy = F.derivative_main();
    const BiPoly f = local_form(p.f, sw), g = local_form(p.g, sw);
    const BiPoly h = fx * (f * g.derivative_main() - g * f.derivative_main()) -
                     fy * (f * g.derivative_outer() - g * f.derivative_outer());
    ComponentOrientation out;
    out.flags.assign(static_cast<size_t>(t.count()), 0);
    for (int s = 0; s < sw.slice_count(); ++s) {
        const Rational& x = sw.sample(s);
        const UniPoly hs = h.at_outer(x), fys = fy.at_outer(x);
        for (int b = 0; b < sw.branch_count(s); ++b) {
            const auto& r = sw.branch_root(s, b);
            const int dl = sign_at_root(hs, r);
            if (dl == 0) continue;
            const int xdir = sign_at_root(fys, r) * dl;
            const int flag = xdir * sw.direction_of({s, b});
            int& slot = out.flags[static_cast<size_t>(sw.ordered_index(sw.component_of({s, b})))];
            if (slot == 0) slot = flag;
            else if (slot != flag) throw DomainError("induced orientation is inconsistent");
        }
    }
    for (int v : out.flags)
        if (v == 0) throw DomainError("orientation undetermined on a component");
    return out;
}

std::vector<std::optional<OvalSign>> oval_signs(const CurveTopology& t, const ComponentOrientation& o) {
    const int j = t.pseudo_line();
    if (j < 0) throw DomainError("oval signs need a pseudo-line");
    if (t.has_nesting()) throw DomainError("sign convention for nested ovals unspecified");
    if (static_cast<int>(o.flags.size()) != t.count()) throw DomainError("orientation does not match topology");
    const Sweep& sw = *t.sweep;
    const int cj = t.sweep_index(j);
    std::vector<std::optional<OvalSign>> out(static_cast<size_t>(t.count()));
    for (int i = 0; i < t.count(); ++i) {
        if (i == j) continue;
        const int c = t.sweep_index(i);
        // Over the first slice of the oval it has two adjacent branches a < b.  The part of the
        // vertical line outside the oval is an arc across the Moebius band N; signed crossings
        // with it (sides exchanged through the point at infinity) compute the class in H_1(N).
        int first = sw.slice_count();
        for (const auto& st : sw.cycle(c)) first = std::min(first, st.segment.slice);
        const auto bs = branches_of(sw, c, first);
        if (bs.size() != 2 || bs[1] != bs[0] + 1) throw DomainError("oval has no simple leftmost slice");
        const int a = bs[0], b = bs[1];
        int deg_j = 0;
        for (int jb : branches_of(sw, cj, first)) {
            const int eps = jb > b ? 1 : -1;
            deg_j += eps * sw.direction_of({first, jb}) * o.flags[static_cast<size_t>(j)];
        }
        if (deg_j != 1 && deg_j != -1) throw DomainError("pseudo-line class computation failed");
        const int deg_o = -2 * o.flags[static_cast<size_t>(i)] * sw.direction_of({first, a});
        out[static_cast<size_t>(i)] = deg_o == -2 * deg_j ? OvalSign::positive : OvalSign::negative;
    }
    return out;
}

QuinticVerdict non_convex_position(const CurveTopology& t) {
    QuinticVerdict v;
    if (t.degree != 5 || t.count() != 5 || t.pseudo_line() < 0) return v;
    if (t.has_nesting()) throw DomainError("non-convex position is unspecified for nested ovals");
    std::vector<int> ovals;
    for (int i = 0; i < t.count(); ++i)
        if (i != t.pseudo_line()) ovals.push_back(i);
    std::vector<std::vector<ProjectivePoint>> choices;
    for (int o : ovals) choices.push_back(interior_points(t, o, 2));
    // Interior-point choices: all witnesses first, then one alternative at a time.
    std::vector<std::array<size_t, 4>> picks{{0, 0, 0, 0}};
    for (size_t k = 0; k < 4; ++k)
        if (choices[k].size() > 1) {
            std::array<size_t, 4> p{0, 0, 0, 0};
            p[k] = 1;
            picks.push_back(p);
        }
    for (const auto& pick : picks) {
        for (size_t inner = 0; inner < 4; ++inner) {
            std::array<int, 3> tri{};
            std::array<ProjectivePoint, 3> pts;
            size_t n = 0;
            for (size_t k = 0; k < 4; ++k) {
                if (k == inner) continue;
                tri[n] = ovals[k];
                pts[n] = choices[k][pick[k]];
                ++n;
            }
            std::optional<TriangleWitness> tw;
            try {
                tw = triangle_around(t, tri, pts, ovals[inner], choices[inner][pick[inner]]);
            } catch (const GenericPositionError&) {
                continue;
            }
            if (tw) {
                v.position = Position::non_convex;
                v.conclusion = Conclusion::separating;
                v.triangle = tw;
                return v;
            }
        }
    }
    v.position = Position::convex;
    v.conclusion = Conclusion::non_separating;
    return v;
}

QuinticVerdict classify_quintic(const TernaryForm& c, std::uint64_t seed) {
    if (c.degree() != 5) throw DomainError("quintic classification needs a curve of degree 5");
    return non_convex_position(compute_topology(c, seed));
}

}  // namespace trp
