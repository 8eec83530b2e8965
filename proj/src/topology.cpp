#include "trp/topology.hpp"

#include <algorithm>
#include <random>

#include "trp/errors.hpp"

namespace trp {

namespace {

// F(1, t, 0) as a polynomial in t.
UniPoly at_infinity(const TernaryForm& f) {
    std::vector<Rational> v(static_cast<size_t>(f.degree()) + 1);
    for (const auto& [e, c] : f.coeffs())
        if (e[2] == 0) v[static_cast<size_t>(e[1])] += c;
    return UniPoly(std::move(v));
}

// s11^e * p(x, -s10/s11), where e is the y-degree of p.
UniPoly substitute_root(const BiPoly& p, const UniPoly& s10, const UniPoly& s11) {
    const int e = p.degree();
    UniPoly acc;
    UniPoly neg = -s10;
    for (int i = 0; i <= e; ++i) acc += p.coeff(i) * pow(neg, i) * pow(s11, e - i);
    return acc;
}

bool has_real_root(const UniPoly& p) { return !p.is_zero() && !p.is_constant() && count_real_roots(p) > 0; }

Rational strictly_between(const Rational& lo, const Rational& hi) {
    Rational gap = (hi - lo) / 4;
    return simplest_between(lo + gap, hi - gap);
}

}  // namespace

SmoothnessVerdict check_smooth(const TernaryForm& form, std::uint64_t seed) {
    if (form.is_zero()) throw DomainError("zero form");
    const int d = form.degree();
    if (d <= 1) return {true, std::nullopt};
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt <= kMaxChartRetries; ++attempt) {
        ProjectiveMap w = attempt == 0 ? ProjectiveMap() : ProjectiveMap::random(rng);
        TernaryForm g = form.pullback(w.matrix());
        if (g.coeff({0, d, 0}) == 0) continue;
        // Singular points on the line at infinity are (1 : t : 0).
        UniPoly common = gcd(gcd(at_infinity(g.partial(0)), at_infinity(g.partial(1))), at_infinity(g.partial(2)));
        if (!common.is_zero() && !common.is_constant()) {
            SmoothnessVerdict v{false, std::nullopt};
            for (auto& r : isolate_roots(common))
                if (auto t = rational_value(r)) v.singular_point = w(ProjectivePoint(1, *t, 0)).normalized();
            return v;
        }
        BiPoly f = g.dehomogenize();
        BiPoly fy = f.derivative_main();
        UniPoly a = resultant(f, fy);
        if (a.is_zero()) return {false, std::nullopt};
        if (a.is_constant()) return {true, std::nullopt};
        UniPoly asf = square_free_part(a);
        auto s = subresultant(f, fy, 1);
        if (!gcd(asf, s[1]).is_constant()) continue;
        UniPoly h = substitute_root(f.derivative_outer(), s[0], s[1]);
        UniPoly bad = gcd(asf, h);
        if (bad.is_constant()) return {true, std::nullopt};
        SmoothnessVerdict v{false, std::nullopt};
        for (auto& r : isolate_roots(bad))
            if (auto x = rational_value(r)) v.singular_point = w(ProjectivePoint(*x, -s[0](*x) / s[1](*x), 1)).normalized();
        return v;
    }
    throw GenericPositionError("smoothness check");
}

Sweep::Sweep(const TernaryForm& curve, const ProjectiveMap& chart) : curve_(curve), chart_(chart) {
    const int d = curve.degree();
    TernaryForm g = curve.pullback(chart.matrix());
    if (g.coeff({0, d, 0}) == 0) throw GenericPositionError("curve passes through the vertical direction");
    UniPoly inf = at_infinity(g);
    if (!gcd(inf, inf.derivative()).is_constant()) throw GenericPositionError("curve tangent to the line at infinity");
    local_ = g.dehomogenize();

    if (d >= 2) {
        UniPoly disc = discriminant(local_);
        if (disc.is_zero()) throw GenericPositionError("non-reduced curve");
        if (!disc.is_constant()) {
            UniPoly dsf = square_free_part(disc);
            auto s = subresultant(local_, local_.derivative_main(), 1);
            s10_ = s[0];
            s11_ = s[1];
            if (has_real_root(gcd(dsf, s11_))) throw GenericPositionError("critical points share a vertical line");
            critical_ = isolate_roots(dsf);
        }
    }

    const size_t m = critical_.size();
    if (m == 0) {
        samples_.push_back(Rational(0));
    } else {
        samples_.push_back(Rational(floor(critical_.front().low) - 1));
        for (size_t i = 0; i + 1 < m; ++i) samples_.push_back(strictly_between(critical_[i].high, critical_[i + 1].low));
        samples_.push_back(Rational(floor(critical_.back().high) + 1));
    }
    for (const auto& x : samples_) branches_.push_back(isolate_roots(local_.at_outer(x)));

    const int at_inf = inf.is_constant() ? 0 : count_real_roots(inf);
    if (branch_count(0) != at_inf || branch_count(slice_count() - 1) != at_inf)
        throw GenericPositionError("branch count at infinity");
    for (size_t c = 0; c < m; ++c) {
        int diff = branch_count(static_cast<int>(c) + 1) - branch_count(static_cast<int>(c));
        if (diff != 2 && diff != -2) throw GenericPositionError("critical value is not a simple fold");
    }
    certify_folds();
    assemble();
}

void Sweep::certify_folds() {
    const size_t m = critical_.size();
    fold_index_.assign(m, 0);
    fold_opens_right_.assign(m, false);
    for (size_t c = 0; c < m; ++c) {
        const bool opens = branch_count(static_cast<int>(c) + 1) > branch_count(static_cast<int>(c));
        IsolatingInterval& crit = critical_[c];
        const Rational& left = samples_[c];
        const Rational& right = samples_[c + 1];
        Rational h = 1;
        bool done = false;
        for (int iter = 0; iter < 160 && !done; ++iter, h /= 2) {
            Rational w = h * h * h / 8;
            if (!crit.exact()) crit.refine(w);
            Rational a = crit.low, b = crit.high;
            if (crit.exact()) {
                Rational half = std::min({w, Rational((crit.low - left) / 2), Rational((right - crit.low) / 2)});
                a = crit.low - half;
                b = crit.low + half;
            }
            Rational mid = (a + b) / 2;
            Rational den = s11_(mid);
            if (den == 0) continue;
            long bits = 4 - static_cast<long>(iter);
            Rational y0 = floor_dyadic(-s10_(mid) / den, -bits + 8);
            Rational ylo = y0 - h, yhi = y0 + h;
            auto clean_edge = [&](const Rational& y) {
                UniPoly e = local_.at_main(y);
                if (e.is_zero()) return false;
                return e(a) != 0 && e(b) != 0 && count_real_roots(e, a, b) == 0;
            };
            if (!clean_edge(ylo) || !clean_edge(yhi)) continue;
            const Rational& big = opens ? b : a;
            const Rational& small = opens ? a : b;
            UniPoly fb = local_.at_outer(big), fs = local_.at_outer(small);
            if (count_real_roots(fb, ylo, yhi) != 2 || count_real_roots(fs, ylo, yhi) != 0) continue;
            fold_index_[c] = count_real_roots(fb, std::nullopt, ylo);
            fold_opens_right_[c] = opens;
            done = true;
        }
        if (!done) throw GenericPositionError("fold certification");
    }
}

// Returns the neighbouring segment across the right end of s and whether it is entered at its
// left end.
std::pair<Segment, bool> Sweep::right_neighbor(const Segment& s) const {
    const int last = slice_count() - 1;
    if (s.slice == last) return {{0, branch_count(0) - 1 - s.branch}, true};
    const size_t c = static_cast<size_t>(s.slice);
    const int r = fold_index_[c];
    if (!fold_opens_right_[c]) {
        if (s.branch == r) return {{s.slice, r + 1}, false};
        if (s.branch == r + 1) return {{s.slice, r}, false};
        return {{s.slice + 1, s.branch < r ? s.branch : s.branch - 2}, true};
    }
    return {{s.slice + 1, s.branch < r ? s.branch : s.branch + 2}, true};
}

std::pair<Segment, bool> Sweep::left_neighbor(const Segment& s) const {
    const int last = slice_count() - 1;
    if (s.slice == 0) return {{last, branch_count(last) - 1 - s.branch}, false};
    const size_t c = static_cast<size_t>(s.slice - 1);
    const int r = fold_index_[c];
    if (fold_opens_right_[c]) {
        if (s.branch == r) return {{s.slice, r + 1}, true};
        if (s.branch == r + 1) return {{s.slice, r}, true};
        return {{s.slice - 1, s.branch < r ? s.branch : s.branch - 2}, false};
    }
    return {{s.slice - 1, s.branch < r ? s.branch : s.branch + 2}, false};
}

void Sweep::assemble() {
    const int slices = slice_count();
    component_.assign(static_cast<size_t>(slices), {});
    direction_.assign(static_cast<size_t>(slices), {});
    for (int s = 0; s < slices; ++s) {
        component_[static_cast<size_t>(s)].assign(static_cast<size_t>(branch_count(s)), -1);
        direction_[static_cast<size_t>(s)].assign(static_cast<size_t>(branch_count(s)), 0);
    }
    for (int s = 0; s < slices; ++s) {
        for (int b = 0; b < branch_count(s); ++b) {
            if (component_[static_cast<size_t>(s)][static_cast<size_t>(b)] >= 0) continue;
            const int id = static_cast<int>(cycles_.size());
            std::vector<Step> cycle;
            bool infinity = false;
            Step cur{{s, b}, 1};
            for (;;) {
                auto& slot = component_[static_cast<size_t>(cur.segment.slice)][static_cast<size_t>(cur.segment.branch)];
                if (slot >= 0) break;
                slot = id;
                direction_[static_cast<size_t>(cur.segment.slice)][static_cast<size_t>(cur.segment.branch)] = cur.dir;
                cycle.push_back(cur);
                auto [next, at_left] = cur.dir > 0 ? right_neighbor(cur.segment) : left_neighbor(cur.segment);
                if (cur.dir > 0 && cur.segment.slice == slices - 1) infinity = true;
                if (cur.dir < 0 && cur.segment.slice == 0) infinity = true;
                cur = {next, at_left ? 1 : -1};
            }
            if (!(cur.segment == cycle.front().segment) || cur.dir != cycle.front().dir)
                throw GenericPositionError("inconsistent branch gluing");
            cycles_.push_back(std::move(cycle));
            crosses_infinity_.push_back(infinity);
        }
    }
    // Kinds from crossing parity with the vertical line over slice 0; the line meets each
    // component in as many points as it has segments there.
    std::vector<int> parity(cycles_.size(), 0);
    for (int b = 0; b < branch_count(0); ++b) parity[static_cast<size_t>(component_[0][static_cast<size_t>(b)])] ^= 1;
    order_.assign(cycles_.size(), -1);
    int next = 0;
    for (size_t c = 0; c < cycles_.size(); ++c)
        if (parity[c]) order_[c] = next++;
    for (size_t c = 0; c < cycles_.size(); ++c)
        if (!parity[c]) order_[c] = next++;
    if (next > 0 && std::count(parity.begin(), parity.end(), 1) > 1)
        throw GenericPositionError("more than one pseudo-line");
}

int Sweep::component_of(const Segment& s) const {
    return component_[static_cast<size_t>(s.slice)][static_cast<size_t>(s.branch)];
}

int Sweep::direction_of(const Segment& s) const {
    return direction_[static_cast<size_t>(s.slice)][static_cast<size_t>(s.branch)];
}

std::array<UniPoly, 3> Sweep::to_chart(const std::array<UniPoly, 3>& coords) const {
    return apply(chart_.inverse().matrix(), coords);
}

Segment Sweep::locate(AlgebraicPoint p) const {
    auto q = to_chart(p.coords);
    if (vanishes_at(q[2], p.t)) throw GenericPositionError("point on the line at infinity of the sweep chart");
    std::vector<IsolatingInterval> crit = critical_;
    const int slices = slice_count();
    for (int iter = 0; iter < 200; ++iter) {
        Rational margin = pow2(-(iter + 2));
        p.t.refine(margin * margin * margin);
        Interval ti = p.t.interval();
        Interval z = q[2](ti);
        if (z.contains_zero()) continue;
        Interval x = q[0](ti) / z, y = q[1](ti) / z;
        int slice = -1;
        bool refined = false;
        for (int s = 0; s < slices; ++s) {
            bool left_ok = s == 0 || x.lo > crit[static_cast<size_t>(s - 1)].high;
            bool right_ok = s == slices - 1 || x.hi < crit[static_cast<size_t>(s)].low;
            if (left_ok && right_ok) {
                slice = s;
                break;
            }
        }
        if (slice < 0) {
            for (auto& c : crit)
                if (!(c.high < x.lo || x.hi < c.low)) {
                    c.bisect();
                    refined = true;
                }
            (void)refined;
            continue;
        }
        long bits = iter + 12;
        Rational ylo = floor_dyadic(y.lo - margin, bits), yhi = ceil_dyadic(y.hi + margin, bits);
        auto clean_edge = [&](const Rational& v) {
            UniPoly e = local_.at_main(v);
            if (e.is_zero()) return false;
            if (e(x.lo) == 0 || e(x.hi) == 0) return false;
            return x.lo == x.hi || count_real_roots(e, x.lo, x.hi) == 0;
        };
        if (!clean_edge(ylo) || !clean_edge(yhi)) continue;
        UniPoly fiber = local_.at_outer(x.lo);
        if (count_real_roots(fiber, ylo, yhi) != 1) continue;
        return {slice, count_real_roots(fiber, std::nullopt, ylo)};
    }
    throw GenericPositionError("point location did not converge");
}

int CurveTopology::oval_count() const {
    return static_cast<int>(std::count_if(components.begin(), components.end(),
                                          [](const Component& c) { return c.kind == ComponentKind::oval; }));
}

int CurveTopology::pseudo_line() const {
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].kind == ComponentKind::pseudo_line) return static_cast<int>(i);
    return -1;
}

bool CurveTopology::has_nesting() const {
    return std::any_of(parent.begin(), parent.end(), [](int p) { return p >= 0; });
}

int CurveTopology::component_of(const AlgebraicPoint& p) const {
    if (!sweep) throw DomainError("curve has no real points");
    return sweep->ordered_index(sweep->component_of(sweep->locate(p)));
}

int CurveTopology::sweep_index(int component) const {
    for (int c = 0; c < sweep->component_count(); ++c)
        if (sweep->ordered_index(c) == component) return c;
    throw DomainError("no such component");
}

namespace {

// Segments of a sweep component over one slice, by increasing branch.
std::vector<int> branches_in(const Sweep& sw, int comp, int slice) {
    std::vector<int> out;
    for (int b = 0; b < sw.branch_count(slice); ++b)
        if (sw.component_of({slice, b}) == comp) out.push_back(b);
    return out;
}

ProjectivePoint to_original(const Sweep& sw, const Rational& x, const Rational& y) {
    return sw.chart()(ProjectivePoint(x, y, 1)).normalized();
}

// Point strictly between branch b and branch b + 1 over x (x must not be critical).
Rational between_branches(const Sweep& sw, const Rational& x, int b) {
    auto roots = isolate_roots(sw.local().at_outer(x));
    return strictly_between(roots[static_cast<size_t>(b)].high, roots[static_cast<size_t>(b) + 1].low);
}

// Abscissae strictly inside a slice.
std::vector<Rational> slice_points(const Sweep& sw, int slice, int n) {
    const auto& crit = sw.critical();
    Rational lo, hi;
    if (crit.empty()) {
        lo = -8;
        hi = 8;
    } else if (slice == 0) {
        hi = crit.front().low;
        lo = hi - 8;
    } else if (slice == sw.slice_count() - 1) {
        lo = crit.back().high;
        hi = lo + 8;
    } else {
        lo = crit[static_cast<size_t>(slice - 1)].high;
        hi = crit[static_cast<size_t>(slice)].low;
    }
    std::vector<Rational> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(lo + (hi - lo) * i / (n + 1));
    return xs;
}

std::vector<ProjectivePoint> trace_of(const Sweep& sw, int comp) {
    std::vector<ProjectivePoint> out;
    for (const auto& step : sw.cycle(comp)) {
        std::vector<ProjectivePoint> seg;
        for (const auto& x : slice_points(sw, step.segment.slice, 6)) {
            auto roots = isolate_roots(sw.local().at_outer(x));
            auto& r = roots[static_cast<size_t>(step.segment.branch)];
            r.refine(pow2(-24));
            Rational y = r.exact() ? r.low : floor_dyadic(r.interval().mid(), 30);
            seg.push_back(to_original(sw, floor_dyadic(x, 30), y));
        }
        if (step.dir < 0) std::reverse(seg.begin(), seg.end());
        out.insert(out.end(), seg.begin(), seg.end());
    }
    return out;
}

}  // namespace

namespace {

// True when the affine segment [p, q] contains no point of V(f).
bool segment_clear(const TernaryForm& f, const ProjectivePoint& p, const ProjectivePoint& q) {
    ProjectivePoint a = p.normalized(), b = q.normalized();
    if (a.same_point(b)) return true;
    ProjectivePoint dir(b[0] - a[0], b[1] - a[1], 0);
    UniPoly r = f.restrict_to_line(a, dir);
    if (r.is_zero() || r(Rational(1)) == 0) return false;
    return r.is_constant() || count_real_roots(r, Rational(0), Rational(1)) == 0;
}

// A point of small height in the same complementary region of V(f) as p, unless the simplest
// such point is already in `avoid`.
std::optional<ProjectivePoint> simplify_inside(const TernaryForm& f, const ProjectivePoint& p,
                                               const std::vector<ProjectivePoint>& avoid) {
    if (p[2] == 0) return p;
    ProjectivePoint a = p.normalized();
    for (Rational r = 1; r > pow2(-24); r /= 2) {
        ProjectivePoint q(simplest_between(a[0] - r, a[0] + r), simplest_between(a[1] - r, a[1] + r), 1);
        if (!segment_clear(f, a, q)) continue;
        for (const auto& o : avoid)
            if (o.same_point(q)) return std::nullopt;
        return q;
    }
    return p;
}

}  // namespace

namespace {

bool ovals_affine(const Sweep& sw) {
    for (int c = 0; c < sw.component_count(); ++c) {
        int n = 0;
        for (int b = 0; b < sw.branch_count(0); ++b) n += sw.component_of({0, b}) == c;
        if (n % 2 == 0 && sw.crosses_infinity(c)) return false;
    }
    return true;
}

// True when the chart line a x + b y + c z = 0 meets no oval of the sweep.
bool misses_ovals(const Sweep& sw, const Rational& a, const Rational& b, const Rational& c) {
    const TernaryForm local = sw.curve().pullback(sw.chart().matrix());
    ProjectivePoint dir(b, -a, 0);
    if (local(dir) == 0) return false;
    ProjectivePoint base = b != 0 ? ProjectivePoint(0, -c / b, 1) : ProjectivePoint(-c / a, 0, 1);
    for (auto& p : line_intersections(local, base, dir)) {
        p.coords = trp::apply(sw.chart().matrix(), p.coords);
        Segment s;
        try {
            s = sw.locate(p);
        } catch (const GenericPositionError&) {
            return false;
        }
        int n = 0;
        int comp = sw.component_of(s);
        for (int br = 0; br < sw.branch_count(0); ++br) n += sw.component_of({0, br}) == comp;
        if (n % 2 == 0) return false;
    }
    return true;
}

// A chart line avoiding every oval, as coefficients (a, b, c) of a x + b y + c z.
std::optional<std::array<Rational, 3>> oval_free_line(const Sweep& sw) {
    std::vector<int> oval_in_slice(static_cast<size_t>(sw.slice_count()), 0);
    for (int s = 0; s < sw.slice_count(); ++s) {
        for (int b = 0; b < sw.branch_count(s); ++b) {
            int comp = sw.component_of({s, b}), n = 0;
            for (int br = 0; br < sw.branch_count(0); ++br) n += sw.component_of({0, br}) == comp;
            if (n % 2 == 0) oval_in_slice[static_cast<size_t>(s)] = 1;
        }
        if (!oval_in_slice[static_cast<size_t>(s)]) return std::array<Rational, 3>{1, 0, -sw.sample(s)};
    }
    const Rational offsets[] = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 4, -4, 8, -8, 16, -16, 64, -64};
    const Rational slopes[] = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 5, -5};
    for (const auto& m : slopes)
        for (const auto& c : offsets)
            if (misses_ovals(sw, -m, 1, -c)) return std::array<Rational, 3>{-m, 1, -c};
    return std::nullopt;
}

// Chart whose line at infinity is the given line of the chart `w`.
ProjectiveMap send_to_infinity(const ProjectiveMap& w, const std::array<Rational, 3>& line, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    for (;;) {
        RationalMatrix n(3, 3);
        for (size_t j = 0; j < 3; ++j) {
            n(0, j) = d(rng);
            n(1, j) = d(rng);
            n(2, j) = line[j];
        }
        n(0, 0) += 3;
        n(1, 1) += 3;
        if (determinant(n) == 0) continue;
        return ProjectiveMap(w.matrix() * inverse(n));
    }
}

}  // namespace

CurveTopology compute_topology(const TernaryForm& f, std::uint64_t seed) {
    if (!check_smooth(f, seed).smooth) throw SingularCurveError();
    std::mt19937_64 rng(seed);
    const int d = f.degree();
    for (int attempt = 0; attempt <= kMaxChartRetries; ++attempt) {
        ProjectiveMap w = attempt == 0 ? ProjectiveMap() : ProjectiveMap::random(rng);
        std::shared_ptr<Sweep> sw;
        try {
            sw = std::make_shared<Sweep>(f, w);
            if (!ovals_affine(*sw)) {
                auto line = oval_free_line(*sw);
                if (!line) continue;
                bool found = false;
                for (int k = 0; k < 4 && !found; ++k) {
                    try {
                        auto moved = std::make_shared<Sweep>(f, send_to_infinity(w, *line, rng));
                        if (ovals_affine(*moved)) {
                            sw = moved;
                            found = true;
                        }
                    } catch (const GenericPositionError&) {
                    }
                }
                if (!found) continue;
            }
        } catch (const GenericPositionError&) {
            continue;
        }
        CurveTopology t;
        t.degree = d;
        t.genus = (d - 1) * (d - 2) / 2;
        const int l = sw->component_count();
        t.components.resize(static_cast<size_t>(l));
        t.parent.assign(static_cast<size_t>(l), -1);
        std::vector<int> by_order(static_cast<size_t>(l));
        for (int c = 0; c < l; ++c) by_order[static_cast<size_t>(sw->ordered_index(c))] = c;

        for (int i = 0; i < l; ++i) {
            const int c = by_order[static_cast<size_t>(i)];
            Component& comp = t.components[static_cast<size_t>(i)];
            const int segs0 = static_cast<int>(branches_in(*sw, c, 0).size());
            comp.kind = segs0 % 2 == 1 ? ComponentKind::pseudo_line : ComponentKind::oval;
            if (comp.kind == ComponentKind::pseudo_line) {
                const int b = branches_in(*sw, c, 0).front();
                const auto& r = sw->branch_root(0, b);
                comp.witness = to_original(*sw, sw->sample(0), simplest_between(r.low, r.high));
            } else {
                int first = sw->slice_count();
                for (const auto& st : sw->cycle(c)) first = std::min(first, st.segment.slice);
                const int b = branches_in(*sw, c, first).front();
                comp.witness =
                    *simplify_inside(f, to_original(*sw, sw->sample(first), between_branches(*sw, sw->sample(first), b)), {});
            }
            comp.trace = trace_of(*sw, c);
        }
        // Nesting: A lies inside B iff an upward vertical ray from A crosses B an odd number of times.
        std::vector<std::vector<bool>> inside(static_cast<size_t>(l), std::vector<bool>(static_cast<size_t>(l), false));
        for (int a = 0; a < l; ++a) {
            if (t.components[static_cast<size_t>(a)].kind != ComponentKind::oval) continue;
            const Segment s = sw->cycle(by_order[static_cast<size_t>(a)]).front().segment;
            for (int b = 0; b < l; ++b) {
                if (a == b || t.components[static_cast<size_t>(b)].kind != ComponentKind::oval) continue;
                int above = 0;
                for (int br : branches_in(*sw, by_order[static_cast<size_t>(b)], s.slice)) above += br > s.branch;
                inside[static_cast<size_t>(a)][static_cast<size_t>(b)] = above % 2 == 1;
            }
        }
        for (int a = 0; a < l; ++a) {
            int best = -1, best_depth = -1;
            for (int b = 0; b < l; ++b) {
                if (!inside[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
                int depth = static_cast<int>(std::count(inside[static_cast<size_t>(b)].begin(), inside[static_cast<size_t>(b)].end(), true));
                if (depth > best_depth) {
                    best = b;
                    best_depth = depth;
                }
            }
            t.parent[static_cast<size_t>(a)] = best;
        }
        t.sweep = std::move(sw);
        return t;
    }
    throw GenericPositionError("topology sweep");
}

std::vector<ProjectivePoint> interior_points(const CurveTopology& t, int oval, int limit) {
    if (t.components.at(static_cast<size_t>(oval)).kind != ComponentKind::oval) throw DomainError("not an oval");
    std::vector<ProjectivePoint> out{t.components[static_cast<size_t>(oval)].witness};
    const Sweep& sw = *t.sweep;
    const int c = t.sweep_index(oval);
    auto add = [&](const ProjectivePoint& raw) {
        if (auto p = simplify_inside(sw.curve(), raw, out)) out.push_back(*p);
    };
    for (int s = 0; s < sw.slice_count() && static_cast<int>(out.size()) < limit; ++s) {
        auto bs = branches_in(sw, c, s);
        if (bs.empty()) continue;
        std::vector<Rational> xs{sw.sample(s)};
        for (const auto& x : slice_points(sw, s, 3)) xs.push_back(x);
        for (const auto& x : xs) {
            for (size_t i = 0; i + 1 < bs.size(); i += 2) {
                if (static_cast<int>(out.size()) >= limit) break;
                add(to_original(sw, x, between_branches(sw, x, bs[i])));
            }
        }
    }
    return out;
}

ProjectivePoint interior_witness(const CurveTopology& t, int oval) {
    if (t.components.at(static_cast<size_t>(oval)).kind != ComponentKind::oval) throw DomainError("not an oval");
    return t.components[static_cast<size_t>(oval)].witness;
}

MLabel classify_m_label(const CurveTopology& t) {
    const int l = t.count();
    if (l > t.genus + 1) throw DomainError("Harnack violation");
    return {t.genus + 1 - l};
}

}  // namespace trp
