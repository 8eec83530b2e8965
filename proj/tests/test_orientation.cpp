#include <doctest.h>

#include <random>

#include "trp/catalog.hpp"
#include "trp/errors.hpp"
#include "trp/orientation.hpp"

using namespace trp;

namespace {

const TernaryForm& fixture(const std::string& name) { return catalog_entry(name).form; }

ProjectivePoint pt(const Rational& x, const Rational& y) { return {x, y, Rational(1)}; }

struct Certified {
    Pencil pencil;
    TotalRealityCertificate cert;
};

Certified certified(const TernaryForm& c, const std::vector<ProjectivePoint>& pts, int k) {
    Certified out{build_pencil(pts, k), {}};
    out.cert = certify_totally_real(c, out.pencil);
    REQUIRE(out.cert.totally_real);
    return out;
}

std::vector<int> flipped(std::vector<int> v) {
    for (int& x : v) x = -x;
    return v;
}

int count(const std::vector<std::optional<OvalSign>>& s, OvalSign which) {
    int n = 0;
    for (const auto& x : s) n += x && *x == which;
    return n;
}

}  // namespace

TEST_CASE("circle: one flag, reversed by swapping the generators") {
    const auto& c = fixture("circle");
    const auto t = compute_topology(c);
    auto a = certified(c, {pt(0, 0)}, 1);
    const auto o = induced_orientation(c, t, a.pencil, a.cert);
    REQUIRE(o.flags.size() == 1);
    CHECK((o.flags[0] == 1 || o.flags[0] == -1));
    Pencil swapped = a.pencil;
    std::swap(swapped.f, swapped.g);
    const auto cs = certify_totally_real(c, swapped);
    REQUIRE(cs.totally_real);
    CHECK(induced_orientation(c, t, swapped, cs).flags == flipped(o.flags));
    const Pencil ext = build_pencil({pt(2, 0)}, 1);
    CHECK_THROWS_AS(induced_orientation(c, t, ext, certify_totally_real(c, ext)), DomainError);
}

TEST_CASE("separating quintic: orientations agree up to a global flip, signs 3 negative and 1 positive") {
    const auto& c = fixture("separating_quintic");
    const auto t = compute_topology(c);
    auto a = certified(c, {pt(2, 0), pt(0, -2), pt(0, 2), pt(-2, 0)}, 2);
    auto b = certified(c, {pt(2, 0), pt(0, -2), pt(0, 2), pt(Rational(-3, 2), Rational(-1, 2))}, 2);
    const auto oa = induced_orientation(c, t, a.pencil, a.cert);
    const auto ob = induced_orientation(c, t, b.pencil, b.cert);
    REQUIRE(oa.flags.size() == 5);
    CHECK((ob.flags == oa.flags || ob.flags == flipped(oa.flags)));
    const auto sa = oval_signs(t, oa);
    CHECK_FALSE(sa[static_cast<size_t>(t.pseudo_line())].has_value());
    CHECK(count(sa, OvalSign::negative) == 3);
    CHECK(count(sa, OvalSign::positive) == 1);
    CHECK(oval_signs(t, ob) == sa);
    CHECK(oval_signs(t, {flipped(oa.flags)}) == sa);

    // The entry 2 of the degree partition sits on the pseudo-line or the positive oval.
    for (const auto* p : {&a, &b}) {
        const auto dp = degree_partition(c, t, p->pencil, p->cert);
        REQUIRE(dp.size() == 5);
        for (int i = 0; i < 5; ++i) {
            const auto& s = sa[static_cast<size_t>(i)];
            const bool special = !s || *s == OvalSign::positive;
            if (!special) CHECK(dp[static_cast<size_t>(i)] % 2 == 1);
        }
    }
    const auto dp = degree_partition(c, t, a.pencil, a.cert);
    int twos = 0;
    for (int i = 0; i < 5; ++i)
        if (dp[static_cast<size_t>(i)] == 2) {
            ++twos;
            const auto& s = sa[static_cast<size_t>(i)];
            CHECK((!s || *s == OvalSign::positive));
        }
    CHECK(twos == 1);
}

TEST_CASE("oval signs survive a projective change of coordinates") {
    const auto& c = fixture("separating_quintic");
    const Pencil p = build_pencil({pt(2, 0), pt(0, -2), pt(0, 2), pt(-2, 0)}, 2);
    std::mt19937_64 rng(5);
    const auto m = ProjectiveMap::random(rng);
    const TernaryForm cm = m.push(c);
    Pencil pm{2, m.push(p.f), m.push(p.g), {}};
    for (const auto& b : p.base_points) pm.base_points.push_back(m(b));
    const auto t = compute_topology(cm);
    const auto cert = certify_totally_real(cm, pm);
    REQUIRE(cert.totally_real);
    const auto s = oval_signs(t, induced_orientation(cm, t, pm, cert));
    CHECK(count(s, OvalSign::negative) == 3);
    CHECK(count(s, OvalSign::positive) == 1);
}

TEST_CASE("cubic with one oval: the sign is the same for two pencils") {
    const auto& c = fixture("cubic_oval");
    const auto t = compute_topology(c);
    REQUIRE(t.count() == 2);
    auto a = certified(c, {pt(Rational(-1, 2), 0)}, 1);
    auto b = certified(c, {pt(Rational(-1, 2), Rational(1, 4))}, 1);
    const auto sa = oval_signs(t, induced_orientation(c, t, a.pencil, a.cert));
    const auto sb = oval_signs(t, induced_orientation(c, t, b.pencil, b.cert));
    CHECK(sa == sb);
    CHECK(count(sa, OvalSign::negative) + count(sa, OvalSign::positive) == 1);
}

TEST_CASE("nested ovals are refused") {
    const TernaryForm X = TernaryForm::linear(1, 0, 0), Y = TernaryForm::linear(0, 1, 0), Z = TernaryForm::linear(0, 0, 1);
    const TernaryForm c = (X + Y + Z * Rational(10)) * (X * X + Y * Y * Rational(2) - Z * Z) *
                              (X * X + Y * Y - Z * Z * Rational(9)) +
                          pow(Z, 5) * Rational(1, 100);
    const auto t = compute_topology(c);
    REQUIRE(t.has_nesting());
    ComponentOrientation o{std::vector<int>(static_cast<size_t>(t.count()), 1)};
    CHECK_THROWS_WITH_AS(oval_signs(t, o), "sign convention for nested ovals unspecified", DomainError);
    CHECK(non_convex_position(t).position == Position::inapplicable);
}

TEST_CASE("non_convex_position and classify_quintic") {
    const auto& sep = fixture("separating_quintic");
    const auto t = compute_topology(sep);
    const auto v = classify_quintic(sep);
    CHECK(v.position == Position::non_convex);
    CHECK(v.conclusion == Conclusion::separating);
    REQUIRE(v.triangle.has_value());
    const auto& tw = *v.triangle;
    static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (size_t i = 0; i < 3; ++i) {
        const auto& p = tw.points[static_cast<size_t>(pairs[i][0])];
        const auto& q = tw.points[static_cast<size_t>(pairs[i][1])];
        CHECK(tw.lines[i](p) == 0);
        CHECK(tw.lines[i](q) == 0);
        // The selected arc avoids the pseudo-line.
        for (auto& x : line_intersections(sep, p, q)) {
            const int side = x.t.compare(Rational(0)) > 0 ? 1 : -1;
            if (side == tw.arcs[i]) CHECK(t.component_of(x) != t.pseudo_line());
        }
    }
    CHECK(tw.inner != t.pseudo_line());

    const auto cv = classify_quintic(fixture("convex_quintic"));
    CHECK(cv.position == Position::convex);
    CHECK(cv.conclusion == Conclusion::non_separating);
    CHECK_FALSE(cv.triangle.has_value());

    const auto three = classify_quintic(fixture("three_component_quintic"));
    CHECK(three.position == Position::inapplicable);
    CHECK(three.conclusion == Conclusion::unknown);

    CHECK(non_convex_position(compute_topology(fixture("harnack_quartic"))).position == Position::inapplicable);
    CHECK_THROWS_AS(classify_quintic(fixture("harnack_quartic")), DomainError);
    CHECK(to_string(Position::non_convex) == "non-convex");
    CHECK(to_string(Conclusion::non_separating) == "non-separating");
}

TEST_CASE("separating verdict matches pencil search on five-component quintics") {
    for (const auto& e : catalog()) {
        if (e.form.degree() != 5) continue;
        const auto t = compute_topology(e.form);
        if (t.count() != 5) continue;
        const auto v = non_convex_position(t);
        const auto r = search_totally_real_pencil(e.form, t, {});
        CHECK_MESSAGE((v.conclusion == Conclusion::separating) == !r.exhausted(), e.name);
    }
}
