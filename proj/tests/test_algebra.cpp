#include <doctest.h>

#include <random>

#include "trp/bipoly.hpp"
#include "trp/form.hpp"
#include "trp/matrix.hpp"
#include "trp/unipoly.hpp"

#include "oracles.hpp"

using namespace trp;

namespace {

UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

// Polynomial in y with constant coefficients.
BiPoly in_y(const UniPoly& p) {
    std::vector<UniPoly> v;
    for (const auto& c : p.coeffs()) v.push_back(UniPoly::constant(c));
    return BiPoly(std::move(v));
}

UniPoly random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<long> d(-5, 5);
    std::vector<Rational> v;
    for (int i = 0; i < deg; ++i) v.emplace_back(d(rng));
    long lead = 0;
    while (lead == 0) lead = d(rng);
    v.emplace_back(lead);
    return UniPoly(std::move(v));
}

// Sylvester determinant straight from the definition, used as an oracle.
Rational sylvester_oracle(const UniPoly& p, const UniPoly& q) {
    const int m = p.degree(), n = q.degree();
    RationalMatrix s(static_cast<size_t>(m + n), static_cast<size_t>(m + n));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s(static_cast<size_t>(r), static_cast<size_t>(r + i)) = p.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s(static_cast<size_t>(n + r), static_cast<size_t>(r + i)) = q.coeff(n - i);
    return determinant(s);
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(simplest_between(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
    CHECK(simplest_between(Rational(-7, 2), Rational(-3, 1)) == Rational(-3));
    CHECK(simplest_between(Rational(-1), Rational(1)) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("resultant of linear polynomials") {
    // Res_y(y - a, y - b) = a - b with p's rows on top.
    BiPoly p = in_y(up({-3, 1})), q = in_y(up({-7, 1}));
    CHECK(resultant(p, q) == UniPoly::constant(Rational(-4)));
}

TEST_CASE("resultant of y^2 - x and y is -x") {
    BiPoly p({UniPoly({Rational(0), Rational(-1)}), UniPoly(), UniPoly::constant(1)});
    BiPoly q({UniPoly(), UniPoly::constant(1)});
    CHECK(resultant(p, q) == UniPoly({Rational(0), Rational(-1)}));
}

TEST_CASE("resultant of a polynomial with itself vanishes") {
    BiPoly p({UniPoly({Rational(1), Rational(2)}), UniPoly({Rational(0), Rational(1)}), UniPoly::constant(3)});
    CHECK(resultant(p, p).is_zero());
}

TEST_CASE("zero polynomial has no resultant") {
    CHECK_THROWS_WITH(resultant(BiPoly(), in_y(up({1, 1}))), "zero polynomial has no resultant");
}

TEST_CASE("resultant matches the Sylvester determinant oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        UniPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 4));
        UniPoly q = random_poly(rng, 1 + static_cast<int>(rng() % 4));
        CHECK(resultant(p, q) == sylvester_oracle(p, q));
    }
}

TEST_CASE("resultant is multiplicative") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        UniPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 3));
        UniPoly q = random_poly(rng, 1 + static_cast<int>(rng() % 3));
        UniPoly r = random_poly(rng, 1 + static_cast<int>(rng() % 3));
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("bivariate resultant is multiplicative") {
    std::mt19937_64 rng(9);
    auto rnd = [&](int dy) {
        std::vector<UniPoly> cs;
        for (int i = 0; i <= dy; ++i) cs.push_back(random_poly(rng, static_cast<int>(rng() % 3)));
        return BiPoly(std::move(cs));
    };
    for (int t = 0; t < 10; ++t) {
        BiPoly p = rnd(2), q = rnd(1), r = rnd(2);
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("resultant vanishes exactly when a common factor exists") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; ++t) {
        UniPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 3));
        UniPoly q = random_poly(rng, 1 + static_cast<int>(rng() % 3));
        if (t % 3 == 0) {
            UniPoly common = random_poly(rng, 1);
            p = p * common;
            q = q * common;
        }
        CHECK((resultant(p, q) == 0) == (gcd(p, q).degree() > 0));
    }
}

TEST_CASE("gcd matches the Euclidean oracle") {
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<long> big(-1000000007L, 1000000007L);
    for (int trial = 0; trial < 150; ++trial) {
        UniPoly g = random_poly(rng, static_cast<int>(rng() % 5));
        for (auto c : {2, 3}) g *= make_rational(big(rng) | 1, c);
        UniPoly a = g * random_poly(rng, static_cast<int>(rng() % 8));
        UniPoly b = g * random_poly(rng, static_cast<int>(rng() % 8));
        if (trial % 5 == 0) b = b * g;
        oracle::Poly ea(a.coeffs().begin(), a.coeffs().end()), eb(b.coeffs().begin(), b.coeffs().end());
        oracle::Poly e = oracle::euclid_gcd(ea, eb);
        UniPoly expect = UniPoly(std::vector<Rational>(e.begin(), e.end())).monic();
        CHECK(gcd(a, b) == expect);
        CHECK(gcd(b, a) == expect);
    }
    CHECK(gcd(UniPoly(), up({2, 4})) == up({1, 2}).monic());
    CHECK(gcd(up({3}), up({1, 1})) == up({1}));
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(up({-2, 0, 1})) == 8);
    CHECK(discriminant(up({1, 0, 1})) == -4);
    CHECK(discriminant(up({1, -2, 1})) == 0);
    CHECK_THROWS_AS(discriminant(up({5})), DomainError);
    // b^2 - 4ac on a random quadratic
    CHECK(discriminant(up({7, -3, 2})) == Rational(9 - 56));
}

TEST_CASE("first subresultant gives the common root") {
    // p = (y - 2)(y - x), q = (y - 2)(y + 1); S_1 is proportional to y - 2 where x != -1.
    BiPoly p({UniPoly({Rational(0), Rational(2)}), UniPoly({Rational(-2), Rational(-1)}), UniPoly::constant(1)});
    BiPoly q = in_y(up({-2, -1, 1}));
    auto s = subresultant(p, q, 1);
    REQUIRE(s.size() == 2);
    Rational x = 5;
    CHECK(-s[0](x) / s[1](x) == 2);
    CHECK(resultant(p, q).is_zero());
}

TEST_CASE("evaluate") {
    TernaryForm circle(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -1}});
    CHECK(circle(ProjectivePoint(1, 0, 1)) == 0);
    CHECK(circle(ProjectivePoint(0, 0, 1)) == -1);
    TernaryForm xyz(3, {{{1, 1, 1}, 1}});
    CHECK(xyz(ProjectivePoint(1, 1, 1)) == 1);
    CHECK_THROWS_AS(ProjectivePoint(0, 0, 0), DomainError);
}

TEST_CASE("evaluate scales by t^d") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int deg = 1; deg <= 5; ++deg) {
        std::map<Exponent, Rational> cs;
        for (const auto& e : monomials(deg)) cs[e] = d(rng);
        TernaryForm f(deg, cs);
        ProjectivePoint p(d(rng), d(rng), 1);
        for (long t : {2L, 3L}) {
            Rational s = 1;
            for (int i = 0; i < deg; ++i) s *= t;
            CHECK(f.evaluate(p[0] * t, p[1] * t, p[2] * t) == s * f(p));
        }
    }
}

TEST_CASE("forms reject mismatched exponents") {
    CHECK_THROWS_AS(TernaryForm(2, {{{1, 0, 0}, 1}}), DomainError);
}

TEST_CASE("pullback and push are inverse") {
    std::mt19937_64 rng(17);
    TernaryForm f(3, {{{3, 0, 0}, 1}, {{1, 1, 1}, -2}, {{0, 0, 3}, 5}, {{0, 2, 1}, Rational(1, 3)}});
    ProjectiveMap a = ProjectiveMap::random(rng);
    CHECK(a.inverse().push(a.push(f)) == f);
    ProjectivePoint p(1, 2, 3);
    CHECK(a.push(f)(a(p)) * 0 == 0);
    // Points of V(f) map to points of V(push f).
    TernaryForm g = TernaryForm::linear(1, -2, 1);
    ProjectivePoint on(1, 1, 1);
    CHECK(g(on) == 0);
    CHECK(a.push(g)(a(on)) == 0);
}

TEST_CASE("dehomogenize and restrict to a line") {
    TernaryForm f(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -1}});
    BiPoly b = f.dehomogenize();
    CHECK(b(Rational(3), Rational(4)) == 24);
    UniPoly r = f.restrict_to_line(ProjectivePoint(0, 0, 1), ProjectivePoint(1, 0, 0));
    CHECK(r == up({-1, 0, 1}));
}

TEST_CASE("rank examples") {
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(RationalMatrix(2, 5)) == 0);
    RationalMatrix v(4, 4);
    Rational nodes[4] = {Rational(-1), Rational(1, 2), Rational(2), Rational(7)};
    for (size_t i = 0; i < 4; ++i) {
        Rational p = 1;
        for (size_t j = 0; j < 4; ++j, p *= nodes[i]) v(i, j) = p;
    }
    CHECK(rank(v) == 4);
    // Vandermonde determinant oracle: product of node differences.
    Rational expect = 1;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) expect *= nodes[j] - nodes[i];
    CHECK(determinant(v) == expect);
}

TEST_CASE("rank of a product bounded by the factors") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int t = 0; t < 20; ++t) {
        RationalMatrix a(4, 2), b(2, 5);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 2; ++j) a(i, j) = d(rng);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 5; ++j) b(i, j) = d(rng);
        auto c = a * b;
        CHECK(rank(c) <= std::min(rank(a), rank(b)));
        for (const auto& v : kernel(c)) {
            for (size_t i = 0; i < 4; ++i) {
                Rational s = 0;
                for (size_t j = 0; j < 5; ++j) s += c(i, j) * v[j];
                CHECK(s == 0);
            }
        }
        CHECK(rank(c) + kernel(c).size() == 5);
    }
}

TEST_CASE("inverse") {
    RationalMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 1;
    CHECK(a * inverse(a) == RationalMatrix::identity(2));
    CHECK_THROWS_AS(inverse(RationalMatrix(2, 2)), DomainError);
}

TEST_CASE("interpolation space examples") {
    std::vector<ProjectivePoint> four{{1, 2, 1}, {-1, 3, 1}, {2, -1, 1}, {0, 0, 1}};
    CHECK(interpolation_space(four, 2).size() == 2);
    CHECK(interpolation_space({}, 1).size() == 3);
    for (const auto& f : interpolation_space(four, 2))
        for (const auto& p : four) CHECK(f(p) == 0);
}

TEST_CASE("five collinear points of a quintic fibre impose fewer conditions on conics") {
    // C = (x - z)(x - 2z)(x - 3z)(x - 4z)(x - 5z) + y * G meets y = 0 in five rational points,
    // the fibre over one value of the projection from a point of y = 0 off C.
    std::vector<ProjectivePoint> fibre;
    for (int i = 1; i <= 5; ++i) fibre.emplace_back(i, 0, 1);
    auto space = interpolation_space(fibre, 2);
    CHECK(space.size() >= 2);
    CHECK(space.size() == 3);
}

TEST_CASE("interpolation space dimension lower bound") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int t = 0; t < 30; ++t) {
        int k = 1 + static_cast<int>(rng() % 3);
        size_t n = rng() % 8;
        std::vector<ProjectivePoint> pts;
        while (pts.size() < n) {
            ProjectivePoint p(d(rng), d(rng), 1);
            bool fresh = true;
            for (const auto& q : pts) fresh = fresh && !q.same_point(p);
            if (fresh) pts.push_back(p);
        }
        long expect = static_cast<long>((k + 1) * (k + 2) / 2) - static_cast<long>(n);
        long dim = static_cast<long>(interpolation_space(pts, k).size());
        CHECK(dim >= expect);
        CHECK(dim >= 0);
    }
}
