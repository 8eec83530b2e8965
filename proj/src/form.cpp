#include "trp/form.hpp"

#include <sstream>

#include "trp/errors.hpp"

namespace trp {

ProjectivePoint::ProjectivePoint(Rational x, Rational y, Rational z) : v{std::move(x), std::move(y), std::move(z)} {
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw DomainError("projective point with all coordinates zero");
}

ProjectivePoint ProjectivePoint::normalized() const {
    for (int i = 2; i >= 0; --i) {
        const Rational& s = v[static_cast<size_t>(i)];
        if (s != 0) {
            ProjectivePoint p = *this;
            for (auto& c : p.v) c /= s;
            return p;
        }
    }
    throw DomainError("projective point with all coordinates zero");
}

bool ProjectivePoint::same_point(const ProjectivePoint& o) const {
    // Proportional iff all 2x2 minors vanish.
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            if (v[i] * o.v[j] != v[j] * o.v[i]) return false;
    return true;
}

std::string to_string(const ProjectivePoint& p) {
    return "(" + to_string(p.v[0]) + " : " + to_string(p.v[1]) + " : " + to_string(p.v[2]) + ")";
}

TernaryForm::TernaryForm(int degree, std::map<Exponent, Rational> coeffs) : degree_(degree) {
    if (degree < 0) throw DomainError("negative form degree");
    for (auto& [e, c] : coeffs) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree)
            throw DomainError("exponent triple does not match the form degree");
        if (c != 0) coeffs_.emplace(e, c);
    }
}

TernaryForm TernaryForm::zero(int degree) { return TernaryForm(degree, {}); }

TernaryForm TernaryForm::linear(const Rational& a, const Rational& b, const Rational& c) {
    return TernaryForm(1, {{{1, 0, 0}, a}, {{0, 1, 0}, b}, {{0, 0, 1}, c}});
}

Rational TernaryForm::coeff(const Exponent& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

namespace {

std::vector<Rational> powers(const Rational& v, int n) {
    std::vector<Rational> p(static_cast<size_t>(n) + 1);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) p[static_cast<size_t>(i)] = p[static_cast<size_t>(i - 1)] * v;
    return p;
}

}  // namespace

Rational TernaryForm::evaluate(const Rational& x, const Rational& y, const Rational& z) const {
    auto px = powers(x, degree_), py = powers(y, degree_), pz = powers(z, degree_);
    Rational acc = 0;
    for (const auto& [e, c] : coeffs_)
        acc += c * px[static_cast<size_t>(e[0])] * py[static_cast<size_t>(e[1])] * pz[static_cast<size_t>(e[2])];
    return acc;
}

Rational TernaryForm::operator()(const ProjectivePoint& p) const { return evaluate(p[0], p[1], p[2]); }

TernaryForm TernaryForm::partial(int var) const {
    if (degree_ == 0) return zero(0);
    std::map<Exponent, Rational> out;
    for (const auto& [e, c] : coeffs_) {
        if (e[static_cast<size_t>(var)] == 0) continue;
        Exponent f = e;
        f[static_cast<size_t>(var)] -= 1;
        out[f] += c * e[static_cast<size_t>(var)];
    }
    return TernaryForm(degree_ - 1, std::move(out));
}

BiPoly TernaryForm::dehomogenize() const {
    std::vector<std::vector<Rational>> grid(static_cast<size_t>(degree_) + 1,
                                            std::vector<Rational>(static_cast<size_t>(degree_) + 1));
    for (const auto& [e, c] : coeffs_) grid[static_cast<size_t>(e[1])][static_cast<size_t>(e[0])] += c;
    std::vector<UniPoly> cs;
    for (auto& row : grid) cs.emplace_back(std::move(row));
    return BiPoly(std::move(cs));
}

UniPoly TernaryForm::restrict_to_line(const ProjectivePoint& p, const ProjectivePoint& q) const {
    std::vector<Rational> ts, vs;
    for (int i = 0; i <= degree_; ++i) {
        Rational t = i;
        ts.push_back(t);
        vs.push_back(evaluate(p[0] + t * q[0], p[1] + t * q[1], p[2] + t * q[2]));
    }
    return interpolate(ts, vs);
}

TernaryForm TernaryForm::pullback(const RationalMatrix& a) const {
    std::array<TernaryForm, 3> rows;
    for (size_t i = 0; i < 3; ++i) rows[i] = linear(a(i, 0), a(i, 1), a(i, 2));
    std::array<std::vector<TernaryForm>, 3> pw;
    for (size_t i = 0; i < 3; ++i) {
        pw[i].push_back(TernaryForm(0, {{{0, 0, 0}, Rational(1)}}));
        for (int k = 1; k <= degree_; ++k) pw[i].push_back(pw[i].back() * rows[i]);
    }
    TernaryForm acc = zero(degree_);
    for (const auto& [e, c] : coeffs_)
        acc = acc + pw[0][static_cast<size_t>(e[0])] * pw[1][static_cast<size_t>(e[1])] * pw[2][static_cast<size_t>(e[2])] * c;
    return acc;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
    if (a.degree() != b.degree()) throw DomainError("sum of forms of different degrees");
    std::map<Exponent, Rational> out = a.coeffs();
    for (const auto& [e, c] : b.coeffs()) out[e] += c;
    return TernaryForm(a.degree(), std::move(out));
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + b * Rational(-1); }

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    std::map<Exponent, Rational> out;
    for (const auto& [e, c] : a.coeffs())
        for (const auto& [f, d] : b.coeffs()) out[{e[0] + f[0], e[1] + f[1], e[2] + f[2]}] += c * d;
    return TernaryForm(a.degree() + b.degree(), std::move(out));
}

TernaryForm operator*(const TernaryForm& a, const Rational& c) {
    std::map<Exponent, Rational> out;
    for (const auto& [e, v] : a.coeffs()) out[e] = v * c;
    return TernaryForm(a.degree(), std::move(out));
}

TernaryForm pow(const TernaryForm& a, int e) {
    TernaryForm r(0, {{{0, 0, 0}, Rational(1)}});
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

std::string to_string(const TernaryForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* names = "xyz";
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = (a == 1) && (e[0] + e[1] + e[2] > 0);
        if (!unit) os << to_string(a);
        bool need_star = !unit;
        for (size_t i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

std::vector<Exponent> monomials(int k) {
    std::vector<Exponent> out;
    for (int a = k; a >= 0; --a)
        for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
    return out;
}

std::vector<TernaryForm> interpolation_space(const std::vector<ProjectivePoint>& points, int k) {
    auto mons = monomials(k);
    RationalMatrix m(points.size(), mons.size());
    for (size_t r = 0; r < points.size(); ++r) {
        auto px = powers(points[r][0], k), py = powers(points[r][1], k), pz = powers(points[r][2], k);
        for (size_t c = 0; c < mons.size(); ++c)
            m(r, c) = px[static_cast<size_t>(mons[c][0])] * py[static_cast<size_t>(mons[c][1])] *
                      pz[static_cast<size_t>(mons[c][2])];
    }
    std::vector<TernaryForm> basis;
    if (points.empty()) {
        for (const auto& e : mons) basis.emplace_back(k, std::map<Exponent, Rational>{{e, Rational(1)}});
        return basis;
    }
    for (const auto& v : kernel(m)) {
        std::map<Exponent, Rational> cs;
        for (size_t c = 0; c < mons.size(); ++c) cs[mons[c]] = v[c];
        basis.emplace_back(k, std::move(cs));
    }
    return basis;
}

ProjectiveMap::ProjectiveMap(const RationalMatrix& a) : a_(a), inv_(trp::inverse(a)) {}

ProjectiveMap ProjectiveMap::random(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        RationalMatrix a(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) a(i, j) = d(rng);
        if (determinant(a) != 0) return ProjectiveMap(a);
    }
}

ProjectiveMap ProjectiveMap::inverse() const {
    ProjectiveMap m;
    m.a_ = inv_;
    m.inv_ = a_;
    return m;
}

ProjectivePoint ProjectiveMap::operator()(const ProjectivePoint& p) const {
    std::array<Rational, 3> out;
    for (size_t i = 0; i < 3; ++i) out[i] = a_(i, 0) * p[0] + a_(i, 1) * p[1] + a_(i, 2) * p[2];
    return ProjectivePoint(out[0], out[1], out[2]);
}

TernaryForm ProjectiveMap::push(const TernaryForm& f) const { return f.pullback(inv_); }

}  // namespace trp
