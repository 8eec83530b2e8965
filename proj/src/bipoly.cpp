#include "trp/bipoly.hpp"

#include <algorithm>
#include <cstdlib>

#include "trp/errors.hpp"
#include "trp/matrix.hpp"

namespace trp {

BiPoly::BiPoly(std::vector<UniPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int BiPoly::outer_degree() const {
    int d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

const UniPoly& BiPoly::coeff(int i) const {
    static const UniPoly zero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

const UniPoly& BiPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

UniPoly BiPoly::at_outer(const Rational& x0) const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i](x0);
    return UniPoly(std::move(v));
}

UniPoly BiPoly::at_main(const Rational& y0) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y0 + *it;
    return acc;
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const { return at_outer(x)(y); }

Interval BiPoly::operator()(const Interval& x, const Interval& y) const {
    Interval acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + (*it)(x);
    return acc;
}

BiPoly BiPoly::derivative_main() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<UniPoly> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return BiPoly(std::move(d));
}

BiPoly BiPoly::derivative_outer() const {
    std::vector<UniPoly> d(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) d[i] = coeffs_[i].derivative();
    return BiPoly(std::move(d));
}

BiPoly BiPoly::transposed() const {
    const int dx = outer_degree();
    if (dx < 0) return {};
    std::vector<std::vector<Rational>> grid(static_cast<size_t>(dx) + 1, std::vector<Rational>(coeffs_.size()));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (int k = 0; k <= coeffs_[i].degree(); ++k) grid[static_cast<size_t>(k)][i] = coeffs_[i].coeff(k);
    std::vector<UniPoly> out;
    out.reserve(grid.size());
    for (auto& row : grid) out.emplace_back(std::move(row));
    return BiPoly(std::move(out));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<UniPoly> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return BiPoly(std::move(v));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + b * Rational(-1); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<UniPoly> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return BiPoly(std::move(v));
}

BiPoly operator*(const BiPoly& a, const Rational& c) {
    std::vector<UniPoly> v = a.coeffs();
    for (auto& p : v) p *= c;
    return BiPoly(std::move(v));
}

namespace {

// Integer rescaling: returns (L, coefficient grids) with L * p having integer coefficients.
struct IntegerBi {
    Integer scale;
    std::vector<detail::ZPoly> coeffs;  // ascending in y, each ascending in x
};

IntegerBi to_integer(const BiPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs())
        for (const auto& v : c.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntegerBi out{l, {}};
    out.coeffs.resize(p.coeffs().size());
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& c = p.coeffs()[i].coeffs();
        out.coeffs[i].resize(c.size());
        for (size_t k = 0; k < c.size(); ++k) out.coeffs[i][k] = c[k].get_num() * (l / c[k].get_den());
    }
    return out;
}

Integer eval_z(const detail::ZPoly& p, long t) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

long node(size_t i) {
    // 0, 1, -1, 2, -2, ...
    long k = static_cast<long>((i + 1) / 2);
    return (i % 2 == 1) ? k : -k;
}

// Determinants of the subresultant submatrices of M_j at one specialization; entry [i] is the
// coefficient of y^i of S_j.
std::vector<Integer> subresultant_at(const std::vector<Integer>& p, const std::vector<Integer>& q, int j) {
    const int m = static_cast<int>(p.size()) - 1;
    const int n = static_cast<int>(q.size()) - 1;
    const int rows = m + n - 2 * j;
    const int cols = m + n - j;
    detail::IntMatrix full(static_cast<size_t>(rows), std::vector<Integer>(static_cast<size_t>(cols)));
    int r = 0;
    for (int s = 0; s < n - j; ++s, ++r) {
        const int shift = n - j - 1 - s;  // row represents y^shift * p
        for (int e = 0; e <= m; ++e) full[static_cast<size_t>(r)][static_cast<size_t>(cols - 1 - (e + shift))] = p[static_cast<size_t>(e)];
    }
    for (int s = 0; s < m - j; ++s, ++r) {
        const int shift = m - j - 1 - s;
        for (int e = 0; e <= n; ++e) full[static_cast<size_t>(r)][static_cast<size_t>(cols - 1 - (e + shift))] = q[static_cast<size_t>(e)];
    }
    std::vector<Integer> out(static_cast<size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) {
        detail::IntMatrix sq(static_cast<size_t>(rows), std::vector<Integer>(static_cast<size_t>(rows)));
        const int extra = cols - 1 - i;
        for (int a = 0; a < rows; ++a) {
            for (int b = 0; b < rows - 1; ++b) sq[static_cast<size_t>(a)][static_cast<size_t>(b)] = full[static_cast<size_t>(a)][static_cast<size_t>(b)];
            sq[static_cast<size_t>(a)][static_cast<size_t>(rows - 1)] = full[static_cast<size_t>(a)][static_cast<size_t>(extra)];
        }
        out[static_cast<size_t>(i)] = detail::bareiss_determinant(std::move(sq));
    }
    return out;
}

}  // namespace

std::vector<UniPoly> subresultant(const BiPoly& p, const BiPoly& q, int j) {
    if (p.is_zero() || q.is_zero()) throw DomainError("zero polynomial has no resultant");
    const int m = p.degree(), n = q.degree();
    if (j < 0 || j > std::min(m, n)) throw DomainError("subresultant index out of range");
    if (m == 0 && n == 0) return {UniPoly::constant(1)};
    if (j == std::min(m, n) && j > 0) {
        if (m == n) throw DomainError("subresultant index must be below one of the degrees");
        // S_n(p, q) = lc(q)^(m-n-1) q when n < m, and symmetrically.
        const BiPoly& low = n < m ? q : p;
        UniPoly scale = pow(low.leading(), std::abs(m - n) - 1);
        std::vector<UniPoly> out;
        for (const auto& c : low.coeffs()) out.push_back(c * scale);
        return out;
    }
    IntegerBi ip = to_integer(p), iq = to_integer(q);
    const int bound = (n - j) * std::max(p.outer_degree(), 0) + (m - j) * std::max(q.outer_degree(), 0);
    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> ys(static_cast<size_t>(j) + 1);
    for (size_t k = 0; k <= static_cast<size_t>(bound); ++k) {
        long t = node(k);
        std::vector<Integer> pv(ip.coeffs.size()), qv(iq.coeffs.size());
        for (size_t i = 0; i < pv.size(); ++i) pv[i] = eval_z(ip.coeffs[i], t);
        for (size_t i = 0; i < qv.size(); ++i) qv[i] = eval_z(iq.coeffs[i], t);
        auto dets = subresultant_at(pv, qv, j);
        xs.emplace_back(t);
        for (int i = 0; i <= j; ++i) ys[static_cast<size_t>(i)].emplace_back(dets[static_cast<size_t>(i)]);
    }
    // Undo the integer rescaling: S_j(Lp p, Lq q) = Lp^(n-j) Lq^(m-j) S_j(p, q).
    Rational undo = 1;
    for (int k = 0; k < n - j; ++k) undo *= Rational(ip.scale);
    for (int k = 0; k < m - j; ++k) undo *= Rational(iq.scale);
    std::vector<UniPoly> out;
    out.reserve(static_cast<size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) out.push_back(interpolate(xs, ys[static_cast<size_t>(i)]) * (1 / undo));
    return out;
}

UniPoly resultant(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("zero polynomial has no resultant");
    if (p.degree() == 0 && q.degree() == 0) return UniPoly::constant(1);
    if (p.degree() == 0) return pow(p.coeff(0), q.degree());
    if (q.degree() == 0) return pow(q.coeff(0), p.degree());
    return subresultant(p, q, 0)[0];
}

UniPoly discriminant(const BiPoly& p) {
    const int n = p.degree();
    if (n < 1) throw DomainError("discriminant needs positive degree");
    UniPoly r = resultant(p, p.derivative_main());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return exact_div(r, p.leading());
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
    auto lift = [](const UniPoly& u) {
        std::vector<UniPoly> v;
        for (const auto& c : u.coeffs()) v.push_back(UniPoly::constant(c));
        return BiPoly(std::move(v));
    };
    return resultant(lift(p), lift(q)).coeff(0);
}

Rational discriminant(const UniPoly& p) {
    const int n = p.degree();
    if (n < 1) throw DomainError("discriminant needs positive degree");
    Rational r = resultant(p, p.derivative());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r / p.leading();
}

}  // namespace trp
