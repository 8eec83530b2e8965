#include "trp/unipoly.hpp"

#include <cstdint>
#include <sstream>

#include "trp/errors.hpp"

namespace trp {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval UniPoly::operator()(const Interval& x) const {
    if (coeffs_.empty()) return Interval(Rational(0));
    if (x.lo == x.hi) return Interval((*this)(x.lo));
    // Expand around the midpoint: tighter than plain Horner on wide intervals.
    Rational m = x.mid();
    Interval dx{x.lo - m, x.hi - m};
    std::vector<Rational> shifted = coeffs_;
    const size_t n = shifted.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = n - 1; j > i; --j) shifted[j - 1] += m * shifted[j];
    Interval acc(shifted.back());
    for (size_t i = n - 1; i-- > 0;) acc = acc * dx + Interval(shifted[i]);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (coeffs_.empty()) return {};
    Rational lc = coeffs_.back();
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c /= lc;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::reflect() const {
    std::vector<Rational> v = coeffs_;
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    *this = *this * o;
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const Rational& lc = b.leading();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        const Rational& ri = r[static_cast<size_t>(i)];
        if (ri == 0) continue;
        Rational f = ri / lc;
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto g = detail::gcd(detail::to_primitive_zpoly(a), detail::to_primitive_zpoly(b));
    return detail::from_zpoly(g).monic();
}

UniPoly pow(const UniPoly& p, int e) {
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
    UniPoly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + UniPoly::constant(*it);
    return acc;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const size_t n = xs.size();
    if (ys.size() != n) throw DomainError("interpolate: size mismatch");
    std::vector<Rational> dd = ys;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            Rational den = xs[i] - xs[i - level];
            if (den == 0) throw DomainError("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / den;
        }
    UniPoly acc;
    for (size_t i = n; i-- > 0;) acc = acc * UniPoly::linear_root(xs[i]) + UniPoly::constant(dd[i]);
    return acc;
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (i == 0 || a != 1) os << to_string(a);
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

namespace detail {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly to_primitive_zpoly(const UniPoly& p) {
    if (p.is_zero()) return {};
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        const Rational& c = p.coeffs()[i];
        z[i] = c.get_num() * (l / c.get_den());
    }
    return primitive(std::move(z));
}

UniPoly from_zpoly(const ZPoly& p) {
    std::vector<Rational> v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = Rational(p[i]);
    return UniPoly(std::move(v));
}

Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive(ZPoly p) {
    trim(p);
    if (p.empty()) return p;
    Integer g = content(p);
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

ZPoly derivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
    return d;
}

PseudoRemainder prem(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw DomainError("pseudo-remainder by zero");
    ZPoly r = a;
    trim(r);
    const Integer& lb = b.back();
    const size_t db = b.size() - 1;
    int steps = 0;
    Integer t;
    while (!r.empty() && r.size() - 1 >= db) {
        const size_t shift = r.size() - 1 - db;
        Integer lr = r.back();
        for (auto& c : r) c *= lb;
        for (size_t j = 0; j <= db; ++j) {
            t = lr * b[j];
            r[shift + j] -= t;
        }
        ++steps;
        trim(r);
    }
    int s = (sgn(lb) < 0 && (steps % 2 == 1)) ? -1 : 1;
    return {std::move(r), s};
}

int sign_at(const ZPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    // sum p_i num^i den^(n-i); den > 0 so the sign is that of p(x).
    Integer acc = p.back();
    Integer dpow = 1;
    for (size_t i = p.size() - 1; i-- > 0;) {
        dpow *= den;
        acc = acc * num + p[i] * dpow;
    }
    return sgn(acc);
}

int sign_at_infinity(const ZPoly& p, int dir) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

namespace {

using Residues = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a, m))
        if (e & 1) r = mul_mod(r, a, m);
    return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    std::uint64_t d = n - 1;
    int s = 0;
    for (; d % 2 == 0; d /= 2) ++s;
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (a % n == 0) return true;
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

// Primes below 2^62, descending.
std::uint64_t prime_below(std::uint64_t n) {
    do n -= 2;
    while (!is_prime(n));
    return n;
}

// The largest primes below 2^62, in descending order; the first few are computed once.
class PrimeStream {
public:
    std::uint64_t next() {
        static const std::vector<std::uint64_t> cached = [] {
            std::vector<std::uint64_t> v;
            std::uint64_t n = (std::uint64_t{1} << 62) + 1;
            for (int i = 0; i < 64; ++i) v.push_back(n = prime_below(n));
            return v;
        }();
        current_ = index_ < cached.size() ? cached[index_] : prime_below(current_);
        ++index_;
        return current_;
    }

private:
    size_t index_ = 0;
    std::uint64_t current_ = 0;
};

Residues reduce(const ZPoly& p, std::uint64_t m) {
    Residues out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = mpz_fdiv_ui(p[i].get_mpz_t(), m);
    return out;
}

void trim_residues(Residues& r) {
    while (!r.empty() && r.back() == 0) r.pop_back();
}

// Monic gcd over the field with m elements (m prime).
Residues gcd_mod(Residues a, Residues b, std::uint64_t m) {
    trim_residues(a);
    trim_residues(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        const std::uint64_t inv = pow_mod(b.back(), m - 2, m);
        while (a.size() >= b.size()) {
            const std::uint64_t q = mul_mod(a.back(), inv, m);
            const size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + m - mul_mod(q, b[i], m)) % m;
            trim_residues(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    const std::uint64_t inv = pow_mod(a.back(), m - 2, m);
    for (auto& c : a) c = mul_mod(c, inv, m);
    return a;
}

// True when g divides a over the integers; g is primitive.
bool divides(const ZPoly& g, ZPoly a) {
    const Integer& lc = g.back();
    Integer q, r;
    while (a.size() >= g.size()) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.back().get_mpz_t(), lc.get_mpz_t());
        if (r != 0) return false;
        const size_t shift = a.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) a[i + shift] -= q * g[i];
        trim(a);
    }
    return a.empty();
}

}  // namespace

// Small-prime modular gcd.  Images modulo primes dividing neither leading coefficient have degree
// at least that of the true gcd; the images of least degree are combined by Chinese remaindering,
// normalized to leading coefficient gcd(lc a, lc b), and the candidate is accepted once it divides
// both inputs.
ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = primitive(a0), b = primitive(b0);
    if (a.empty() || b.empty()) {
        ZPoly r = a.empty() ? b : a;
        if (!r.empty() && r.back() < 0)
            for (auto& c : r) c = -c;
        return r;
    }
    if (a.size() == 1 || b.size() == 1) return ZPoly{Integer(1)};
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    PrimeStream primes;
    ZPoly h;
    Integer modulus;
    size_t degree = std::min(a.size(), b.size());
    for (;;) {
        const std::uint64_t m = primes.next();
        if (mpz_fdiv_ui(a.back().get_mpz_t(), m) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), m) == 0) continue;
        Residues g = gcd_mod(reduce(a, m), reduce(b, m), m);
        if (g.size() == 1) return ZPoly{Integer(1)};
        if (g.size() > degree) continue;
        const std::uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), m);
        for (auto& c : g) c = mul_mod(c, gm, m);
        if (g.size() < degree || h.empty()) {
            degree = g.size();
            h.assign(g.size(), 0);
            for (size_t i = 0; i < g.size(); ++i) h[i] = Integer(static_cast<unsigned long>(g[i]));
            modulus = Integer(static_cast<unsigned long>(m));
            continue;
        }
        // Combine h (mod modulus) with g (mod m) in the symmetric range.
        const std::uint64_t inv = pow_mod(mpz_fdiv_ui(modulus.get_mpz_t(), m), m - 2, m);
        const Integer next = modulus * Integer(static_cast<unsigned long>(m));
        const Integer half = next / 2;
        bool stable = true;
        for (size_t i = 0; i < h.size(); ++i) {
            const std::uint64_t hi = mpz_fdiv_ui(h[i].get_mpz_t(), m);
            const std::uint64_t t = mul_mod((g[i] + m - hi) % m, inv, m);
            if (t == 0) continue;
            Integer v = h[i] + modulus * Integer(static_cast<unsigned long>(t));
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), next.get_mpz_t());
            if (v > half) v -= next;
            if (v != h[i]) stable = false;
            h[i] = std::move(v);
        }
        modulus = next;
        if (!stable) continue;
        ZPoly cand = primitive(h);
        if (cand.back() < 0)
            for (auto& c : cand) c = -c;
        if (divides(cand, a) && divides(cand, b)) return cand;
    }
}

}  // namespace detail

}  // namespace trp
