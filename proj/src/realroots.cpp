#include "trp/realroots.hpp"

#include <algorithm>

#include "trp/errors.hpp"

namespace trp {

using detail::ZPoly;

SturmChain::SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("zero polynomial");
    ZPoly a = detail::to_primitive_zpoly(p);
    chain_.push_back(a);
    if (a.size() <= 1) return;
    ZPoly b = detail::primitive(detail::derivative(a));
    while (!b.empty()) {
        chain_.push_back(b);
        auto [r, s] = detail::prem(a, b);
        if (r.empty()) break;
        // -rem(a, b) has the sign of -s * r.
        r = detail::primitive(std::move(r));
        if (s > 0)
            for (auto& c : r) c = -c;
        a = std::move(b);
        b = std::move(r);
    }
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int SturmChain::variations(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(detail::sign_at(p, x));
    return count_variations(s);
}

int SturmChain::variations_at_infinity(int dir) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(detail::sign_at_infinity(p, dir));
    return count_variations(s);
}

int sign_at(const UniPoly& p, const Rational& x) { return sign(p(x)); }

UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("zero polynomial");
    if (p.is_constant()) return UniPoly::constant(1);
    return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.is_constant()) return out;
    UniPoly dp = p.derivative();
    UniPoly b = gcd(p, dp);
    UniPoly c = exact_div(p, b).monic();
    UniPoly d = exact_div(dp, b) * (1 / exact_div(p, b).leading()) - c.derivative();
    for (int i = 1; !c.is_constant(); ++i) {
        UniPoly a = gcd(c, d);
        if (!a.is_constant()) out.emplace_back(a, i);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
    }
    return out;
}

int count_real_roots(const UniPoly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw DomainError("zero polynomial");
    if (lo && hi && *lo >= *hi) return 0;
    // Every member of the chain of p vanishes at a multiple root; the square-free part avoids that.
    const UniPoly q = square_free_part(p);
    if (q.is_constant()) return 0;
    SturmChain chain(q);
    int va = lo ? chain.variations(*lo) : chain.variations_at_infinity(-1);
    int vb = hi ? chain.variations(*hi) : chain.variations_at_infinity(1);
    int n = va - vb;
    if (hi && sign_at(q, *hi) == 0) --n;
    return n;
}

void IsolatingInterval::bisect() {
    if (exact()) return;
    Rational m = (low + high) / 2;
    int sm = detail::sign_at(poly, m);
    if (sm == 0) {
        low = high = m;
        return;
    }
    if (sm == detail::sign_at(poly, low))
        low = m;
    else
        high = m;
}

void IsolatingInterval::refine(const Rational& width) {
    while (!exact() && high - low > width) bisect();
}

int IsolatingInterval::compare(const Rational& v) {
    if (exact()) return sign(low - v);
    if (v < low) return 1;
    if (v > high) return -1;
    int sv = detail::sign_at(poly, v);
    if (sv == 0) {
        low = high = v;
        return 0;
    }
    if (sv == detail::sign_at(poly, low)) {
        low = v;
        return 1;
    }
    high = v;
    return -1;
}

namespace {

// Fujiwara: every root satisfies |z| <= 2 max_i |a_{n-i} / a_n|^(1/i).  Bit lengths give a power
// of two above each ratio; the result is doubled once more so that it is never a root.
Rational root_bound(const ZPoly& p) {
    const size_t n = p.size() - 1;
    const long top = static_cast<long>(mpz_sizeinbase(p.back().get_mpz_t(), 2));
    long e = 0;
    for (size_t i = 1; i <= n; ++i) {
        const Integer& c = p[n - i];
        if (c == 0) continue;
        const long bits = static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)) - top + 1;
        const long step = bits > 0 ? (bits + static_cast<long>(i) - 1) / static_cast<long>(i) : 0;
        e = std::max(e, step);
    }
    return pow2(e + 2);
}

// Sign variations of (1 + x)^n p((a + b x) / (1 + x)), an upper bound of the same parity for the
// number of roots of p in the open interval (a, b).  Counting stops at 2.
int descartes(const ZPoly& p, const Rational& a, const Rational& b) {
    const size_t n = p.size() - 1;
    // With a = A / D and b - a = W / D: D^n p((A + W y) / D) by Horner, then y = 1 / (1 + x).
    Integer D;
    mpz_lcm(D.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    const Integer A = a.get_num() * (D / a.get_den()), W = b.get_num() * (D / b.get_den()) - A;
    ZPoly h{p[n]};
    Integer dpow = 1;
    for (size_t i = n; i-- > 0;) {
        dpow *= D;
        ZPoly next(h.size() + 1);
        for (size_t j = 0; j < h.size(); ++j) {
            next[j] += h[j] * A;
            next[j + 1] += h[j] * W;
        }
        next[0] += p[i] * dpow;
        h = std::move(next);
    }
    h.resize(n + 1);
    std::reverse(h.begin(), h.end());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = n - 1; j >= i && j != static_cast<size_t>(-1); --j) h[j] += h[j + 1];
    int v = 0, last = 0;
    for (const auto& c : h) {
        const int sc = sgn(c);
        if (sc == 0) continue;
        if (last != 0 && sc != last && ++v >= 2) return v;
        last = sc;
    }
    return v;
}

struct Isolator {
    const ZPoly& p;
    std::vector<IsolatingInterval>& out;

    // Endpoints lo, hi are never roots here.
    void run(const Rational& lo, const Rational& hi) {
        const int v = descartes(p, lo, hi);
        if (v == 0) return;
        if (v == 1) {
            out.push_back({lo, hi, 1, p});
            return;
        }
        Rational m = (lo + hi) / 2;
        if (detail::sign_at(p, m) != 0) {
            run(lo, m);
            run(m, hi);
            return;
        }
        Rational delta = (hi - lo) / 4;
        for (;;) {
            Rational a = m - delta, b = m + delta;
            if (detail::sign_at(p, a) != 0 && detail::sign_at(p, b) != 0 && descartes(p, a, m) == 0 &&
                descartes(p, m, b) == 0) {
                run(lo, a);
                out.push_back({m, m, 1, p});
                run(b, hi);
                return;
            }
            delta /= 2;
        }
    }
};

std::vector<IsolatingInterval> isolate_square_free(const ZPoly& p) {
    std::vector<IsolatingInterval> out;
    if (p.size() <= 1) return out;
    if (p.size() == 2) {
        out.push_back({Rational(-p[0], p[1]), Rational(-p[0], p[1]), 1, p});
        out.back().low.canonicalize();
        out.back().high.canonicalize();
        return out;
    }
    Isolator iso{p, out};
    Rational b = root_bound(p);
    iso.run(-b, b);
    return out;
}

bool overlap(const IsolatingInterval& a, const IsolatingInterval& b) {
    return !(a.high < b.low || b.high < a.low);
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("zero polynomial");
    std::vector<IsolatingInterval> all;
    for (const auto& [f, mult] : square_free_decomposition(p)) {
        for (auto& r : isolate_square_free(detail::to_primitive_zpoly(f))) {
            r.multiplicity = mult;
            all.push_back(std::move(r));
        }
    }
    // Roots of distinct factors are distinct; refine until the intervals separate.
    for (bool changed = true; changed;) {
        changed = false;
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.low < b.low; });
        for (size_t i = 0; i + 1 < all.size(); ++i) {
            if (overlap(all[i], all[i + 1])) {
                all[i].bisect();
                all[i + 1].bisect();
                changed = true;
            }
        }
    }
    return all;
}

bool vanishes_at(const UniPoly& q, const IsolatingInterval& r) {
    if (q.is_zero()) return true;
    if (r.exact()) return q(r.low) == 0;
    ZPoly g = detail::gcd(detail::to_primitive_zpoly(q), r.poly);
    if (g.size() <= 1) return false;
    // The roots of g are roots of r.poly, whose only root in [low, high] is interior.
    SturmChain chain(detail::from_zpoly(g));
    return chain.variations(r.low) - chain.variations(r.high) > 0;
}

std::optional<Rational> rational_value(IsolatingInterval r) {
    if (r.exact()) return r.low;
    // Fractions with denominator dividing lc are at least 1/lc^2 apart.
    const Integer lc = abs(r.poly.back());
    r.refine(Rational(1, 2) / Rational(lc * lc));
    if (r.exact()) return r.low;
    Rational s = simplest_between(r.low, r.high);
    if (detail::sign_at(r.poly, s) == 0) return s;
    return std::nullopt;
}

std::vector<std::pair<size_t, size_t>> common_roots(std::vector<IsolatingInterval>& a,
                                                    std::vector<IsolatingInterval>& b) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            if (!overlap(a[i], b[j])) continue;
            ZPoly g = detail::gcd(a[i].poly, b[j].poly);
            if (g.size() <= 1) continue;
            // Both roots are the unique root of g inside the intersection, if g has one there.
            Rational lo = std::max(a[i].low, b[j].low), hi = std::min(a[i].high, b[j].high);
            bool shared;
            if (lo == hi) {
                shared = detail::sign_at(g, lo) == 0;
            } else {
                SturmChain chain(detail::from_zpoly(g));
                int n = chain.variations(lo) - chain.variations(hi);
                if (detail::sign_at(g, lo) == 0) ++n;
                shared = n > 0;
            }
            if (shared) out.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace trp
