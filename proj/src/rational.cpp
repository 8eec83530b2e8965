#include "trp/rational.hpp"

#include "trp/errors.hpp"

namespace trp {

Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw DomainError("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational number: '" + text + "'");
    }
}

Rational pow2(long e) {
    Integer one = 1;
    if (e >= 0) {
        Integer p;
        mpz_mul_2exp(p.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return Rational(p);
    }
    Integer p;
    mpz_mul_2exp(p.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return Rational(Integer(1), p);
}

Integer floor(const Rational& v) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

Rational floor_dyadic(const Rational& v, long bits) {
    Rational scaled = v * pow2(bits);
    return Rational(floor(scaled)) * pow2(-bits);
}

Rational ceil_dyadic(const Rational& v, long bits) {
    Rational scaled = v * pow2(bits);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return Rational(c) * pow2(-bits);
}

namespace {

// Stern-Brocot descent for 0 < lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
    Integer fl = floor(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational a = lo - fl, b = hi - fl;
    Rational inner = simplest_positive(1 / b, 1 / a);
    return Rational(fl) + 1 / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (lo > hi) return simplest_between(hi, lo);
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_positive(-hi, -lo);
    return simplest_positive(lo, hi);
}

double to_double(const Rational& v) { return v.get_d(); }

}  // namespace trp
