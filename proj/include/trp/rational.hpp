#pragma once

#include <gmpxx.h>

#include <string>

namespace trp {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

/// Builds n/d in lowest terms. Throws DomainError when d == 0.
Rational make_rational(const Integer& n, const Integer& d);

std::string to_string(const Integer& v);
/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& v);
Rational parse_rational(const std::string& text);

/// 2^e for any integer e.
Rational pow2(long e);
Rational floor_dyadic(const Rational& v, long bits);
Rational ceil_dyadic(const Rational& v, long bits);
Integer floor(const Rational& v);

/// The rational of least denominator (then least |numerator|) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

double to_double(const Rational& v);

}  // namespace trp
