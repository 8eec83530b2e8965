#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trp/interval.hpp"
#include "trp/rational.hpp"

namespace trp {

/// Dense univariate polynomial over the rationals, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    /// x - r
    static UniPoly linear_root(const Rational& r);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    Interval operator()(const Interval& x) const;

    UniPoly derivative() const;
    UniPoly monic() const;
    /// p(-x)
    UniPoly reflect() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(UniPoly a, const Rational& c);
UniPoly operator*(const Rational& c, UniPoly a);

/// Euclidean division over the rationals. Throws DomainError on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// a / b, throws DomainError when the division is not exact.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, int e);
/// p(q(x))
UniPoly compose(const UniPoly& p, const UniPoly& q);

/// Newton interpolation through (xs[i], ys[i]); nodes must be distinct.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

std::string to_string(const UniPoly& p, const std::string& var = "x");

namespace detail {

/// Integer polynomial, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& p);
/// Positive rational multiple of p with coprime integer coefficients.
ZPoly to_primitive_zpoly(const UniPoly& p);
UniPoly from_zpoly(const ZPoly& p);
Integer content(const ZPoly& p);
/// Divides by the (positive) content.
ZPoly primitive(ZPoly p);
ZPoly derivative(const ZPoly& p);

struct PseudoRemainder {
    ZPoly remainder;
    /// Sign of the factor m with m * a = q * b + remainder.
    int multiplier_sign;
};
PseudoRemainder prem(const ZPoly& a, const ZPoly& b);

/// Sign of p at a rational point.
int sign_at(const ZPoly& p, const Rational& x);
/// Sign of p at +infinity (dir > 0) or -infinity (dir < 0).
int sign_at_infinity(const ZPoly& p, int dir);
/// Primitive gcd with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace detail

}  // namespace trp
