#pragma once

#include <vector>

#include "trp/interval.hpp"
#include "trp/unipoly.hpp"

namespace trp {

/// Polynomial in a main variable y whose coefficients are univariate polynomials in an
/// outer variable x:  p(x, y) = sum_i c_i(x) y^i.  Elimination always removes y.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> coeffs);

    /// Degree in the main variable y; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Largest x-degree over all coefficients.
    int outer_degree() const;
    const UniPoly& coeff(int i) const;
    const std::vector<UniPoly>& coeffs() const { return coeffs_; }
    const UniPoly& leading() const;

    /// p(x0, y) as a polynomial in y.
    UniPoly at_outer(const Rational& x0) const;
    /// p(x, y0) as a polynomial in x.
    UniPoly at_main(const Rational& y0) const;
    Rational operator()(const Rational& x, const Rational& y) const;
    Interval operator()(const Interval& x, const Interval& y) const;

    BiPoly derivative_main() const;
    BiPoly derivative_outer() const;
    /// The same polynomial with the roles of x and y exchanged.
    BiPoly transposed() const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void trim();
    std::vector<UniPoly> coeffs_;
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const Rational& c);

/// Sylvester resultant with respect to y: the determinant of the (m+n) x (m+n) Sylvester
/// matrix whose first n rows hold the shifted coefficients of p (highest power first) and
/// whose last m rows hold those of q.  With this convention Res_y(y^2 - x, y) = -x.
/// Throws DomainError("zero polynomial has no resultant") on a zero argument.
UniPoly resultant(const BiPoly& p, const BiPoly& q);

/// Coefficients (ascending in y) of the j-th subresultant polynomial S_j(p, q), built from the
/// same row convention as resultant().  S_0 is the resultant; the coefficient of y^j is the
/// j-th principal subresultant coefficient.
std::vector<UniPoly> subresultant(const BiPoly& p, const BiPoly& q, int j);

/// Disc_y(p) = (-1)^(n(n-1)/2) Res_y(p, p_y) / lc_y(p), a polynomial in x.
UniPoly discriminant(const BiPoly& p);

Rational resultant(const UniPoly& p, const UniPoly& q);
/// Disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).  For x^2 - 2 this is 8.
Rational discriminant(const UniPoly& p);

}  // namespace trp
