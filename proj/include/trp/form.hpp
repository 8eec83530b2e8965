#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "trp/bipoly.hpp"
#include "trp/matrix.hpp"
#include "trp/rational.hpp"
#include "trp/unipoly.hpp"

namespace trp {

using Exponent = std::array<int, 3>;

/// Point of the real projective plane with rational homogeneous coordinates (x : y : z).
struct ProjectivePoint {
    std::array<Rational, 3> v;

    ProjectivePoint() = default;
    /// Throws DomainError when all coordinates vanish.
    ProjectivePoint(Rational x, Rational y, Rational z);

    const Rational& operator[](int i) const { return v[static_cast<size_t>(i)]; }
    /// Representative with last nonzero coordinate equal to 1.
    ProjectivePoint normalized() const;
    bool same_point(const ProjectivePoint& o) const;
};

std::string to_string(const ProjectivePoint& p);

/// Homogeneous polynomial of degree d in x, y, z with sparse rational coefficients.
class TernaryForm {
public:
    TernaryForm() = default;
    /// Throws DomainError on a negative degree or an exponent triple not summing to d.
    TernaryForm(int degree, std::map<Exponent, Rational> coeffs);

    static TernaryForm zero(int degree);
    static TernaryForm linear(const Rational& a, const Rational& b, const Rational& c);

    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Exponent, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const Exponent& e) const;

    Rational operator()(const ProjectivePoint& p) const;
    Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;

    /// Partial derivative in variable 0 (x), 1 (y) or 2 (z).
    TernaryForm partial(int var) const;
    /// F(x, y, 1) as a polynomial in y with coefficients in x.
    BiPoly dehomogenize() const;
    /// F(p + t q) as a polynomial in t.
    UniPoly restrict_to_line(const ProjectivePoint& p, const ProjectivePoint& q) const;
    /// F(A v): the pullback along the linear map v -> A v.
    TernaryForm pullback(const RationalMatrix& a) const;

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

private:
    int degree_ = 0;
    std::map<Exponent, Rational> coeffs_;
};

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
TernaryForm operator*(const TernaryForm& a, const Rational& c);
TernaryForm pow(const TernaryForm& a, int e);

std::string to_string(const TernaryForm& f);

/// Exponent triples of degree k, in the fixed order (k,0,0), (k-1,1,0), (k-1,0,1), ...
std::vector<Exponent> monomials(int k);
/// Basis of the degree-k forms vanishing at every point.
std::vector<TernaryForm> interpolation_space(const std::vector<ProjectivePoint>& points, int k);

/// Invertible 3x3 change of coordinates.  Points move by v -> A v, forms by pullback along A.
class ProjectiveMap {
public:
    ProjectiveMap() : a_(RationalMatrix::identity(3)), inv_(RationalMatrix::identity(3)) {}
    /// Throws DomainError when singular.
    explicit ProjectiveMap(const RationalMatrix& a);

    static ProjectiveMap random(std::mt19937_64& rng);

    const RationalMatrix& matrix() const { return a_; }
    ProjectiveMap inverse() const;
    ProjectivePoint operator()(const ProjectivePoint& p) const;
    /// The form whose zero set is the image of the zero set of f: f o A^-1.
    TernaryForm push(const TernaryForm& f) const;
    bool is_identity() const { return a_ == RationalMatrix::identity(3); }

private:
    RationalMatrix a_;
    RationalMatrix inv_;
};

}  // namespace trp
