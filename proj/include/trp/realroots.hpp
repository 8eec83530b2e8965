#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trp/interval.hpp"
#include "trp/unipoly.hpp"

namespace trp {

/// p, p', then negated remainders, each scaled to a primitive integer polynomial by a
/// positive factor (scaling by positive constants leaves sign variations unchanged).
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);

    const std::vector<detail::ZPoly>& polys() const { return chain_; }
    int variations(const Rational& x) const;
    /// Variations at +infinity (dir > 0) or -infinity (dir < 0).
    int variations_at_infinity(int dir) const;

private:
    std::vector<detail::ZPoly> chain_;
};

/// Optional endpoint: std::nullopt stands for -infinity on the left and +infinity on the right.
using Bound = std::optional<Rational>;

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Throws DomainError("zero polynomial") when p = 0.
int count_real_roots(const UniPoly& p, const Bound& lo = std::nullopt, const Bound& hi = std::nullopt);

int sign_at(const UniPoly& p, const Rational& x);

/// p / gcd(p, p'), monic.  Throws DomainError on zero.
UniPoly square_free_part(const UniPoly& p);
/// Yun decomposition: pairs (f_i, i) with p = lc * prod f_i^i, each f_i monic, square-free,
/// pairwise coprime and nonconstant.
std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p);

/// A closed interval [low, high] holding exactly one distinct real root of the square-free
/// polynomial `poly`.  Either low = high (the root is that rational) or poly is nonzero at
/// both endpoints with opposite signs.
struct IsolatingInterval {
    Rational low;
    Rational high;
    int multiplicity = 1;
    detail::ZPoly poly;

    bool exact() const { return low == high; }
    Interval interval() const { return {low, high}; }
    Rational width() const { return high - low; }
    /// One bisection step; collapses to [m, m] when the midpoint is the root.
    void bisect();
    /// Bisects until the width is at most `width`.
    void refine(const Rational& width);
    /// Sign of the root minus v, refining as needed.
    int compare(const Rational& v);
};

/// Isolating intervals for the distinct real roots of p, sorted ascending and pairwise
/// disjoint, each carrying the multiplicity of its root.  Throws DomainError on zero.
std::vector<IsolatingInterval> isolate_roots(const UniPoly& p);

/// True iff q vanishes at the root isolated by r.
bool vanishes_at(const UniPoly& q, const IsolatingInterval& r);

/// The root as an exact rational when it is one.
std::optional<Rational> rational_value(IsolatingInterval r);

/// Pairs of interval indices into a and b isolating the same real number.
std::vector<std::pair<size_t, size_t>> common_roots(std::vector<IsolatingInterval>& a,
                                                    std::vector<IsolatingInterval>& b);

}  // namespace trp
