#pragma once

#include <algorithm>
#include <initializer_list>

#include "trp/errors.hpp"
#include "trp/rational.hpp"

namespace trp {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    /// +1 or -1 when the interval excludes zero, 0 otherwise.
    int certain_sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
    Interval inv{1 / b.hi, 1 / b.lo};
    return a * inv;
}

/// Outward rounding to dyadic endpoints, keeps numbers small during refinement.
inline Interval round_out(const Interval& v, long bits) {
    return {floor_dyadic(v.lo, bits), ceil_dyadic(v.hi, bits)};
}

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace trp
