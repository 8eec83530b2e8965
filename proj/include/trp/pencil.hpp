#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trp/form.hpp"
#include "trp/point.hpp"
#include "trp/topology.hpp"

namespace trp {

/// A point of the real parameter line of a pencil: the member g + slope * f, or f itself when
/// the slope is absent (the point at infinity).
struct PencilParameter {
    std::optional<Rational> slope;

    bool at_infinity() const { return !slope.has_value(); }
    friend bool operator==(const PencilParameter&, const PencilParameter&) = default;
};

std::string to_string(const PencilParameter& p);

struct Pencil {
    int k = 0;
    TernaryForm f;
    TernaryForm g;
    std::vector<ProjectivePoint> base_points;

    TernaryForm member(const PencilParameter& p) const;
};

/// Two independent forms of degree k through the points.  Throws DomainError("no pencil through
/// these points") when fewer than two exist.
Pencil build_pencil(const std::vector<ProjectivePoint>& points, int k);

/// Real intersection points of C with a member curve, with multiplicities.
struct MemberIntersection {
    int real = 0;
    int total = 0;
    std::vector<AlgebraicPoint> points;
};

/// Counts V(C) and V(member) with intersection multiplicity.  Throws DomainError when the two
/// share a component and GenericPositionError when no chart separates the intersections.
MemberIntersection intersect_member(const TernaryForm& c, const TernaryForm& member,
                                    std::uint64_t seed = kDefaultSeed);

struct ParameterCheck {
    PencilParameter parameter;
    /// "sample" for a point between critical parameters, "critical" for a rational critical
    /// parameter, "infinity" for the member f, "probe" for a parameter tried before the sweep.
    std::string role;
    int real = 0;
    int total = 0;
};

struct TotalRealityCertificate {
    bool totally_real = false;
    std::vector<IsolatingInterval> critical_parameters;
    std::vector<ParameterCheck> checks;
    std::optional<PencilParameter> witness;
};

/// Decides whether every real member of the pencil meets C in real points only.
TotalRealityCertificate certify_totally_real(const TernaryForm& c, const Pencil& p,
                                             std::uint64_t seed = kDefaultSeed);

/// Real points of V(f) and V(g) on C.
std::vector<AlgebraicPoint> base_locus_on_curve(const TernaryForm& c, const Pencil& p,
                                                std::uint64_t seed = kDefaultSeed);

/// Covering degree of the pencil's morphism on each component of C, in topology order.  Points of
/// the base locus are fixed by every member and are not counted.
std::vector<int> degree_partition(const TernaryForm& c, const CurveTopology& t, const Pencil& p,
                                  const TotalRealityCertificate& cert, std::uint64_t seed = kDefaultSeed);

/// Degree partition at one given regular parameter.
std::vector<int> degree_partition_at(const TernaryForm& c, const CurveTopology& t, const Pencil& p,
                                     const PencilParameter& at, std::uint64_t seed = kDefaultSeed);

struct SearchOptions {
    /// Pencil degree; 0 means d - 3.
    int degree = 0;
    /// Maximum number of certified candidate pencils.
    int budget = 50;
    /// Stop after this many totally real pencils.
    int wanted = 1;
    /// Use only interior points of ovals (no points on the curve).
    bool interior_only = false;
    std::uint64_t seed = kDefaultSeed;
};

struct SearchAttempt {
    std::vector<int> components;
    std::vector<ProjectivePoint> points;
    /// "totally-real", "not-totally-real", or the failure message.
    std::string outcome;
};

struct FoundPencil {
    Pencil pencil;
    TotalRealityCertificate certificate;
};

struct SearchReport {
    std::vector<FoundPencil> found;
    std::vector<SearchAttempt> attempts;
    bool exhausted() const { return found.empty(); }
};

/// Tries base configurations of g - 2 (then g - 1) points, one per chosen component, and
/// certifies the resulting pencils.  Throws DomainError("no real components") on an empty curve.
SearchReport search_totally_real_pencil(const TernaryForm& c, const CurveTopology& t, const SearchOptions& options);

/// Rational points of C on the component, found on lines x = a and y = a for small rationals a.
std::vector<ProjectivePoint> rational_points_on(const TernaryForm& c, const CurveTopology& t, int component,
                                                int limit);

}  // namespace trp
