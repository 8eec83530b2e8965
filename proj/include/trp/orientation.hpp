#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trp/pencil.hpp"
#include "trp/topology.hpp"

namespace trp {

/// Per component: +1 when the orientation induced by the pencil runs along the component's
/// trace order, -1 otherwise.  Defined up to simultaneous reversal of all flags.
struct ComponentOrientation {
    std::vector<int> flags;
};

/// Orientation of C(R) along which the pencil parameter increases.  Every segment of the
/// decomposition is checked for consistency.  Throws DomainError on a pencil that is not
/// totally real or on inconsistent directions.
ComponentOrientation induced_orientation(const TernaryForm& c, const CurveTopology& t, const Pencil& p,
                                         const TotalRealityCertificate& cert);

enum class OvalSign { positive, negative };

/// Sign of every oval (nullopt at the pseudo-line).  Throws DomainError("sign convention for nested
/// ovals unspecified") on nested ovals and DomainError when there is no pseudo-line.
std::vector<std::optional<OvalSign>> oval_signs(const CurveTopology& t, const ComponentOrientation& o);

enum class Position { convex, non_convex, inapplicable };
enum class Conclusion { separating, non_separating, unknown };

std::string to_string(Position p);
std::string to_string(Conclusion c);

struct TriangleWitness {
    /// The three ovals whose interior points span the triangle, and the oval inside it.
    std::array<int, 3> ovals{};
    int inner = -1;
    std::array<ProjectivePoint, 3> points;
    /// Lines through points (0,1), (0,2), (1,2).
    std::array<TernaryForm, 3> lines;
    /// For each line, the arc used: +1 for {P_i + s P_j : s > 0}, -1 for s < 0.
    std::array<int, 3> arcs{};
};

struct QuinticVerdict {
    Position position = Position::inapplicable;
    Conclusion conclusion = Conclusion::unknown;
    std::optional<TriangleWitness> triangle;
};

/// Decides whether the four ovals of a five-component quintic are in non-convex position.
/// Curves of other degrees or component counts are inapplicable.
QuinticVerdict non_convex_position(const CurveTopology& t);

/// Topology plus non_convex_position.  Throws DomainError on a curve that is not a quintic.
QuinticVerdict classify_quintic(const TernaryForm& c, std::uint64_t seed = kDefaultSeed);

}  // namespace trp
