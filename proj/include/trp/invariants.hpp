#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trp/topology.hpp"

namespace trp {

/// (d-1)(d-2)/2 + 1.  Throws DomainError for d < 1.
int harnack_bound(int d);
int genus_of_degree(int d);

/// ceil((g + l + 1) / 2).  Throws DomainError unless 1 <= l <= g + 1.
int gabard_bound(int g, int l);

/// {g - 1, g}.  Throws DomainError for g < 2.
std::pair<int, int> m2_sepgon_range(int g);

enum class SepgonCase { unknown, g_minus_1, g };

/// Translate anchor + N^n of the integer lattice.
struct SemigroupCone {
    std::vector<int> anchor;

    /// Throws DomainError when the length differs from the anchor's.
    bool contains(const std::vector<int>& v) const;
};

/// Cones over g - 1 coordinates: (4,3,...,3) always, plus (3,...,3) when sepgon = g - 1 or
/// (4,2,...,2) when sepgon = g.  Throws DomainError for g < 3.
std::vector<SemigroupCone> semigroup_cones(int g, SepgonCase c);

struct PartitionReport {
    bool consistent = true;
    std::vector<std::string> notes;
    /// Membership in each cone of semigroup_cones(g, unknown or the known case), when the length is g - 1.
    std::vector<std::pair<std::vector<int>, bool>> cones;
};

/// Checks a degree partition of a separating morphism against the covering and parity
/// constraints, and reports cone memberships.
PartitionReport check_partition_against_theory(const CurveTopology& t, const std::vector<int>& dp,
                                               SepgonCase c = SepgonCase::unknown);

}  // namespace trp
