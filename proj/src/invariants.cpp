#include "trp/invariants.hpp"

#include <numeric>

#include "trp/errors.hpp"

namespace trp {

int genus_of_degree(int d) {
    if (d < 1) throw DomainError("degree must be positive");
    return (d - 1) * (d - 2) / 2;
}

int harnack_bound(int d) { return genus_of_degree(d) + 1; }

int gabard_bound(int g, int l) {
    if (g < 0 || l < 1 || l > g + 1) throw DomainError("component count must lie in [1, g + 1]");
    return (g + l + 2) / 2;
}

std::pair<int, int> m2_sepgon_range(int g) {
    if (g < 2) throw DomainError("genus must be at least 2");
    return {g - 1, g};
}

bool SemigroupCone::contains(const std::vector<int>& v) const {
    if (v.size() != anchor.size()) throw DomainError("partition length differs from the cone dimension");
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < anchor[i]) return false;
    return true;
}

std::vector<SemigroupCone> semigroup_cones(int g, SepgonCase c) {
    if (g < 3) throw DomainError("genus must be at least 3");
    const size_t n = static_cast<size_t>(g - 1);
    std::vector<SemigroupCone> out;
    std::vector<int> a(n, 3);
    a[0] = 4;
    out.push_back({a});
    if (c == SepgonCase::g_minus_1) out.push_back({std::vector<int>(n, 3)});
    if (c == SepgonCase::g) {
        std::vector<int> b(n, 2);
        b[0] = 4;
        out.push_back({b});
    }
    return out;
}

PartitionReport check_partition_against_theory(const CurveTopology& t, const std::vector<int>& dp, SepgonCase c) {
    PartitionReport r;
    auto flag = [&](const std::string& note) {
        r.consistent = false;
        r.notes.push_back(note);
    };
    if (static_cast<int>(dp.size()) != t.count()) {
        flag("partition length differs from the component count");
        return r;
    }
    const int sum = std::accumulate(dp.begin(), dp.end(), 0);
    for (int v : dp)
        if (v < 1) {
            flag("a component is not covered: entry " + std::to_string(v));
            break;
        }
    if (sum < t.count()) flag("degree " + std::to_string(sum) + " is below the component count");
    if (t.degree == 5 && t.count() == 5 && t.pseudo_line() >= 0) {
        if (sum == 5) flag("degree 5 contradicts separating gonality 6 of a five-component quintic");
        if (sum == 6) {
            int twos = 0, odd = 0;
            for (int v : dp) {
                twos += v == 2;
                odd += v % 2;
            }
            if (twos != 1 || odd != 4) flag("degree-6 partition must have one entry 2 and four odd entries");
        }
    }
    if (t.genus >= 3 && t.count() == t.genus - 1) {
        for (const auto& cone : semigroup_cones(t.genus, c)) r.cones.push_back({cone.anchor, cone.contains(dp)});
    } else {
        r.notes.push_back("cone memberships apply to curves with g - 1 components only");
    }
    return r;
}

}  // namespace trp
