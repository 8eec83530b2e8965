#include <doctest.h>

#include <functional>

#include "trp/catalog.hpp"
#include "trp/errors.hpp"
#include "trp/invariants.hpp"

using namespace trp;

namespace {

// Componentwise comparison written independently of SemigroupCone.
bool dominates(const std::vector<int>& v, const std::vector<int>& a) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < a[i]) return false;
    return true;
}

void for_each_vector(size_t n, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(n, lo);
    for (;;) {
        fn(v);
        size_t i = 0;
        while (i < n && v[i] == hi) v[i++] = lo;
        if (i == n) return;
        ++v[i];
    }
}

const CurveTopology& quintic_topology() {
    static const CurveTopology t = compute_topology(catalog_entry("separating_quintic").form);
    return t;
}

}  // namespace

TEST_CASE("harnack_bound") {
    CHECK(harnack_bound(5) == 7);
    CHECK(harnack_bound(4) == 4);
    CHECK(harnack_bound(2) == 1);
    CHECK(harnack_bound(1) == 1);
    CHECK(genus_of_degree(5) == 6);
    CHECK(genus_of_degree(6) == 10);
    CHECK_THROWS_AS(harnack_bound(0), DomainError);
}

TEST_CASE("gabard_bound") {
    CHECK(gabard_bound(6, 5) == 6);
    CHECK(gabard_bound(0, 1) == 1);
    CHECK(gabard_bound(3, 4) == 4);
    for (int g = 2; g <= 30; ++g) CHECK(gabard_bound(g, g - 1) == g);
    for (int g = 0; g <= 12; ++g)
        for (int l = 1; l <= g + 1; ++l) CHECK(gabard_bound(g, l) == (g + l + 2) / 2);
    CHECK_THROWS_AS(gabard_bound(3, 0), DomainError);
    CHECK_THROWS_AS(gabard_bound(3, 5), DomainError);
}

TEST_CASE("m2_sepgon_range") {
    CHECK(m2_sepgon_range(6) == std::pair{5, 6});
    CHECK(m2_sepgon_range(3) == std::pair{2, 3});
    CHECK(m2_sepgon_range(10) == std::pair{9, 10});
    CHECK_THROWS_AS(m2_sepgon_range(1), DomainError);
}

TEST_CASE("semigroup_cones: shapes and examples") {
    CHECK(semigroup_cones(6, SepgonCase::unknown).size() == 1);
    const auto g = semigroup_cones(6, SepgonCase::g);
    REQUIRE(g.size() == 2);
    CHECK(g[0].anchor == std::vector<int>{4, 3, 3, 3, 3});
    CHECK(g[1].anchor == std::vector<int>{4, 2, 2, 2, 2});
    CHECK(g[1].contains({4, 2, 2, 2, 2}));
    CHECK_FALSE(g[1].contains({3, 3, 3, 3, 3}));
    const auto gm = semigroup_cones(6, SepgonCase::g_minus_1);
    REQUIRE(gm.size() == 2);
    CHECK(gm[1].anchor == std::vector<int>(5, 3));
    for (int gg = 3; gg <= 8; ++gg)
        for (auto c : {SepgonCase::unknown, SepgonCase::g_minus_1, SepgonCase::g})
            for (const auto& cone : semigroup_cones(gg, c)) {
                CHECK(cone.anchor.size() == static_cast<size_t>(gg - 1));
                CHECK(cone.contains(cone.anchor));
            }
    CHECK_THROWS_AS(semigroup_cones(2, SepgonCase::unknown), DomainError);
    CHECK_THROWS_AS(g[0].contains({4, 3}), DomainError);
}

TEST_CASE("cone membership matches componentwise brute force for g = 4") {
    int checked = 0;
    for (auto c : {SepgonCase::unknown, SepgonCase::g_minus_1, SepgonCase::g})
        for (const auto& cone : semigroup_cones(4, c))
            for_each_vector(3, 0, 6, [&](const std::vector<int>& v) {
                CHECK(cone.contains(v) == dominates(v, cone.anchor));
                ++checked;
            });
    CHECK(checked == 5 * 343);
}

TEST_CASE("cone membership is monotone and closed under sums") {
    const auto cones = semigroup_cones(4, SepgonCase::g);
    for (const auto& cone : cones) {
        SemigroupCone doubled{cone.anchor};
        for (int& x : doubled.anchor) x *= 2;
        for_each_vector(3, 0, 5, [&](const std::vector<int>& v) {
            if (!cone.contains(v)) return;
            for (size_t i = 0; i < 3; ++i) {
                auto w = v;
                ++w[i];
                CHECK(cone.contains(w));
            }
            for_each_vector(3, 2, 5, [&](const std::vector<int>& u) {
                if (!cone.contains(u)) return;
                std::vector<int> s{v[0] + u[0], v[1] + u[1], v[2] + u[2]};
                CHECK(doubled.contains(s));
            });
        });
    }
}

TEST_CASE("check_partition_against_theory on the separating quintic") {
    const auto& t = quintic_topology();
    const int j = t.pseudo_line();
    std::vector<int> dp(5, 1);
    dp[static_cast<size_t>(j)] = 2;
    auto r = check_partition_against_theory(t, dp);
    CHECK(r.consistent);
    REQUIRE(r.cones.size() == 1);
    CHECK_FALSE(r.cones[0].second);
    auto rg = check_partition_against_theory(t, dp, SepgonCase::g);
    REQUIRE(rg.cones.size() == 2);
    CHECK_FALSE(rg.cones[1].second);

    CHECK_FALSE(check_partition_against_theory(t, {1, 1, 1, 1, 1}).consistent);
    CHECK_FALSE(check_partition_against_theory(t, {2, 0, 1, 1, 2}).consistent);
    CHECK_FALSE(check_partition_against_theory(t, {2, 2, 1, 1, 0}).consistent);
    CHECK_FALSE(check_partition_against_theory(t, {3, 1, 1, 1}).consistent);
    CHECK(check_partition_against_theory(t, {4, 2, 2, 2, 2}).consistent);
    CHECK(check_partition_against_theory(t, {4, 2, 2, 2, 2}, SepgonCase::g).cones[1].second);
}
