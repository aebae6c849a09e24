#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "otv/regions.hpp"

using namespace otv;

TEST_CASE("cyl membership") {
    LegTriple l1(Partition{1}, {}, {}, 1);
    CylMembership m = cyl_membership(l1, Box{-3, 0, 0});
    CHECK(m.in[0]);
    CHECK_FALSE(m.in[1]);
    CHECK_FALSE(m.in[2]);
    CHECK_FALSE(m.positive);

    LegTriple l2(Partition{1}, Partition{1}, {}, 1);
    CylMembership m2 = cyl_membership(l2, Box{0, 0, 0});
    CHECK(m2.in[0]);
    CHECK(m2.in[1]);
    CHECK_FALSE(m2.in[2]);
    CHECK(m2.positive);

    LegTriple l0({}, {}, {}, 1);
    CylMembership m3 = cyl_membership(l0, Box{2, -1, 5});
    CHECK(m3.count() == 0);
}

TEST_CASE("region sets") {
    LegTriple l0({}, {}, {}, 2);
    RegionSets r0 = region_sets(l0);
    CHECK(r0.II_total == 0);
    CHECK(r0.III_total == 0);

    LegTriple l2(Partition{1}, Partition{1}, {}, 2);
    RegionSets r2 = region_sets(l2);
    CHECK(r2.II_hat[2] == std::vector<Box>{Box{0, 0, 0}});
    CHECK(r2.III.empty());
    CHECK(r2.II_colored[0] == 1);
    CHECK(r2.II_colored[1] == 0);
    CHECK(pi_min_colored_volume(l2) == std::vector<long long>{-1, 0});

    LegTriple l3(Partition{1}, Partition{1}, Partition{1}, 1);
    RegionSets r3 = region_sets(l3);
    CHECK(r3.III == std::vector<Box>{Box{0, 0, 0}});
    CHECK(r3.II_total == 0);
    CHECK(pi_min_colored_volume(l3) == std::vector<long long>{-2});
}

TEST_CASE("region transpose symmetry") {
    std::vector<LegTriple> cases = {
        {Partition{2}, Partition{1, 1}, Partition{1}, 2},
        {Partition{3, 1}, Partition{2}, Partition{2, 1}, 3},
        {Partition{1}, Partition{}, Partition{2, 2}, 2},
    };
    for (const auto& legs : cases) {
        LegTriple t(legs.mu.conjugate(), legs.lambda.conjugate(), legs.nu.conjugate(), legs.n);
        RegionSets a = region_sets(legs), b = region_sets(t);
        CHECK(a.II_total == b.II_total);
        CHECK(a.III_total == b.III_total);
    }
}

TEST_CASE("dt enumeration counts and closure") {
    LegTriple empty({}, {}, {}, 1);
    std::vector<int> by_size(4, 0);
    enumerate_dt(empty, 3, [&](const std::vector<Box>& extra) { by_size[extra.size()]++; });
    CHECK(by_size == std::vector<int>{1, 1, 3, 6});

    LegTriple one(Partition{1}, {}, {}, 1);
    std::vector<int> c2(3, 0);
    enumerate_dt(one, 2, [&](const std::vector<Box>& extra) {
        c2[extra.size()]++;
        // downward closure of pi_min + extra
        std::set<Box> pi(extra.begin(), extra.end());
        for (const Box& b : extra)
            for (const Box p : {Box{b.x - 1, b.y, b.z}, Box{b.x, b.y - 1, b.z}, Box{b.x, b.y, b.z - 1}}) {
                if (p.x < 0 || p.y < 0 || p.z < 0) continue;
                CHECK((pi.count(p) || in_pi_min(one, p)));
            }
    });
    CHECK(c2 == std::vector<int>{1, 2, 5});
}

TEST_CASE("dt stream determinism") {
    LegTriple legs(Partition{2}, Partition{1}, Partition{1}, 2);
    std::vector<std::vector<Box>> run1, run2;
    enumerate_dt(legs, 3, [&](const std::vector<Box>& e) { run1.push_back(e); });
    enumerate_dt(legs, 3, [&](const std::vector<Box>& e) { run2.push_back(e); });
    CHECK(run1 == run2);
    std::set<std::vector<Box>> uniq(run1.begin(), run1.end());
    CHECK(uniq.size() == run1.size());
}

TEST_CASE("ab enumeration examples") {
    LegTriple empty({}, {}, {}, 1);
    int count = 0;
    enumerate_ab_all(empty, 5, [&](const ABConfig& ab) {
        CHECK(ab.A.empty());
        CHECK(ab.B.empty());
        count++;
    });
    CHECK(count == 1);

    LegTriple one(Partition{1}, {}, {}, 1);
    std::vector<ABConfig> got;
    enumerate_ab_all(one, 2, [&](const ABConfig& ab) { got.push_back(ab); });
    CHECK(got.size() == 3);
    for (const auto& ab : got) CHECK(ab.B.empty());
    std::set<std::vector<Box>> as;
    for (const auto& ab : got) as.insert(ab.A);
    CHECK(as.count({}));
    CHECK(as.count({Box{-1, 0, 0}}));
    CHECK(as.count({Box{-2, 0, 0}, Box{-1, 0, 0}}));

    LegTriple two(Partition{1}, Partition{1}, {}, 1);
    std::vector<ABConfig> got2;
    enumerate_ab_all(two, 1, [&](const ABConfig& ab) { got2.push_back(ab); });
    CHECK(got2.size() == 4);
}

TEST_CASE("ab closure holds for every emitted pair") {
    LegTriple legs(Partition{2, 1}, Partition{1}, Partition{1, 1}, 2);
    int count = 0;
    enumerate_ab_all(legs, 4, [&](const ABConfig& ab) {
        CHECK(ab_closure_holds(legs, ab));
        count++;
    });
    CHECK(count > 10);
    // determinism
    std::vector<std::pair<std::vector<Box>, std::vector<Box>>> r1, r2;
    enumerate_ab_all(legs, 3, [&](const ABConfig& ab) { r1.push_back({ab.A, ab.B}); });
    enumerate_ab_all(legs, 3, [&](const ABConfig& ab) { r2.push_back({ab.A, ab.B}); });
    CHECK(r1 == r2);
}
