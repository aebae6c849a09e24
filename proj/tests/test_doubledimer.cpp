#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "otv/doubledimer.hpp"

using namespace otv;

namespace {

ABConfig base_config_of(const LegTriple& legs) {
    ABConfig base;
    RegionSets r = region_sets(legs);
    base.A = r.III;
    base.B = r.II_all();
    base.B.insert(base.B.end(), r.III.begin(), r.III.end());
    std::sort(base.B.begin(), base.B.end());
    return base;
}

LegTriple conj_legs(const LegTriple& l) {
    return LegTriple(l.lambda.conjugate(), l.mu.conjugate(), l.nu.conjugate(), l.n);
}

} // namespace

TEST_CASE("patch shape") {
    for (int N : {2, 3, 5}) {
        const Patch& p = patch_cache(N);
        CHECK((int)p.triangles().size() == 6 * N * N);
        for (const Tri& t : p.triangles()) {
            int s = p.sector(t);
            CHECK(s >= 1);
            CHECK(s <= 3);
        }
    }
}

TEST_CASE("vacuum double dimer structure") {
    LegTriple vac({}, {}, {}, 1);
    int N = 6;
    const Patch& patch = patch_cache(N);
    HeightField ha(vac, HeightField::Side::A, {}, N + 3);
    HeightField hb(vac, HeightField::Side::B, {}, N + 3);
    for (const Tri& t : patch.triangles()) {
        Tri pa = matching_partner(t, ha);
        Tri pb = matching_partner(t, hb);
        CHECK(matching_partner(pa, ha) == t); // involution
        CHECK(matching_partner(pb, hb) == t);
    }
    DoubleDimer dd = superimpose(patch, ha, hb);
    CHECK(dd.loops == 0);
    CHECK(dd.doubled == 0);
    CHECK(dd.nodes.size() == (size_t)(6 * N));
    CHECK(dd.paths.size() == dd.nodes.size() / 2);
    int per_sector[4] = {0, 0, 0, 0};
    for (const auto& n : dd.nodes) per_sector[n.sector]++;
    CHECK(per_sector[1] == 2 * N);
    CHECK(per_sector[2] == 2 * N);
    CHECK(per_sector[3] == 2 * N);
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : dd.paths) {
        CHECK(dd.nodes[i].sector == dd.nodes[j].sector);
        seen.insert({std::min(i, j), std::max(i, j)});
    }
    CHECK(seen.size() == dd.paths.size());
}

TEST_CASE("node labels realize the Maya diagrams") {
    for (const char* ls : {";;", "1;;", "2;;", "2,1;;", ";1,1;", ";2,1;", ";;2", ";;2,1",
                           "1;1;1", "2,1;1,1;2"}) {
        LegTriple legs = LegTriple::parse(ls, 2);
        int N = stabilization_size(legs, 0);
        CHECK_NOTHROW(nodes(legs, N)); // nodes() asserts the Maya property
        auto ns = nodes(legs, N);
        int per_sector[4] = {0, 0, 0, 0};
        for (const auto& n : ns) per_sector[n.sector]++;
        for (int s = 1; s <= 3; ++s) CHECK(per_sector[s] % 2 == 0);
    }
}

TEST_CASE("base configurations are members and realize the rainbow pairing") {
    for (const char* ls : {";;", "1;;", "1;1;", "1;1;1", "2,1;1;2"}) {
        for (int n : {1, 2}) {
            LegTriple legs = LegTriple::parse(ls, n);
            ABConfig base = base_config_of(legs);
            CHECK(ab_membership(legs, base));
            int N = stabilization_size(legs, (int)(base.A.size() + base.B.size()));
            const Patch& patch = patch_cache(N);
            HeightField ha(legs, HeightField::Side::A, base.A, N + 3);
            HeightField hb(legs, HeightField::Side::B, base.B, N + 3);
            DoubleDimer dd = superimpose(patch, ha, hb);
            std::map<int, std::vector<int>> by_sector;
            for (int i = 0; i < (int)dd.nodes.size(); ++i)
                by_sector[dd.nodes[i].sector].push_back(i);
            std::map<int, int> pos;
            for (auto& [s, v] : by_sector)
                for (int k = 0; k < (int)v.size(); ++k) pos[v[k]] = k;
            for (auto [i, j] : dd.paths) {
                CHECK(dd.nodes[i].sector == dd.nodes[j].sector);
                int r = (int)by_sector[dd.nodes[i].sector].size();
                CHECK(pos[i] + pos[j] == r - 1); // nested pairing
            }
        }
    }
}

TEST_CASE("spec example: ((1),(1),0) with B = origin is a member") {
    LegTriple legs(Partition{1}, Partition{1}, {}, 1);
    ABConfig ab;
    ab.B = {Box{0, 0, 0}};
    CHECK(ab_membership(legs, ab));
    CHECK(labelled_box_filter(legs, ab));
    CHECK(ab_membership(legs, ABConfig{}));
    ABConfig bad;
    bad.A = {Box{-1, 0, 0}};
    CHECK_FALSE(ab_membership(legs, bad));
    CHECK_FALSE(labelled_box_filter(legs, bad));
}

TEST_CASE("membership agrees with the labelled-box filter") {
    std::vector<const char*> legsets = {"1;1;", "1;;1", ";1;1", "1;1;1", "2;1;",
                                        "1,1;1;1", "2;2;1", "2,1;1,1;2", "2;2,2;1"};
    int checked = 0;
    for (const char* ls : legsets)
        for (int n : {1, 2}) {
            LegTriple legs = LegTriple::parse(ls, n);
            enumerate_ab_all(legs, 4, [&](const ABConfig& ab) {
                bool dimer = ab_membership(legs, ab);
                bool oracle = labelled_box_filter(legs, ab);
                checked++;
                INFO("legs=", ls, " n=", n);
                CHECK(dimer == oracle);
            });
        }
    CHECK(checked > 800);
}

TEST_CASE("local moves change the patch weight by q_{i-j}^{-1} when adding") {
    std::vector<LegTriple> cases = {
        LegTriple(Partition{1}, Partition{1}, {}, 3),
        LegTriple(Partition{2}, Partition{1}, Partition{1}, 3),
        LegTriple(Partition{2, 1}, {}, Partition{2}, 4),
    };
    for (const auto& legs : cases) {
        std::vector<ABConfig> pool;
        enumerate_ab_all(legs, 3, [&](const ABConfig& ab) { pool.push_back(ab); });
        int moves = 0;
        int N = stabilization_size(legs, 6);
        for (const ABConfig& ab : pool) {
            for (const ABConfig& bigger : pool) {
                bool a_move = bigger.A.size() == ab.A.size() + 1 && bigger.B == ab.B &&
                              std::includes(bigger.A.begin(), bigger.A.end(), ab.A.begin(),
                                            ab.A.end());
                bool b_move = bigger.B.size() == ab.B.size() + 1 && bigger.A == ab.A &&
                              std::includes(bigger.B.begin(), bigger.B.end(), ab.B.begin(),
                                            ab.B.end());
                if (!a_move && !b_move) continue;
                if (++moves % 5 != 0) continue; // sample
                Box added{};
                if (a_move) {
                    for (const Box& b : bigger.A)
                        if (!std::binary_search(ab.A.begin(), ab.A.end(), b)) added = b;
                } else {
                    for (const Box& b : bigger.B)
                        if (!std::binary_search(ab.B.begin(), ab.B.end(), b)) added = b;
                }
                QMono before = ab_patch_weight(legs, ab, N);
                QMono after = ab_patch_weight(legs, bigger, N);
                QMono ratio = after;
                ratio *= before.inverse();
                QMono expect(legs.n);
                expect.mul(box_color(added, legs.n), -1);
                INFO("added box (", added.x, ",", added.y, ",", added.z, ")");
                CHECK(ratio == expect);
            }
        }
        CHECK(moves > 0);
    }
}

TEST_CASE("weight bookkeeping identity") {
    std::vector<LegTriple> cases = {
        LegTriple(Partition{1}, Partition{1}, {}, 2),
        LegTriple(Partition{1}, Partition{1}, Partition{1}, 3),
        LegTriple(Partition{2}, Partition{1, 1}, Partition{1}, 2),
    };
    for (const auto& legs : cases) {
        RegionSets r = region_sets(legs);
        ABConfig base = base_config_of(legs);
        int N = stabilization_size(legs, 5);
        QMono wbase = ab_patch_weight(legs, base, N);
        QMono rhs = wbase;
        for (int l = 0; l < legs.n; ++l) rhs.mul(l, r.II_colored[l] + 2 * r.III_colored[l]);
        int count = 0;
        enumerate_ab_all(legs, 4, [&](const ABConfig& ab) {
            if (++count % 5 != 0) return; // sample
            QMono lhs = ab_patch_weight(legs, ab, N);
            for (const Box& b : ab.A) lhs.mul(box_color(b, legs.n), 1);
            for (const Box& b : ab.B) lhs.mul(box_color(b, legs.n), 1);
            CHECK(lhs == rhs);
        });
        CHECK(count > 4);
    }
}

TEST_CASE("base weight matches the factored form at transposed legs") {
    for (const char* ls : {";;", "1;;", "2;;", "1;1;", "2,1;1;2", "1;1;1", "2;2,2;1,1"}) {
        for (int n : {1, 2, 3}) {
            LegTriple legs = LegTriple::parse(ls, n);
            int N = stabilization_size(legs, 0);
            QMono w = ab_patch_weight(legs, base_config_of(legs), N);
            QMono expect = pt_omega_base(conj_legs(legs), N);
            INFO("legs=", ls, " n=", n);
            CHECK(w == expect);
        }
    }
}

TEST_CASE("membership stability across sizes") {
    LegTriple legs(Partition{2}, Partition{1}, Partition{1}, 2);
    enumerate_ab_all(legs, 3, [&](const ABConfig& ab) {
        int N = stabilization_size(legs, (int)(ab.A.size() + ab.B.size()));
        bool v = ab_membership_at(legs, ab, N);
        CHECK(ab_membership_at(legs, ab, N + 2) == v);
        CHECK(ab_membership_at(legs, ab, N + 4) == v);
    });
}

TEST_CASE("ascii dump runs") {
    LegTriple legs(Partition{1}, Partition{1}, {}, 1);
    std::string dump = ascii_dump(legs, base_config_of(legs), 8);
    CHECK(dump.find("path") != std::string::npos);
}
