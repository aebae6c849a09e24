#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "otv/ptvertex.hpp"
#include "otv/dtvertex.hpp"

using namespace otv;

TEST_CASE("enum examples") {
    // W^n_{000} = 1
    for (int n : {1, 2, 3}) {
        Series w = pt_vertex_enum(LegTriple({}, {}, {}, n), 3);
        CHECK(w.terms().size() == 1);
        CHECK(w.coeff(Exps(n, 0)) == 1);
    }
    // W^1_{00(1)} = 1 + q + q^2 + q^3
    Series w1 = pt_vertex_enum(LegTriple({}, {}, Partition{1}, 1), 3);
    for (int k = 0; k <= 3; ++k) CHECK(w1.coeff({(int32_t)k}) == 1);
    CHECK(w1.terms().size() == 4);

    // W^2_{(1)00} to degree 4 = 1 + q_1 + q_0 q_1 + q_0 q_1^2 + q_0^2 q_1^2
    Series w2 = pt_vertex_enum(LegTriple(Partition{1}, {}, {}, 2), 4);
    CHECK(w2.coeff({0, 0}) == 1);
    CHECK(w2.coeff({0, 1}) == 1);
    CHECK(w2.coeff({1, 1}) == 1);
    CHECK(w2.coeff({1, 2}) == 1);
    CHECK(w2.coeff({2, 2}) == 1);
    CHECK(w2.terms().size() == 5);

    // W^1_{(1)(1)0} = q^{-1} + 1 + 2q + 3q^2
    Series w3 = pt_vertex_enum(LegTriple(Partition{1}, Partition{1}, {}, 1), 2);
    CHECK(w3.coeff({-1}) == 1);
    CHECK(w3.coeff({0}) == 1);
    CHECK(w3.coeff({1}) == 2);
    CHECK(w3.coeff({2}) == 3);
    CHECK(w3.floor() == -1);
}

TEST_CASE("closed examples") {
    Series c1 = pt_vertex_closed(LegTriple({}, {}, Partition{1}, 1), 3);
    for (int k = 0; k <= 3; ++k) CHECK(c1.coeff({(int32_t)k}) == 1);

    Series c2 = pt_vertex_closed(LegTriple(Partition{1}, Partition{1}, {}, 1), 2);
    CHECK(c2.coeff({-1}) == 1);
    CHECK(c2.coeff({0}) == 1);
    CHECK(c2.coeff({1}) == 2);
    CHECK(c2.coeff({2}) == 3);

    Series c3 = pt_vertex_closed(LegTriple({}, {}, Partition{1}, 2), 2);
    CHECK(c3.coeff({0, 0}) == 1);
    CHECK(c3.coeff({1, 0}) == 1);
    CHECK(c3.coeff({2, 0}) == 1);
    CHECK(c3.coeff({1, 1}) == 0);

    CHECK_THROWS_AS(pt_vertex_closed(LegTriple(Partition{1}, {}, Partition{1}, 2), 2), error);
}

TEST_CASE("dt ratio examples") {
    Series r1 = pt_vertex_dt_ratio(LegTriple(Partition{1}, {}, {}, 1), 2);
    CHECK(r1.coeff({0}) == 1);
    CHECK(r1.coeff({1}) == 1);
    CHECK(r1.coeff({2}) == 1);

    LegTriple l2({}, {}, Partition{1, 1}, 2);
    CHECK(equal_to_degree(pt_vertex_dt_ratio(l2, 3), pt_vertex_enum(l2, 3), 3));

    // negative control: nu = (1) is not multi-regular for n = 2
    LegTriple l3({}, {}, Partition{1}, 2);
    CHECK_THROWS_AS(pt_vertex_dt_ratio(l3, 3), error);
    Series forced = pt_vertex_dt_ratio(l3, 3, true);
    CHECK_FALSE(equal_to_degree(forced, pt_vertex_enum(l3, 3), 3));
}

TEST_CASE("triangulation on valid cases") {
    std::vector<LegTriple> cases = {
        {Partition{1}, Partition{1}, Partition{1}, 1},
        {Partition{2}, Partition{1}, Partition{1}, 1},
        {Partition{1}, Partition{1}, Partition{1, 1}, 2},
        {Partition{2}, Partition{1}, {}, 2},
        {Partition{1, 1}, Partition{2}, {}, 3},
        {{}, {}, Partition{2, 1}, 3},
    };
    for (const auto& legs : cases) {
        INFO("legs=", legs.str(), " n=", legs.n);
        int D = 3;
        Series we = pt_vertex_enum(legs, D);
        Series wc = pt_vertex_closed(legs, D);
        CHECK(equal_to_degree(we, wc, D));
        if (is_multi_regular(legs.nu, legs.n)) {
            Series wr = pt_vertex_dt_ratio(legs, D);
            CHECK(equal_to_degree(we, wr, D));
        }
    }
}

TEST_CASE("bar transpose symmetry") {
    CHECK(pt_symmetry_check(LegTriple({}, {}, {}, 1), 3));
    CHECK(pt_symmetry_check(LegTriple(Partition{1}, {}, {}, 2), 4));
    CHECK(pt_symmetry_check(LegTriple(Partition{1}, Partition{1}, {}, 3), 3));
    CHECK(pt_symmetry_check(LegTriple(Partition{2}, Partition{1}, Partition{1}, 2), 3));
}

TEST_CASE("n=1 specialization matches the collapsed colored vertex") {
    for (const char* ls : {"1;;", "1;1;", ";;1,1"}) {
        LegTriple l2 = LegTriple::parse(ls, 2);
        LegTriple l1 = LegTriple::parse(ls, 1);
        Series w2 = pt_vertex_enum(l2, 3);
        Series w1 = pt_vertex_enum(l1, 3);
        CHECK(equal_to_degree(collapse_to_single(w2, qvars(1)), w1, 3));
    }
}

TEST_CASE("O_nu") {
    // multi-regular: all exponents vanish
    Series o1 = O_nu(Partition{1, 1}, 2, 3);
    CHECK(o1.terms().size() == 1);
    CHECK(o1.coeff({0, 0}) == 1);
    // n = 1: always 1
    Series o2 = O_nu(Partition{3, 1}, 1, 4);
    CHECK(o2.terms().size() == 1);
    // corrected one-leg identity for nu=(1), n=2:
    // V_{00nu} = O_nu * V_000 * W_{00nu}
    int D = 4;
    LegTriple legs({}, {}, Partition{1}, 2);
    Series v = dt_vertex(legs, D);
    Series vac = dt_vertex(LegTriple({}, {}, {}, 2), D);
    Series w = pt_vertex_enum(legs, D);
    Series rhs = multiply(multiply(O_nu(Partition{1}, 2, D), vac).truncated(D), w).truncated(D);
    CHECK(equal_to_degree(v.truncated(rhs.trunc()), rhs, rhs.trunc()));
    // and the plain identity fails
    Series plain = multiply(vac, w).truncated(D);
    CHECK_FALSE(equal_to_degree(v.truncated(plain.trunc()), plain, plain.trunc()));
}

TEST_CASE("degree law and truncation stability") {
    LegTriple legs(Partition{1}, Partition{1}, Partition{1}, 2);
    Series a = pt_vertex_enum(legs, 2);
    Series b = pt_vertex_enum(legs, 3).truncated(2);
    CHECK(a.terms() == b.terms());
    RegionSets r = region_sets(legs);
    CHECK(a.floor() == -(int)(r.II_total + 2 * r.III_total));
    CHECK(a.min_degree() == a.floor());
}
