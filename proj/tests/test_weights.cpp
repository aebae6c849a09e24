#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "otv/dtvertex.hpp"
#include "otv/weights.hpp"

using namespace otv;

TEST_CASE("qmono basics") {
    QMono m(3);
    m.mul(4, 2);  // q_1^2
    m.mul(-1, 1); // q_2
    CHECK(m.e == std::vector<long long>{0, 2, 1});
    CHECK(m.total_degree() == 3);
    QMono b = qmono_bar(m);
    CHECK(b.e == std::vector<long long>{0, 1, 2});
    QMono prod = m.inverse();
    prod *= m;
    CHECK(prod.total_degree() == 0);
}

TEST_CASE("varpi and vartheta empty ranges are 1") {
    CHECK(varpi1(0, 0, 0, 2) == QMono(2));
    CHECK(varpi2({}, 5, 1, 2) == QMono(2));
    CHECK(vartheta5({}, 5, 1, 3) == QMono(3));
    CHECK(vartheta6({}, 5, 3) == QMono(3));
    // theta5 on empty partition is defined to be 1 by the case split
    CHECK(vartheta1({}, 1, 0, 1, 2) == QMono(2));
}

TEST_CASE("K monomials, small values") {
    // K1 at lambda = mu = (1), n = 1: q^{-1}
    LegTriple l1(Partition{1}, Partition{1}, {}, 1);
    QMono k1 = K_monomial(1, l1);
    CHECK(k1.e == std::vector<long long>{-1});
    // same legs, n = 2: q_0^{-1}
    LegTriple l2(Partition{1}, Partition{1}, {}, 2);
    QMono k12 = K_monomial(1, l2);
    CHECK(k12.e == std::vector<long long>{-1, 0});
    // K2 at lambda=(1), mu = {}, nu=(1), n=1: q^{-1}
    LegTriple l3(Partition{1}, {}, Partition{1}, 1);
    QMono k2 = K_monomial(2, l3);
    CHECK(k2.e == std::vector<long long>{-1});
    CHECK_THROWS_AS(K_monomial(1, LegTriple({}, Partition{1}, {}, 1)), error);
}

TEST_CASE("K1 n=1 collapse matches the closed exponent") {
    for (const Partition& l : partitions_up_to(5)) {
        if (l.empty()) continue;
        for (const Partition& m : partitions_up_to(4)) {
            if (m.empty()) continue;
            LegTriple legs(l, m, Partition{1}, 1);
            QMono k = K_monomial(1, legs);
            auto dl = diag_stats(l), dm = diag_stats(m);
            long long expect = dl.d + dm.d - m.conjugate().part(dm.d) - l.part(dl.d) - 1;
            CHECK(k.e[0] == expect);
        }
    }
}

TEST_CASE("K transpose symmetry") {
    CHECK(K_transpose_symmetry(LegTriple(Partition{1}, {}, Partition{1}, 2)));
    CHECK(K_transpose_symmetry(LegTriple(Partition{2, 1}, Partition{1}, Partition{2}, 3)));
    CHECK(K_transpose_symmetry(LegTriple(Partition{1}, Partition{2}, Partition{1, 1}, 1)));
    CHECK(K_transpose_symmetry(LegTriple(Partition{3, 1}, Partition{2, 2}, Partition{2, 1}, 4)));
}

TEST_CASE("quotient identities for all |eta| <= 8") {
    for (int n : {1, 2, 3}) {
        for (const Partition& eta : partitions_up_to(8)) {
            long long N0 = eta.part(1) + eta.length() + 3;
            for (long long N = N0; N <= N0 + 2; ++N) {
                for (const LemmaReport& r : quotient_identity_suite(eta, N, n)) {
                    INFO(r.id, " eta=", eta.str(), " N=", N, " n=", n, " ", r.detail);
                    CHECK(r.ok);
                }
            }
        }
    }
}

TEST_CASE("weight formulas explicit vs factored") {
    std::vector<LegTriple> cases = {
        {Partition{1}, Partition{1}, Partition{1}, 2},
        {Partition{2, 1}, Partition{1, 1}, Partition{2}, 2},
        {Partition{3, 1}, Partition{2}, Partition{2, 1}, 3},
        {Partition{2}, Partition{2, 2}, Partition{1, 1, 1}, 1},
        {Partition{1, 1}, Partition{3}, Partition{2, 2}, 4},
    };
    for (const auto& legs : cases) {
        long long N0 = 8;
        for (long long N = N0; N <= N0 + 2; ++N)
            for (const LemmaReport& r : weight_formula_suite(legs, N)) {
                INFO(r.id, " legs=", legs.str(), " N=", N, " ", r.detail);
                CHECK(r.ok);
            }
    }
}

TEST_CASE("K quotients: equal to q^{+-K} and independent of N") {
    std::vector<LegTriple> cases = {
        {Partition{1}, Partition{1}, Partition{1}, 1},
        {Partition{1}, Partition{1}, Partition{1}, 2},
        {Partition{2, 1}, Partition{1, 1}, Partition{2}, 2},
        {Partition{2, 2}, Partition{3, 1}, Partition{1, 1}, 3},
        {Partition{2, 2}, Partition{2, 2}, Partition{2, 2}, 2},
        {Partition{3, 3, 1}, Partition{2, 2, 2}, Partition{3, 2}, 3},
    };
    for (const auto& legs : cases) {
        std::vector<long long> Ns = {11, 12, 13};
        for (const LemmaReport& r : k_quotient_suite(legs, Ns)) {
            INFO(r.id, " legs=", legs.str(), " ", r.detail);
            CHECK(r.ok);
        }
    }
}
