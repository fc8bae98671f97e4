#include <catch2/catch_amalgamated.hpp>

#include <graded/monomial.hpp>

using namespace graded;

TEST_CASE("monomial ring over the integers") {
    MonomialGradedRing R("kx_z", 2, Group::integers(), 1);
    CHECK(R.q() == 2);
    CHECK(R.gamma() == 1);
    CHECK(R.component_exponents(0) == Eps::finite({0}));
    CHECK(R.component_exponents(3) == Eps::finite({3}));
    CHECK(R.component_exponents(-1).empty());
    CHECK(R.in_support(5));
    CHECK_FALSE(R.in_support(-2));
    CHECK(R.support_generator() == 1);
    CHECK_THROWS_AS(R.support_finite(), input_error);

    MonomialGradedRing S("kx_z2step", 3, Group::integers(), 2);
    CHECK(S.component_exponents(4) == Eps::finite({2}));
    CHECK(S.component_exponents(3).empty());
    CHECK(S.component_exponents(-2).empty());

    MonomialGradedRing T("kx_triv", 5, Group::integers(), 0);
    CHECK(T.component_exponents(0) == Eps::naturals());
    CHECK(T.component_exponents(1).empty());
    CHECK(T.support_generator() == 0);
}

TEST_CASE("monomial ring over a cyclic group") {
    MonomialGradedRing R("kx_z3", 2, Group::cyclic(3), 1);
    CHECK(R.component_exponents(0) == Eps::progression(0, 3));
    CHECK(R.component_exponents(1) == Eps::progression(1, 3));
    CHECK(R.component_exponents(2) == Eps::progression(2, 3));
    CHECK(R.support_finite() == std::vector<i64>{0, 1, 2});
    CHECK(R.support_generator() == 1);

    MonomialGradedRing S("kx_z4even", 2, Group::cyclic(4), 2);
    CHECK(S.component_exponents(0) == Eps::progression(0, 2));
    CHECK(S.component_exponents(1).empty());
    CHECK(S.component_exponents(2) == Eps::progression(1, 2));
    CHECK(S.support_finite() == std::vector<i64>{0, 2});
    CHECK(S.support_generator() == 2);

    MonomialGradedRing T("kx_z6triv", 7, Group::cyclic(6), 0);
    CHECK(T.component_exponents(0) == Eps::naturals());
    CHECK(T.component_exponents(3).empty());
    CHECK(T.support_finite() == std::vector<i64>{0});
    CHECK(T.support_generator() == 6);

    // degree normalization
    MonomialGradedRing U("kx_wrap", 2, Group::cyclic(3), 7);
    CHECK(U.gamma() == 1);
    CHECK(U.component_exponents(-2) == U.component_exponents(1));
}

TEST_CASE("monomial ring validation") {
    CHECK_THROWS_AS(MonomialGradedRing("bad", 4, Group::integers(), 1), input_error);
    CHECK_THROWS_AS(MonomialGradedRing("bad", 1, Group::integers(), 1), input_error);
    CHECK_THROWS_AS(MonomialGradedRing("bad", 2, Group::dihedral(3), 1), input_error);
    CHECK_NOTHROW(MonomialGradedRing("ok", 97, Group::cyclic(5), 3));

    CHECK(MonomialGradedRing::is_prime(2));
    CHECK(MonomialGradedRing::is_prime(97));
    CHECK_FALSE(MonomialGradedRing::is_prime(1));
    CHECK_FALSE(MonomialGradedRing::is_prime(91));
}
