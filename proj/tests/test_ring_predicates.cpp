#include <catch2/catch_amalgamated.hpp>

#include <graded/ring_predicates.hpp>

using namespace graded;

namespace {

const Limits lim;

// 2x2 matrices over GF(2), graded by Z4 via the degree tuple (0, 2).
// Basis order e11, e12, e21, e22.
FiniteGradedRing m2gf2_z4() {
    Group z4 = Group::cyclic(4);
    const std::vector<i64> d = {0, 2};
    std::vector<BasisVec> basis;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            basis.push_back({"e" + std::to_string(r + 1) + std::to_string(c + 1), 2,
                             z4.op(z4.inv(d[r]), d[c])});
    auto idx = [](int r, int c) { return static_cast<std::size_t>(r * 2 + c); };
    std::vector<std::vector<Coords>> mul(4, std::vector<Coords>(4, Coords(4, 0)));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int r2 = 0; r2 < 2; ++r2)
                for (int c2 = 0; c2 < 2; ++c2)
                    if (c == r2) mul[idx(r, c)][idx(r2, c2)][idx(r, c2)] = 1;
    Coords one(4, 0);
    one[0] = one[3] = 1;
    return FiniteGradedRing("m2_z4", z4, std::move(basis), std::move(mul), std::move(one));
}

// n x n matrices over GF(2) graded by G via a degree tuple d: deg e_rc =
// d_r^-1 d_c.
FiniteGradedRing matrix_ring(const std::string& name, const Group& G, const std::vector<i64>& d) {
    const int n = static_cast<int>(d.size());
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<BasisVec> basis;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            basis.push_back({"e" + std::to_string(r + 1) + std::to_string(c + 1), 2,
                             G.op(G.inv(d[static_cast<std::size_t>(r)]),
                                  d[static_cast<std::size_t>(c)])});
    auto idx = [n](int r, int c) { return static_cast<std::size_t>(r * n + c); };
    std::vector<std::vector<Coords>> mul(nn, std::vector<Coords>(nn, Coords(nn, 0)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (int r2 = 0; r2 < n; ++r2)
                for (int c2 = 0; c2 < n; ++c2)
                    if (c == r2) mul[idx(r, c)][idx(r2, c2)][idx(r, c2)] = 1;
    Coords one(nn, 0);
    for (int r = 0; r < n; ++r) one[idx(r, r)] = 1;
    return FiniteGradedRing(name, G, std::move(basis), std::move(mul), std::move(one));
}

// Gaussian integers mod 6, graded by Z2: deg 1 = 0, deg i = 1, i*i = -1.
FiniteGradedRing z6i() {
    std::vector<BasisVec> basis = {{"1", 6, 0}, {"i", 6, 1}};
    std::vector<std::vector<Coords>> mul = {{{1, 0}, {0, 1}}, {{0, 1}, {5, 0}}};
    return FiniteGradedRing("z6i", Group::cyclic(2), std::move(basis), std::move(mul), {1, 0});
}

// GF(9) = GF(3)[i], graded by Z2: deg 1 = 0, deg i = 1.
FiniteGradedRing gf9_z2() {
    std::vector<BasisVec> basis = {{"1", 3, 0}, {"i", 3, 1}};
    std::vector<std::vector<Coords>> mul = {{{1, 0}, {0, 1}}, {{0, 1}, {2, 0}}};
    return FiniteGradedRing("gf9_z2", Group::cyclic(2), std::move(basis), std::move(mul), {1, 0});
}

// GF(5) with everything in degree 0 of Z2.
FiniteGradedRing gf5_trivial() {
    std::vector<BasisVec> basis = {{"1", 5, 0}};
    std::vector<std::vector<Coords>> mul = {{{1}}};
    return FiniteGradedRing("gf5", Group::cyclic(2), std::move(basis), std::move(mul), {1});
}

// Z6 with everything in degree 0 of Z2.
FiniteGradedRing z6_trivial() {
    std::vector<BasisVec> basis = {{"1", 6, 0}};
    std::vector<std::vector<Coords>> mul = {{{1}}};
    return FiniteGradedRing("z6", Group::cyclic(2), std::move(basis), std::move(mul), {1});
}

}  // namespace

TEST_CASE("m2_z4 predicate battery") {
    FiniteGradedRing R = m2gf2_z4();

    PropertyReport supp = support_report(R);
    CHECK(supp.classification == "subgroup");
    CHECK(supp.witness["degrees"] == Json::array({"0", "2"}));

    CHECK(is_weak(R).holds());

    PropertyReport deg = degeneracy_class(R, lim);
    CHECK(deg.holds());
    CHECK(deg.classification == "nondegenerate_not_faithful");
    CHECK(deg.witness["element"] == "e22");
    CHECK(deg.witness["degree"] == "0");
    CHECK(deg.witness["annihilated_degree"] == "1");

    CHECK(is_regular(R, lim).holds());

    PropertyReport st = strongness_class(R, lim);
    CHECK(st.classification == "first_strong");
    CHECK(st.witness["failed"] == "strong");
    CHECK(st.witness["g"] == "1");
    CHECK(st.witness["h"] == "1");

    PropertyReport cr = crossed_class(R, lim);
    CHECK(cr.classification == "weakly_crossed");
    CHECK(cr.witness["no_unit_in_degree"] == "1");

    PropertyReport inv = is_invertible_graded(R, lim);
    CHECK(inv.fails());
    CHECK(inv.witness["reason"] == "zero_divisor");
    CHECK(inv.witness["a"] == "e22");
    CHECK(inv.witness["b"] == "e11");

    PropertyReport zd = zero_divisor_search(R, lim);
    CHECK(zd.holds());
    CHECK(zd.witness["a_degree"] == "0");
    CHECK(zd.witness["a"] == "e22");
    CHECK(zd.witness["b"] == "e11");

    CHECK(is_graded_simple(R, lim).holds());
    CHECK(identity_component_linear_report(R, lim).verdict == Verdict::not_applicable);

    PropertyReport cm = component_as_Re_module_report(R, 2, lim);
    CHECK(cm.classification == "cyclic_not_simple");
    CHECK(cm.witness["generator"] == "e12+e21");
    CHECK(cm.witness["non_generator"] == "e21");

    // simple ring: ideal lattice is 0 and R, and the zero ideal is not prime
    Stats s;
    const auto ideals = enumerate_graded_ideals(R, lim, &s);
    REQUIRE(ideals.size() == 2);
    CHECK(enumerate_graded_prime_ideals(R, ideals, lim).empty());
    PropertyReport su = is_semi_uniform_ring(R, lim);
    CHECK(su.holds());
    CHECK(su.vacuous);
}

TEST_CASE("z6i predicate battery") {
    FiniteGradedRing R = z6i();

    CHECK(support_report(R).classification == "subgroup");
    CHECK(is_weak(R).holds());
    CHECK(degeneracy_class(R, lim).classification == "faithful");
    CHECK(is_regular(R, lim).holds());
    CHECK(strongness_class(R, lim).classification == "strong");
    CHECK(crossed_class(R, lim).classification == "crossed");

    PropertyReport inv = is_invertible_graded(R, lim);
    CHECK(inv.fails());
    CHECK(inv.witness["reason"] == "zero_divisor");
    CHECK(inv.witness["a"] == "2");
    CHECK(inv.witness["b"] == "3");

    PropertyReport zd = zero_divisor_search(R, lim);
    CHECK(zd.holds());
    CHECK(zd.witness["a"] == "2");
    CHECK(zd.witness["b"] == "3");

    PropertyReport gs = is_graded_simple(R, lim);
    CHECK(gs.fails());
    CHECK(gs.witness["element"] == "2");
    CHECK(gs.witness["degree"] == "0");

    PropertyReport cm = component_as_Re_module_report(R, 1, lim);
    CHECK(cm.classification == "cyclic_not_simple");
    CHECK(cm.witness["generator"] == "i");
    CHECK(cm.witness["non_generator"] == "2*i");
}

TEST_CASE("gf9_z2 predicate battery") {
    FiniteGradedRing R = gf9_z2();

    CHECK(is_weak(R).holds());
    CHECK(degeneracy_class(R, lim).classification == "faithful");
    CHECK(is_regular(R, lim).holds());
    CHECK(strongness_class(R, lim).classification == "strong");
    CHECK(crossed_class(R, lim).classification == "crossed");
    CHECK(is_invertible_graded(R, lim).holds());
    CHECK(is_graded_simple(R, lim).holds());

    PropertyReport zd = zero_divisor_search(R, lim);
    CHECK(zd.fails());
    CHECK(zd.witness.empty());

    PropertyReport lin = identity_component_linear_report(R, lim);
    REQUIRE(lin.holds());
    CHECK(lin.witness["injective"] == false);
    REQUIRE(lin.witness["component_pairs"].size() == 1);
    CHECK(lin.witness["component_pairs"][0]["size_g"] == 3);
    CHECK(lin.witness["component_pairs"][0]["size_h"] == 3);
    CHECK(lin.witness["component_pairs"][0]["size_sum"] == 9);

    PropertyReport cm = component_as_Re_module_report(R, 1, lim);
    CHECK(cm.classification == "simple");
    CHECK(cm.witness["generator"] == "i");
}

TEST_CASE("trivially graded fields and Z6") {
    FiniteGradedRing F = gf5_trivial();

    CHECK(support_report(F).classification == "subgroup");
    CHECK(is_weak(F).holds());

    PropertyReport deg = degeneracy_class(F, lim);
    CHECK(deg.classification == "nondegenerate_not_faithful");
    CHECK(deg.witness["element"] == "1");
    CHECK(deg.witness["annihilated_degree"] == "1");

    PropertyReport st = strongness_class(F, lim);
    CHECK(st.classification == "first_strong");
    CHECK(st.witness["g"] == "1");
    CHECK(st.witness["h"] == "1");

    PropertyReport cr = crossed_class(F, lim);
    CHECK(cr.classification == "weakly_crossed");
    CHECK(cr.witness["no_unit_in_degree"] == "1");

    CHECK(is_invertible_graded(F, lim).holds());
    CHECK(is_graded_simple(F, lim).holds());
    CHECK(zero_divisor_search(F, lim).fails());

    PropertyReport lin = identity_component_linear_report(F, lim);
    REQUIRE(lin.holds());
    CHECK(lin.witness["injective"] == true);

    // field: only prime ideal is zero, nothing nonzero to test against
    PropertyReport su = is_semi_uniform_ring(F, lim);
    CHECK(su.holds());
    CHECK(su.vacuous);

    FiniteGradedRing Z = z6_trivial();
    Stats s;
    const auto ideals = enumerate_graded_ideals(Z, lim, &s);
    REQUIRE(ideals.size() == 4);
    CHECK(ideals[0].cardinality() == 6);
    CHECK(ideals[1].cardinality() == 3);
    CHECK(ideals[2].cardinality() == 2);
    CHECK(ideals[3].cardinality() == 1);

    const auto primes = enumerate_graded_prime_ideals(Z, ideals, lim);
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].cardinality() == 3);
    CHECK(primes[1].cardinality() == 2);

    CHECK(is_semi_essential_ideal(Z, ideals[0], primes, lim).holds());
    PropertyReport se = is_semi_essential_ideal(Z, ideals[1], primes, lim);
    CHECK(se.fails());
    CHECK(se.witness["missed_prime"]["cardinality"] == 2);

    PropertyReport su6 = is_semi_uniform_ring(Z, lim);
    CHECK(su6.fails());
    CHECK(su6.witness["ideal"]["cardinality"] == 3);
    CHECK(su6.witness["missed_prime"]["cardinality"] == 2);
}

TEST_CASE("m3 over Z7 with degree tuple (0,1,2)") {
    FiniteGradedRing R = matrix_ring("m3_z7", Group::cyclic(7), {0, 1, 2});

    PropertyReport supp = support_report(R);
    CHECK(supp.classification == "not_monoid");
    CHECK(supp.witness["degrees"] == Json::array({"0", "1", "2", "5", "6"}));

    CHECK(is_weak(R).holds());

    PropertyReport deg = degeneracy_class(R, lim);
    CHECK(deg.classification == "nondegenerate_not_faithful");
    CHECK(deg.witness["element"] == "e33");
    CHECK(deg.witness["annihilated_degree"] == "1");

    PropertyReport st = strongness_class(R, lim);
    CHECK(st.classification == "none");
    CHECK(st.witness["reason"] == "support_not_monoid");
    CHECK(st.witness["g"] == "1");
    CHECK(st.witness["h"] == "2");

    PropertyReport cr = crossed_class(R, lim);
    CHECK(cr.classification == "none");
    CHECK(cr.witness["no_unit_in_degree"] == "1");
    CHECK(cr.witness["degree_in_support"] == true);

    CHECK(is_regular(R, lim).holds());
    CHECK(is_graded_simple(R, lim).holds());

    PropertyReport cm = component_as_Re_module_report(R, 1, lim);
    CHECK(cm.classification == "cyclic_not_simple");
    CHECK(cm.witness["generator"] == "e12+e23");
}

TEST_CASE("m3 over Z2 with degree tuple (0,1,0)") {
    FiniteGradedRing R = matrix_ring("m3_z2", Group::cyclic(2), {0, 1, 0});

    CHECK(support_report(R).classification == "subgroup");
    CHECK(is_weak(R).holds());
    CHECK(strongness_class(R, lim).classification == "strong");
    CHECK(degeneracy_class(R, lim).classification == "faithful");

    // R_1 consists of singular matrices, so no component unit in degree 1
    PropertyReport cr = crossed_class(R, lim);
    CHECK(cr.classification == "none");
    CHECK(cr.witness["no_unit_in_degree"] == "1");
    CHECK(cr.witness["degree_in_support"] == true);

    CHECK(is_graded_simple(R, lim).holds());
}

TEST_CASE("m2 over the integers with degree tuple (0,1)") {
    FiniteGradedRing R = matrix_ring("m2_z", Group::integers(), {0, 1});

    PropertyReport supp = support_report(R);
    CHECK(supp.classification == "not_monoid");
    CHECK(supp.witness["degrees"] == Json::array({"0", "1", "-1"}));

    CHECK(is_weak(R).holds());

    PropertyReport deg = degeneracy_class(R, lim);
    CHECK(deg.classification == "nondegenerate_not_faithful");
    CHECK(deg.witness["element"] == "e22");
    CHECK(deg.witness["annihilated_degree"] == "1");

    PropertyReport st = strongness_class(R, lim);
    CHECK(st.classification == "none");
    CHECK(st.witness["reason"] == "support_not_monoid");
    CHECK(st.witness["g"] == "1");
    CHECK(st.witness["h"] == "1");

    PropertyReport cr = crossed_class(R, lim);
    CHECK(cr.classification == "none");
    CHECK(cr.witness["no_unit_in_degree"] == "1");

    CHECK(is_invertible_graded(R, lim).fails());
    CHECK(is_regular(R, lim).holds());
    CHECK(is_graded_simple(R, lim).holds());

    PropertyReport zd = zero_divisor_search(R, lim);
    CHECK(zd.holds());
    CHECK(zd.witness["a"] == "e22");
    CHECK(zd.witness["b"] == "e11");
}

TEST_CASE("monomial algebra over the integers, generator degree 1") {
    MonomialGradedRing R("kx_z", 2, Group::integers(), 1);

    CHECK(support_report(R).classification == "monoid_not_subgroup");

    PropertyReport wk = is_weak(R);
    CHECK(wk.fails());
    CHECK(wk.witness["zero_component"] == "-1");
    CHECK(wk.witness["nonzero_inverse_component"] == "1");

    PropertyReport deg = degeneracy_class(R);
    CHECK(deg.fails());
    CHECK(deg.classification == "degenerate");
    CHECK(deg.witness["element"] == "x");
    CHECK(deg.witness["degree"] == "1");
    CHECK(deg.witness["annihilated_degree"] == "-1");

    PropertyReport rg = is_regular(R);
    CHECK(rg.fails());
    CHECK(rg.witness["element"] == "x");

    PropertyReport st = strongness_class(R);
    CHECK(st.classification == "second_strong");
    CHECK(st.witness["failed"] == "first_strong");
    CHECK(st.witness["g"] == "1");

    PropertyReport cr = crossed_class(R);
    CHECK(cr.classification == "none");
    CHECK(cr.witness["no_unit_in_degree"] == "1");
    CHECK(cr.witness["degree_in_support"] == true);

    CHECK(is_invertible_graded(R).holds());
    CHECK(zero_divisor_search(R).fails());

    PropertyReport gs = is_graded_simple(R);
    CHECK(gs.fails());
    CHECK(gs.witness["element"] == "x");

    PropertyReport lin = identity_component_linear_report(R);
    REQUIRE(lin.holds());
    CHECK(lin.witness["injective"] == false);

    PropertyReport cm = component_as_Re_module_report(R, 3);
    CHECK(cm.classification == "simple");
    CHECK(cm.witness["generator"] == "x^3");
    CHECK(component_as_Re_module_report(R, -1).classification == "zero");
}

TEST_CASE("monomial algebra over the integers, generator degree 0") {
    MonomialGradedRing R("kx_z0", 2, Group::integers(), 0);

    CHECK(support_report(R).classification == "subgroup");
    CHECK(is_weak(R).holds());

    PropertyReport deg = degeneracy_class(R);
    CHECK(deg.classification == "nondegenerate_not_faithful");
    CHECK(deg.witness["annihilated_degree"] == "1");

    PropertyReport st = strongness_class(R);
    CHECK(st.classification == "first_strong");
    CHECK(st.witness["failed"] == "strong");
    CHECK(st.witness["g"] == "1");
    CHECK(st.witness["h"] == "-1");

    PropertyReport cr = crossed_class(R);
    CHECK(cr.classification == "weakly_crossed");
    CHECK(cr.witness["no_unit_in_degree"] == "1");

    PropertyReport inv = is_invertible_graded(R);
    CHECK(inv.fails());
    CHECK(inv.witness["a"] == "x");

    PropertyReport cm = component_as_Re_module_report(R, 0);
    CHECK(cm.classification == "cyclic_not_simple");
    CHECK(cm.witness["generator"] == "1");
    CHECK(cm.witness["non_generator"] == "x");
}

TEST_CASE("monomial algebra over Z3, generator degree 1") {
    MonomialGradedRing R("kx_z3", 2, Group::cyclic(3), 1);

    CHECK(support_report(R).classification == "subgroup");
    CHECK(is_weak(R).holds());
    CHECK(degeneracy_class(R).classification == "faithful");

    PropertyReport st = strongness_class(R);
    CHECK(st.classification == "none");
    CHECK(st.witness["reason"] == "component_product_proper");
    CHECK(st.witness["g"] == "1");
    CHECK(st.witness["h"] == "2");

    PropertyReport cr = crossed_class(R);
    CHECK(cr.classification == "none");
    CHECK(cr.witness["no_unit_in_degree"] == "1");

    PropertyReport inv = is_invertible_graded(R);
    CHECK(inv.fails());
    CHECK(inv.witness["a"] == "x^3");

    PropertyReport rg = is_regular(R);
    CHECK(rg.fails());
    CHECK(rg.witness["element"] == "x");

    PropertyReport gs = is_graded_simple(R);
    CHECK(gs.fails());
    CHECK(gs.witness["element"] == "x");

    PropertyReport cm = component_as_Re_module_report(R, 2);
    CHECK(cm.classification == "cyclic_not_simple");
    CHECK(cm.witness["generator"] == "x^2");
    CHECK(cm.witness["non_generator"] == "x^5");
}

TEST_CASE("monomial algebra over Z4, generator degree 2") {
    MonomialGradedRing R("kx_z4g2", 2, Group::cyclic(4), 2);

    PropertyReport supp = support_report(R);
    CHECK(supp.classification == "subgroup");
    CHECK(supp.witness["degrees"] == Json::array({"0", "2"}));

    CHECK(is_weak(R).holds());
    CHECK(degeneracy_class(R).classification == "nondegenerate_not_faithful");

    PropertyReport st = strongness_class(R);
    CHECK(st.classification == "none");
    CHECK(st.witness["reason"] == "component_product_proper");
    CHECK(st.witness["g"] == "2");
    CHECK(st.witness["h"] == "2");

    PropertyReport cr = crossed_class(R);
    CHECK(cr.classification == "none");
    CHECK(cr.witness["no_unit_in_degree"] == "2");

    PropertyReport inv = is_invertible_graded(R);
    CHECK(inv.fails());
    CHECK(inv.witness["a"] == "x^2");

    PropertyReport cm = component_as_Re_module_report(R, 2);
    CHECK(cm.classification == "cyclic_not_simple");
    CHECK(cm.witness["generator"] == "x");
    CHECK(cm.witness["non_generator"] == "x^3");
}

TEST_CASE("caps turn scans into aborted verdicts") {
    FiniteGradedRing R = z6i();
    Limits tiny;
    tiny.pair_scan_cap = 2;
    PropertyReport zd = zero_divisor_search(R, tiny);
    CHECK(zd.verdict == Verdict::aborted_cap);
    CHECK_FALSE(zd.decided());

    Limits small_lattice;
    small_lattice.lattice_cap = 2;
    FiniteGradedRing Z = z6_trivial();
    Stats s;
    CHECK_THROWS_AS(enumerate_graded_ideals(Z, small_lattice, &s), cap_reached);
}
