#include <catch2/catch_amalgamated.hpp>

#include <graded/module.hpp>

using namespace graded;

namespace {

// Z12 as a trivially Z2-graded ring.
FiniteGradedRing z12_ring() {
    std::vector<BasisVec> basis = {{"1", 12, 0}};
    std::vector<std::vector<Coords>> mul = {{{1}}};
    return FiniteGradedRing("z12", Group::cyclic(2), std::move(basis), std::move(mul), {1});
}

// Gaussian integers mod 12 as a graded Z12-module: M_0 = Z12, M_1 = i Z12.
FiniteGradedModule z12i_module() {
    std::vector<BasisVec> basis = {{"u", 12, 0}, {"v", 12, 1}};
    std::vector<std::vector<Coords>> act = {{{1, 0}, {0, 1}}};
    return FiniteGradedModule("z12i", z12_ring(), std::move(basis), std::move(act));
}

FiniteGradedRing z6i_ring() {
    std::vector<BasisVec> basis = {{"1", 6, 0}, {"i", 6, 1}};
    std::vector<std::vector<Coords>> mul = {{{1, 0}, {0, 1}}, {{0, 1}, {5, 0}}};
    return FiniteGradedRing("z6i", Group::cyclic(2), std::move(basis), std::move(mul), {1, 0});
}

// d * M for the Gaussian module
GradedSubgroup scaled(const FiniteGradedModule& M, i64 d, const Limits& lim) {
    return submodule_closure(M, {{0, {mod_norm(d, 12), 0}}, {1, {0, mod_norm(d, 12)}}}, lim);
}

}  // namespace

TEST_CASE("module arithmetic and action") {
    FiniteGradedModule M = z12i_module();
    CHECK(M.dim() == 2);
    CHECK(M.support() == std::vector<i64>{0, 1});
    CHECK(M.module_size() == 144);
    CHECK(M.component_size(0) == 12);
    CHECK(M.component_size(1) == 12);

    CHECK(M.act({5}, {2, 3}) == Coords{10, 3});
    CHECK(M.act({0}, {2, 3}) == M.zero());
    CHECK(M.add({7, 0}, {7, 11}) == Coords{2, 11});

    i64 deg = -1;
    CHECK(M.is_homogeneous({0, 4}, &deg));
    CHECK(deg == 1);
    CHECK_FALSE(M.is_homogeneous({1, 4}));
    CHECK(M.decompose({3, 4}).size() == 2);
}

TEST_CASE("submodule closure and colon ideals") {
    FiniteGradedModule M = z12i_module();
    Limits lim;
    Stats st;

    GradedSubgroup six = scaled(M, 6, lim);
    REQUIRE(six.part(0) != nullptr);
    REQUIRE(six.part(1) != nullptr);
    CHECK(*six.part(0) == std::vector<Coords>{{0, 0}, {6, 0}});
    CHECK(*six.part(1) == std::vector<Coords>{{0, 0}, {0, 6}});
    CHECK(six.cardinality() == 4);
    CHECK(is_submodule(M, six));

    GradedSubgroup colon = colon_ideal(M, six, lim, &st);
    REQUIRE(colon.part(0) != nullptr);
    CHECK(*colon.part(0) == std::vector<Coords>{{0}, {6}});

    CHECK(annihilator(M, lim).is_zero());

    GradedSubgroup ce = colon_of_element(M, six, 0, {3, 0}, lim, &st);
    REQUIRE(ce.part(0) != nullptr);
    CHECK(*ce.part(0) == std::vector<Coords>{{0}, {2}, {4}, {6}, {8}, {10}});

    // a graded subgroup that is not a submodule: the span of 1 inside the
    // ring z6i viewed as a module over itself (i*1 leaves it)
    FiniteGradedModule R = ring_as_module(z6i_ring(), "z6i_self");
    GradedSubgroup span1 = additive_closure(R, {{0, {1, 0}}}, lim);
    CHECK_FALSE(is_submodule(R, span1));
    GradedSubgroup all = submodule_closure(R, {{1, {0, 1}}}, lim);
    CHECK(subgroup_is_whole_carrier(R, all));

    // annihilator of the quotient-like module z12i scaled: ann of M is 0 but
    // colon of <2> is {0,2,...,10}
    GradedSubgroup two = scaled(M, 2, lim);
    GradedSubgroup c2 = colon_ideal(M, two, lim);
    REQUIRE(c2.part(0) != nullptr);
    CHECK(c2.part(0)->size() == 6);
}

TEST_CASE("quotient modules") {
    FiniteGradedModule M = z12i_module();
    Limits lim;

    GradedSubgroup three = scaled(M, 3, lim);
    FiniteGradedModule Q = quotient_module(M, three, "q3");
    CHECK(Q.dim() == 2);
    CHECK(Q.module_size() == 9);
    CHECK(Q.basis(0).order == 3);
    CHECK(Q.basis(1).order == 3);
    CHECK(Q.support() == std::vector<i64>{0, 1});

    FiniteGradedModule Q0 = quotient_module(M, GradedSubgroup(SubRole::submodule), "q0");
    CHECK(Q0.module_size() == 144);

    GradedSubgroup whole = whole_carrier_subgroup(M, lim, nullptr, SubRole::submodule);
    FiniteGradedModule Qw = quotient_module(M, whole, "qw");
    CHECK(Qw.dim() == 0);
    CHECK(Qw.module_size() == 1);

    // not a submodule: the additive span of 1 in z6i over itself
    FiniteGradedModule R = ring_as_module(z6i_ring(), "z6i_self");
    GradedSubgroup span1 = additive_closure(R, {{0, {1, 0}}}, lim);
    CHECK_THROWS_AS(quotient_module(R, span1, "bad"), input_error);

    // mixed orders: (Z2 + Z4) / <(1,2)> is cyclic of order 4
    FiniteGradedRing z4("z4", Group::cyclic(2), {{"1", 4, 0}}, {{{1}}}, {1});
    FiniteGradedModule Mix("mix", z4, {{"a", 2, 0}, {"b", 4, 0}},
                           {{{1, 0}, {0, 1}}});
    GradedSubgroup d = additive_closure(Mix, {{0, {1, 2}}}, lim);
    REQUIRE(is_submodule(Mix, d));
    FiniteGradedModule Qm = quotient_module(Mix, d, "qm");
    CHECK(Qm.dim() == 1);
    CHECK(Qm.basis(0).order == 4);
}

TEST_CASE("restricted modules") {
    FiniteGradedModule M = z12i_module();
    Limits lim;

    FiniteGradedModule N2 = restrict_module(M, scaled(M, 2, lim), "n2");
    CHECK(N2.dim() == 2);
    CHECK(N2.module_size() == 36);
    CHECK(N2.basis(0).order == 6);
    CHECK(N2.basis(1).order == 6);
    CHECK(N2.support() == std::vector<i64>{0, 1});

    FiniteGradedModule N6 = restrict_module(M, scaled(M, 6, lim), "n6");
    CHECK(N6.module_size() == 4);
    CHECK(N6.basis(0).order == 2);

    // restricting the mixed-order diagonal gives Z2
    FiniteGradedRing z4("z4", Group::cyclic(2), {{"1", 4, 0}}, {{{1}}}, {1});
    FiniteGradedModule Mix("mix", z4, {{"a", 2, 0}, {"b", 4, 0}},
                           {{{1, 0}, {0, 1}}});
    GradedSubgroup d = additive_closure(Mix, {{0, {1, 2}}}, lim);
    FiniteGradedModule Nd = restrict_module(Mix, d, "nd");
    CHECK(Nd.dim() == 1);
    CHECK(Nd.basis(0).order == 2);

    // restriction of the zero submodule is the zero module
    FiniteGradedModule N0 = restrict_module(M, GradedSubgroup(SubRole::submodule), "n0");
    CHECK(N0.dim() == 0);
}

TEST_CASE("module homomorphisms") {
    FiniteGradedModule M = z12i_module();
    Limits lim;

    GradedModuleHom dbl(M, M, {{2, 0}, {0, 2}});
    CHECK(dbl.apply({3, 5}) == Coords{6, 10});
    GradedSubgroup ker = dbl.kernel(lim);
    REQUIRE(ker.part(0) != nullptr);
    CHECK(*ker.part(0) == std::vector<Coords>{{0, 0}, {6, 0}});
    CHECK(ker.cardinality() == 4);
    CHECK_FALSE(dbl.injective(lim));
    CHECK_FALSE(dbl.surjective(lim));
    CHECK(dbl.image(lim).cardinality() == 36);

    GradedModuleHom id(M, M, {{1, 0}, {0, 1}});
    CHECK(id.injective(lim));
    CHECK(id.surjective(lim));

    // projection onto the degree-0 part, landing in the ring
    FiniteGradedModule R = ring_as_module(z12_ring(), "z12_self");
    GradedModuleHom proj(M, R, {{1}, {0}});
    CHECK(proj.surjective(lim));
    GradedSubgroup pk = proj.kernel(lim);
    CHECK(pk.part(0) == nullptr);
    REQUIRE(pk.part(1) != nullptr);
    CHECK(pk.part(1)->size() == 12);

    // image of a wrong degree is rejected
    CHECK_THROWS_AS(GradedModuleHom(M, M, {{0, 1}, {0, 1}}), input_error);
    // additive order not respected: Z2 source mapping to an order-4 element
    FiniteGradedModule N6 = restrict_module(M, scaled(M, 6, lim), "n6");
    CHECK_THROWS_AS(GradedModuleHom(N6, M, {{3, 0}, {0, 3}}), input_error);
    CHECK_NOTHROW(GradedModuleHom(N6, M, {{6, 0}, {0, 6}}));
    // not linear: on z6i over itself, f(1) = 1 forces f(i) = i
    FiniteGradedModule S = ring_as_module(z6i_ring(), "z6i_self");
    CHECK_THROWS_AS(GradedModuleHom(S, S, {{1, 0}, {0, 5}}), input_error);
    CHECK_NOTHROW(GradedModuleHom(S, S, {{1, 0}, {0, 1}}));
    // modules over different rings
    CHECK_THROWS_AS(GradedModuleHom(M, S, {{1, 0}, {0, 1}}), input_error);
}

TEST_CASE("module validation rejects bad input") {
    FiniteGradedRing R = z12_ring();

    // grading violated: 1 * v lands on u
    CHECK_THROWS_AS(FiniteGradedModule("bad", R, {{"u", 12, 0}, {"v", 12, 1}},
                                       {{{1, 0}, {1, 0}}}),
                    input_error);

    // unit action fails
    CHECK_THROWS_AS(FiniteGradedModule("bad", R, {{"u", 12, 0}}, {{{2}}}), input_error);

    // additive orders inconsistent: Z2 ring cannot act unitally on Z4
    FiniteGradedRing z2("z2", Group::cyclic(2), {{"1", 2, 0}}, {{{1}}}, {1});
    CHECK_THROWS_AS(FiniteGradedModule("bad", z2, {{"m", 4, 0}}, {{{1}}}), input_error);

    // associativity: corrupt i*(i*1) inside z6i acting on itself
    {
        FiniteGradedRing S = z6i_ring();
        std::vector<std::vector<Coords>> act = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
        CHECK_THROWS_AS(FiniteGradedModule("bad", S, S.basis_list(), std::move(act)),
                        input_error);
    }

    // action table size mismatch
    CHECK_THROWS_AS(FiniteGradedModule("bad", R, {{"u", 12, 0}}, {}), input_error);

    // duplicate names
    CHECK_THROWS_AS(FiniteGradedModule("bad", R, {{"u", 12, 0}, {"u", 12, 1}},
                                       {{{1, 0}, {0, 1}}}),
                    input_error);
}

TEST_CASE("quotient and restriction respect the action") {
    // in z6i over itself, the ideal generated by 3+3i is {0, 3+3i}: not
    // graded, so instead use the graded ideal generated by 3: parts {0,3}
    // and {0,3i}; the quotient has size 9
    FiniteGradedModule R = ring_as_module(z6i_ring(), "z6i_self");
    Limits lim;
    GradedSubgroup I = submodule_closure(R, {{0, {3, 0}}}, lim);
    CHECK(I.cardinality() == 4);
    FiniteGradedModule Q = quotient_module(R, I, "q");
    CHECK(Q.module_size() == 9);
    CHECK(Q.basis(0).order == 3);
    CHECK(Q.basis(1).order == 3);
    // i * i = -1 survives in the quotient: acting twice by i on the degree-1
    // generator gives 2 = -1 mod 3 times the degree-0 generator
    const FiniteGradedRing& S = Q.ring();
    Coords gen1 = Q.basis_elem(Q.basis(0).degree == 1 ? 0 : 1);
    Coords once = Q.act(S.basis_elem(1), gen1);
    CHECK(Q.is_homogeneous(once));
    Coords twice = Q.act(S.basis_elem(1), once);
    CHECK(twice == Q.smul(2, gen1));

    FiniteGradedModule N = restrict_module(R, I, "n");
    CHECK(N.module_size() == 4);
    // inside N = {0,3} + {0,3i}, i acts by swapping the two generators:
    // i*3 = 3i and i*3i = -3 = 3
    Coords n0 = N.basis_elem(N.basis(0).degree == 0 ? 0 : 1);
    Coords n1 = N.basis_elem(N.basis(0).degree == 0 ? 1 : 0);
    CHECK(N.act(S.basis_elem(1), n0) == n1);
    CHECK(N.act(S.basis_elem(1), n1) == n0);
}
