#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <graded/fixtures.hpp>
#include <graded/io.hpp>

using namespace graded;

namespace {

std::string temp_path(const std::string& stem) {
    return std::string("/tmp/graded_io_test_") + stem + ".json";
}

}  // namespace

TEST_CASE("group descriptors round-trip") {
    for (const Group& G : {Group::cyclic(1), Group::cyclic(4), Group::dihedral(5),
                           Group::integers(), Group::direct_product(Group::cyclic(2), Group::cyclic(2))}) {
        const Json j = group_to_json(G);
        const Group back = group_from_json(j, "g");
        CHECK(back == G);
        CHECK(group_to_json(back) == j);
    }
    CHECK(group_to_json(Group::cyclic(4))["type"] == "cyclic");
    CHECK(group_to_json(Group::dihedral(5))["type"] == "dihedral");
    CHECK(group_to_json(Group::dihedral(5))["n"] == 5);
    CHECK(group_to_json(Group::integers())["type"] == "integers");
    CHECK(group_to_json(Group::direct_product(Group::cyclic(2), Group::cyclic(2)))["type"] ==
          "table");
}

TEST_CASE("parse and serialize are inverse on every fixture") {
    for (const std::string& name : fixture_names()) {
        const Fixture f = build_fixture(name);
        if (f.ring) {
            const Json j = ring_to_json(*f.ring);
            const FiniteGradedRing back = ring_from_json(j, name);
            CHECK(ring_equal(back, *f.ring));
            CHECK(back.name() == f.ring->name());
            CHECK(ring_to_json(back) == j);
        } else if (f.monomial) {
            const Json j = monomial_to_json(*f.monomial);
            const MonomialGradedRing back = monomial_from_json(j, name);
            CHECK(monomial_equal(back, *f.monomial));
            CHECK(monomial_to_json(back) == j);
        } else {
            const Json j = module_to_json(*f.module);
            const FiniteGradedModule back = module_from_json(j, name, ".");
            CHECK(module_equal(back, *f.module));
            CHECK(module_to_json(back) == j);
        }
    }
}

TEST_CASE("module files may reference the ring by file") {
    const Fixture f = build_fixture("z12i");
    const std::string ring_path = temp_path("ring");
    write_text_file(ring_path, dump_json(ring_to_json(f.module->ring())));

    Json mj = module_to_json(*f.module);
    mj["ring"] = Json{{"file", "graded_io_test_ring.json"}};
    const std::string mod_path = temp_path("module");
    write_text_file(mod_path, dump_json(mj));

    const ParsedStructure s = parse_structure_file(mod_path);
    REQUIRE(s.kind == "finite_graded_module");
    CHECK(module_equal(*s.module, *f.module));
    std::remove(ring_path.c_str());
    std::remove(mod_path.c_str());
}

TEST_CASE("parse errors carry position and context") {
    CHECK_THROWS_WITH(parse_json_text("{\n  \"kind\": oops\n}", "bad.json"),
                      Catch::Matchers::ContainsSubstring("bad.json") &&
                          Catch::Matchers::ContainsSubstring("line 2"));

    Json j = ring_to_json(*build_fixture("gf9_z2").ring);
    j.erase("one");
    CHECK_THROWS_WITH(ring_from_json(j, "gf9.json"),
                      Catch::Matchers::ContainsSubstring("gf9.json: missing field 'one'"));

    Json j2 = ring_to_json(*build_fixture("gf9_z2").ring);
    j2["mul"][0][0] = "nope";
    CHECK_THROWS_WITH(ring_from_json(j2, "gf9.json"),
                      Catch::Matchers::ContainsSubstring("mul[0]") &&
                          Catch::Matchers::ContainsSubstring("nope"));

    Json j3 = ring_to_json(*build_fixture("gf9_z2").ring);
    j3["mul"].push_back(j3["mul"][0]);
    CHECK_THROWS_WITH(ring_from_json(j3, "gf9.json"),
                      Catch::Matchers::ContainsSubstring("duplicate product"));

    Json j4 = ring_to_json(*build_fixture("gf9_z2").ring);
    j4["basis"][0]["degree"] = "9";
    CHECK_THROWS_AS(ring_from_json(j4, "gf9.json"), input_error);
}

TEST_CASE("canonical form sorts the basis and is idempotent") {
    // build a ring with the basis deliberately out of canonical order
    std::vector<BasisVec> basis = {{"i", 3, 1}, {"1", 3, 0}};
    std::vector<std::vector<Coords>> mul = {{{0, 2}, {1, 0}}, {{1, 0}, {0, 1}}};
    FiniteGradedRing R("gf9_scrambled", Group::cyclic(2), std::move(basis), std::move(mul),
                       {0, 1});

    const FiniteGradedRing S = sort_ring_basis(R);
    REQUIRE(S.dim() == 2);
    CHECK(S.basis(0).name == "1");
    CHECK(S.basis(0).degree == 0);
    CHECK(S.basis(1).name == "i");
    CHECK(S.one() == Coords{1, 0});
    CHECK(S.basis_product(1, 1) == Coords{2, 0});
    CHECK(S.basis_product(0, 1) == Coords{0, 1});
    CHECK(ring_equal(S, *build_fixture("gf9_z2").ring));

    ParsedStructure ps;
    ps.kind = "finite_graded_ring";
    ps.ring = R;
    const Json once = canonical_json(ps);
    ParsedStructure again = parse_structure(once, "mem", ".");
    CHECK(canonical_json(again) == once);

    // a module canonicalizes its scalars and its own basis together
    const Fixture zf = build_fixture("z12i");
    ParsedStructure ms;
    ms.kind = "finite_graded_module";
    ms.module = *zf.module;
    const Json monce = canonical_json(ms);
    ParsedStructure magain = parse_structure(monce, "mem", ".");
    CHECK(canonical_json(magain) == monce);
    CHECK(module_equal(sort_module_basis(*zf.module), *zf.module));
}

TEST_CASE("every fixture document canonicalizes idempotently") {
    for (const std::string& name : fixture_names()) {
        const Fixture f = build_fixture(name);
        ParsedStructure s;
        if (f.ring) {
            s.kind = "finite_graded_ring";
            s.ring = f.ring;
        } else if (f.monomial) {
            s.kind = "monomial_ring";
            s.monomial = f.monomial;
        } else {
            s.kind = "finite_graded_module";
            s.module = f.module;
        }
        const Json once = canonical_json(s);
        ParsedStructure back = parse_structure(once, name, ".");
        CHECK(canonical_json(back) == once);
    }
}
