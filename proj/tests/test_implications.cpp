#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graded/implications.hpp"

using namespace graded;

namespace {

const ImplicationStat& entry(const SuiteReport& rep, const std::string& id) {
    for (const ImplicationStat& s : rep.entries)
        if (s.id == id) return s;
    FAIL("no suite entry named " + id);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("the catalog is well formed") {
    const std::vector<Implication>& cat = implication_catalog();
    REQUIRE(cat.size() >= 70);
    std::set<std::string> ids;
    for (const Implication& im : cat) {
        REQUIRE(!im.id.empty());
        REQUIRE(!im.statement.empty());
        REQUIRE(ids.insert(im.id).second);
        if (im.expected == Expected::vacuous_note) {
            REQUIRE(!im.ring_eval);
            REQUIRE(!im.module_eval);
            REQUIRE(!im.note.empty());
        } else {
            REQUIRE((im.ring_eval || im.module_eval));
        }
    }
}

TEST_CASE("the implication suite holds on the default pool") {
    SuiteOptions opt;
    const SuiteReport rep = run_implication_suite(opt);

    INFO(dump_json(rep.to_json()));
    REQUIRE(rep.violations.empty());
    REQUIRE(rep.ok);
    REQUIRE(rep.ring_instances >= opt.ring_count);
    REQUIRE(rep.module_instances >= opt.module_count);

    // every expected failure of a converse is realized somewhere in the pool
    for (const ImplicationStat& s : rep.entries) {
        INFO(s.id);
        if (s.expected == Expected::non_implication) {
            CHECK(s.counterexamples >= 1);
            CHECK(!s.first_instance.empty());
        }
        if (s.expected == Expected::theorem) CHECK(s.counterexamples == 0);
    }

    // the fixture corpus keeps the sharpest hypotheses inhabited
    const std::vector<std::string> must_apply = {
        "nondegenerate_implies_weak",
        "faithful_implies_full_support",
        "strong_implies_faithful",
        "first_strong_iff_second_strong_nondegenerate",
        "strong_iff_second_strong_faithful",
        "domain_weak_iff_support_subgroup",
        "domain_commutative_weak_support_abelian",
        "polynomial_scalar_identity_not_weak",
        "polynomial_scalar_identity_not_strong",
        "weak_domain_ideal_meet_identity",
        "weak_domain_division_identity_simple",
        "unit_inverse_degree",
        "invertible_weak_domain_homogeneous_units",
        "invertible_weak_domain_components_cyclic",
        "invertible_weak_domain_components_simple",
        "invertible_weak_domain_first_strong",
        "invertible_weak_domain_graded_simple",
        "invertible_weak_domain_weakly_crossed",
        "invertible_identity_component_linear",
        "weakly_crossed_implies_first_strong",
        "weakly_crossed_components_unit_translate",
        "weakly_crossed_components_equicardinal",
        "commutative_weakly_crossed_component_translate",
        "weakly_crossed_hom_component_images",
        "weakly_crossed_bijection_grade_fixing",
        "essential_implies_semi_essential",
        "semi_essential_element_characterization",
        "semi_essential_monotone",
        "intersection_semi_essential_both",
        "essential_cap_semi_essential",
        "isomorphic_image_semi_essential",
        "multiplication_faithful_colon_semi_essential",
        "uniform_implies_semi_uniform",
        "semi_uniform_ring_modules",
    };
    for (const std::string& id : must_apply) {
        INFO(id);
        CHECK(entry(rep, id).applicable >= 1);
    }
}

TEST_CASE("the suite report is deterministic") {
    SuiteOptions opt;
    opt.params.seed = 5;
    opt.ring_count = 40;
    opt.module_count = 15;
    const SuiteReport a = run_implication_suite(opt);
    const SuiteReport b = run_implication_suite(opt);
    REQUIRE(dump_json(a.to_json()) == dump_json(b.to_json()));
    REQUIRE(a.ok);
}

TEST_CASE("known witnesses land where expected") {
    SuiteOptions opt;
    opt.ring_count = 0;
    opt.module_count = 0;
    const SuiteReport rep = run_implication_suite(opt);
    REQUIRE(rep.ok);

    // the triangular matrix ring is weak yet degenerate
    CHECK(entry(rep, "weak_not_implies_nondegenerate").first_instance == "aux:t2_z2");
    // the dihedral matrix grading is weak but not second strong
    CHECK(entry(rep, "weak_not_implies_second_strong").first_instance == "fixture:m4_d10");
    // the integer-graded polynomial ring is second strong but not weak
    CHECK(entry(rep, "second_strong_not_implies_weak").first_instance == "fixture:kx_z");
    // two semi-essential submodules with zero intersection
    CHECK(entry(rep, "intersection_not_implies_semi_essential").counterexamples >= 1);
    CHECK(entry(rep, "semi_essential_not_implies_essential").counterexamples >= 1);
    CHECK(entry(rep, "semi_uniform_not_implies_uniform").counterexamples >= 1);
}
