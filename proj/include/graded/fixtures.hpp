#pragma once

// Named example structures with expected verdict tables. Each fixture builds
// a ring or module, lists (check, expected, origin) rows, and carries notes
// for constructions that replace an infinite object by a finite analog.
// origin: stated = claimed by the source example; derived = worked out by
// hand for this exact structure; trivial = immediate from the definitions.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graded/module_predicates.hpp"
#include "graded/monomial.hpp"
#include "graded/ring_predicates.hpp"

namespace graded {

struct Expectation {
    std::string check;
    std::string expect;
    std::string origin;
    std::string note;
};

struct Fixture {
    std::string name;
    std::string summary;
    std::optional<FiniteGradedRing> ring;
    std::optional<MonomialGradedRing> monomial;
    std::optional<FiniteGradedModule> module;
    std::vector<Expectation> expected;
};

namespace detail {

// n x n matrix units over GF(p), graded by G via a degree tuple d:
// deg e_rc = d_r^-1 d_c.
inline FiniteGradedRing good_matrix_ring(const std::string& name, const Group& G,
                                         const std::vector<i64>& d, i64 p) {
    const int n = static_cast<int>(d.size());
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<BasisVec> basis;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            basis.push_back({"e" + std::to_string(r + 1) + std::to_string(c + 1), p,
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

// Z_n with everything in degree 0 of Z2; the scalar ring for integer-action
// modules (the odd component is genuinely zero).
inline FiniteGradedRing wrapped_zn(i64 n, const std::string& name) {
    std::vector<BasisVec> basis = {{"1", n, 0}};
    std::vector<std::vector<Coords>> mul = {{{1}}};
    return FiniteGradedRing(name, Group::cyclic(2), std::move(basis), std::move(mul), {1});
}

// Z_n[x]/(x^2 - c) graded by Z2: deg 1 = 0, deg x = 1.
inline FiniteGradedRing quadratic_extension(i64 n, i64 c, const std::string& name) {
    std::vector<BasisVec> basis = {{"1", n, 0}, {"i", n, 1}};
    std::vector<std::vector<Coords>> mul = {{{1, 0}, {0, 1}}, {{0, 1}, {mod_norm(c, n), 0}}};
    return FiniteGradedRing(name, Group::cyclic(2), std::move(basis), std::move(mul), {1, 0});
}

// Z_n with the trivial grading (one-element group).
inline FiniteGradedRing trivial_zn(i64 n, const std::string& name) {
    std::vector<BasisVec> basis = {{"1", n, 0}};
    std::vector<std::vector<Coords>> mul = {{{1}}};
    return FiniteGradedRing(name, Group::cyclic(1), std::move(basis), std::move(mul), {1});
}

// Gaussian integers mod n as a Z2-graded module over wrapped Z_n.
inline FiniteGradedModule gauss_pair_module(i64 n, const std::string& name) {
    std::vector<BasisVec> basis = {{"1", n, 0}, {"i", n, 1}};
    std::vector<std::vector<Coords>> act = {{{1, 0}, {0, 1}}};
    return FiniteGradedModule(name, wrapped_zn(n, "z" + std::to_string(n)), std::move(basis),
                              std::move(act));
}

// <d> = the submodule generated by {d*b : b module basis}.
inline GradedSubgroup scaled_submodule(const FiniteGradedModule& M, i64 d, const Limits& lim) {
    std::vector<std::pair<std::size_t, Coords>> gens;
    for (std::size_t j = 0; j < M.dim(); ++j) {
        Coords x = M.zero();
        x[j] = mod_norm(d, M.basis(j).order);
        gens.emplace_back(j, std::move(x));
    }
    std::vector<std::pair<i64, Coords>> hom;
    for (auto& [j, x] : gens) hom.emplace_back(M.basis(j).degree, std::move(x));
    return submodule_closure(M, hom, lim);
}

inline std::string check_head(const std::string& check) {
    return check.substr(0, check.find('('));
}

inline std::vector<i64> check_args(const std::string& check) {
    std::vector<i64> out;
    const std::size_t open = check.find('(');
    if (open == std::string::npos) return out;
    const std::size_t close = check.rfind(')');
    if (close == std::string::npos || close < open)
        throw input_error("fixture check '" + check + "': unbalanced parentheses");
    std::string inside = check.substr(open + 1, close - open - 1);
    std::size_t pos = 0;
    while (pos < inside.size()) {
        std::size_t comma = inside.find(',', pos);
        if (comma == std::string::npos) comma = inside.size();
        std::string tok = inside.substr(pos, comma - pos);
        std::string digits;
        for (char ch : tok)
            if (ch != '<' && ch != '>' && ch != ' ') digits.push_back(ch);
        try {
            out.push_back(std::stoll(digits));
        } catch (const std::logic_error&) {
            throw input_error("fixture check '" + check + "': bad argument '" + tok + "'");
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
    return {"m2_z4", "kx_z",  "m4_d10", "m3_z7", "kx_z3",   "gf9_z2",      "z6i",        "m2_z",
            "m3_z2", "z12i",  "z36i",   "z36i_k3", "trivial_gf5", "trivial_z6", "trivial_z36"};
}

inline Fixture build_fixture(const std::string& name, i64 matrix_field = 2) {
    Fixture f;
    f.name = name;
    auto E = [&f](std::string check, std::string expect, std::string origin,
                  std::string note = "") {
        f.expected.push_back(
            {std::move(check), std::move(expect), std::move(origin), std::move(note)});
    };

    if (name == "m2_z4") {
        f.summary = "2x2 matrix units over GF(" + std::to_string(matrix_field) +
                    "), graded by Z4 via the degree tuple (0,2)";
        f.ring = detail::good_matrix_ring("m2_z4", Group::cyclic(4), {0, 2}, matrix_field);
        E("weak", "holds", "stated");
        E("strongness", "first_strong", "stated");
        E("crossed", "weakly_crossed", "stated");
        E("degeneracy", "nondegenerate_not_faithful", "derived");
        E("invertible", "fails", "derived", "matrix units multiply to zero");
        E("support", "subgroup", "derived");
    } else if (name == "kx_z") {
        f.summary = "polynomial monomial algebra over GF(2), graded by Z with deg x = 1";
        f.monomial.emplace("kx_z", 2, Group::integers(), 1);
        E("weak", "fails", "stated");
        E("strongness", "second_strong", "stated");
        E("crossed", "none", "stated");
        E("invertible", "holds", "stated");
        E("degeneracy", "degenerate", "derived", "x annihilates the zero component at -1");
        E("support", "monoid_not_subgroup", "derived");
    } else if (name == "m4_d10") {
        const Group d10 = Group::dihedral(5);
        f.summary = "4x4 matrix units over GF(" + std::to_string(matrix_field) +
                    "), graded by the dihedral group of order 10 via the degree tuple "
                    "(e, a, a^2, ab)";
        f.ring = detail::good_matrix_ring("m4_d10", d10, {0, 1, 2, 6}, matrix_field);
        E("weak", "holds", "stated");
        E("degeneracy", "nondegenerate_not_faithful", "derived",
          "the source example calls this grading degenerate via x R_{(ab)^-1} = x R_{a^4 b} "
          "= 0, but ab is an involution, so (ab)^-1 = ab and x R_{ab} contains e41*e14 = "
          "e44 != 0; exhaustive search over all homogeneous elements finds no degenerate "
          "pair, and the grading is regular, which already forces non-degeneracy");
        E("support", "not_monoid", "derived");
        E("strongness", "none", "derived");
        E("graded_simple", "holds", "derived", "the full matrix ring is simple");
    } else if (name == "m3_z7") {
        f.summary = "3x3 matrix units over GF(" + std::to_string(matrix_field) +
                    "), graded by Z7 via the degree tuple (0,1,2)";
        f.ring = detail::good_matrix_ring("m3_z7", Group::cyclic(7), {0, 1, 2}, matrix_field);
        E("weak", "holds", "stated");
        E("support", "not_monoid", "stated");
        E("strongness", "none", "derived");
        E("degeneracy", "nondegenerate_not_faithful", "derived");
    } else if (name == "kx_z3") {
        f.summary = "polynomial monomial algebra over GF(2), graded by Z3 with deg x = 1";
        f.monomial.emplace("kx_z3", 2, Group::cyclic(3), 1);
        E("weak", "holds", "stated");
        E("strongness", "none", "stated", "R_1 R_2 is a proper subset of R_0");
        E("degeneracy", "faithful", "derived");
        E("invertible", "fails", "derived", "the identity component is not a field");
        E("support", "subgroup", "derived");
    } else if (name == "gf9_z2") {
        f.summary = "GF(9) = GF(3)[i] graded by Z2; finite analog of the complex field over "
                    "the reals";
        f.ring = detail::quadratic_extension(3, -1, "gf9_z2");
        E("invertible", "holds", "stated");
        E("strongness", "strong", "derived",
          "the source states first strong, which is implied: strong gradings are first strong");
        E("graded_simple", "holds", "stated");
        E("crossed", "crossed", "derived",
          "the source states weakly crossed, which is implied: i is a unit in each component");
        E("weak", "holds", "trivial");
        E("degeneracy", "faithful", "derived");
        E("linear", "holds", "stated");
    } else if (name == "z6i") {
        f.summary = "Gaussian integers modulo 6 graded by Z2; finite analog of the Gaussian "
                    "integers, re-derived because Z6[i] has zero divisors";
        f.ring = detail::quadratic_extension(6, -1, "z6i");
        E("strongness", "strong", "stated");
        E("invertible", "fails", "stated", "the identity component Z6 is not a field");
        E("weak", "holds", "trivial");
        E("zero_divisors", "holds", "derived", "2 * 3 = 0");
    } else if (name == "m2_z") {
        f.summary = "2x2 matrix units over GF(" + std::to_string(matrix_field) +
                    "), graded by the integers via the degree tuple (0,1)";
        f.ring = detail::good_matrix_ring("m2_z", Group::integers(), {0, 1}, matrix_field);
        E("degeneracy", "nondegenerate_not_faithful", "stated");
        E("crossed", "none", "stated");
        E("weak", "holds", "derived");
        E("support", "not_monoid", "derived");
        E("graded_simple", "holds", "derived");
    } else if (name == "m3_z2") {
        f.summary = "3x3 matrix units over GF(" + std::to_string(matrix_field) +
                    "), graded by Z2 via the block degree tuple (0,1,0)";
        f.ring = detail::good_matrix_ring("m3_z2", Group::cyclic(2), {0, 1, 0}, matrix_field);
        E("weak", "holds", "stated");
        E("crossed", "none", "stated", "every degree-1 matrix is singular");
        E("strongness", "strong", "derived");
        E("degeneracy", "faithful", "derived");
    } else if (name == "z12i") {
        f.summary = "Gaussian integers modulo 12 as a Z2-graded module; integer scalars are "
                    "wrapped as the trivially Z2-graded ring Z12";
        f.module = detail::gauss_pair_module(12, "z12i");
        E("essential(<6>)", "fails", "stated");
        E("semi_essential(<6>)", "holds", "stated");
        E("semi_essential(<4>)", "fails", "stated");
        E("semi_essential(<2>)", "holds", "stated");
        E("prime(<3>)", "holds", "derived");
        E("uniform", "fails", "derived");
        E("semi_uniform", "fails", "derived");
        E("multiplication", "fails", "derived");
        E("faithful", "holds", "derived");
    } else if (name == "z36i") {
        f.summary = "Gaussian integers modulo 36 as a Z2-graded module; integer scalars are "
                    "wrapped as the trivially Z2-graded ring Z36";
        f.module = detail::gauss_pair_module(36, "z36i");
        E("semi_essential(<12>)", "holds", "stated");
        E("semi_essential(<18>)", "holds", "stated");
        E("intersect_zero(<12>,<18>)", "true", "stated");
        E("semi_uniform", "holds", "stated");
        E("uniform", "fails", "stated");
        E("primes_contain(<2>)", "true", "stated");
        E("primes_contain(<3>)", "true", "stated",
          "the source calls <2> and <3> the only graded primes; the enumerator also finds "
          "four mixed primes such as Z36 + 2 Z36 i under the <d> = {d, di} generator "
          "reading, and the semi-essential verdicts here are checked against the full list");
        E("multiplication", "fails", "derived");
        E("faithful", "holds", "derived");
    } else if (name == "z36i_k3") {
        Limits lim;
        FiniteGradedModule ambient = detail::gauss_pair_module(36, "z36i");
        f.summary = "the submodule <3> of the mod-36 Gaussian module, restricted to a module "
                    "in its own right";
        f.module =
            restrict_module(ambient, detail::scaled_submodule(ambient, 3, lim), "z36i_k3");
        E("semi_uniform", "fails", "stated",
          "witnessed by the restricted copies of <12> and <9>");
        E("uniform", "fails", "derived");
    } else if (name == "trivial_gf5") {
        f.summary = "GF(5) with the trivial grading";
        f.ring = detail::trivial_zn(5, "gf5");
        E("weak", "holds", "trivial");
        E("strongness", "strong", "trivial");
        E("invertible", "holds", "trivial");
        E("degeneracy", "faithful", "trivial");
        E("graded_simple", "holds", "trivial");
    } else if (name == "trivial_z6") {
        f.summary = "Z6 with the trivial grading";
        f.ring = detail::trivial_zn(6, "z6");
        E("weak", "holds", "trivial");
        E("strongness", "strong", "trivial");
        E("invertible", "fails", "trivial");
        E("degeneracy", "faithful", "trivial");
        E("zero_divisors", "holds", "trivial", "2 * 3 = 0");
    } else if (name == "trivial_z36") {
        f.summary = "Z36 with the trivial grading";
        f.ring = detail::trivial_zn(36, "z36");
        E("weak", "holds", "trivial");
        E("strongness", "strong", "trivial");
        E("invertible", "fails", "trivial");
        E("degeneracy", "faithful", "trivial");
    } else {
        throw input_error("unknown fixture '" + name + "'");
    }
    return f;
}

// Computes the label a check evaluates to on this fixture.
inline std::string evaluate_check(const Fixture& f, const std::string& check,
                                  const Limits& lim) {
    const std::string head = detail::check_head(check);
    const std::vector<i64> args = detail::check_args(check);

    if (f.ring || f.monomial) {
        auto verdict_of = [&](PropertyReport r) { return std::string(to_string(r.verdict)); };
        auto class_of = [&](PropertyReport r) { return r.classification; };
        if (f.ring) {
            const FiniteGradedRing& R = *f.ring;
            if (head == "weak") return verdict_of(is_weak(R));
            if (head == "support") return class_of(support_report(R));
            if (head == "degeneracy") return class_of(degeneracy_class(R, lim));
            if (head == "strongness") return class_of(strongness_class(R, lim));
            if (head == "crossed") return class_of(crossed_class(R, lim));
            if (head == "regular") return verdict_of(is_regular(R, lim));
            if (head == "invertible") return verdict_of(is_invertible_graded(R, lim));
            if (head == "graded_simple") return verdict_of(is_graded_simple(R, lim));
            if (head == "zero_divisors") return verdict_of(zero_divisor_search(R, lim));
            if (head == "linear") return verdict_of(identity_component_linear_report(R, lim));
        } else {
            const MonomialGradedRing& R = *f.monomial;
            if (head == "weak") return verdict_of(is_weak(R));
            if (head == "support") return class_of(support_report(R));
            if (head == "degeneracy") return class_of(degeneracy_class(R));
            if (head == "strongness") return class_of(strongness_class(R));
            if (head == "crossed") return class_of(crossed_class(R));
            if (head == "regular") return verdict_of(is_regular(R));
            if (head == "invertible") return verdict_of(is_invertible_graded(R));
            if (head == "graded_simple") return verdict_of(is_graded_simple(R));
            if (head == "zero_divisors") return verdict_of(zero_divisor_search(R));
            if (head == "linear") return verdict_of(identity_component_linear_report(R));
        }
        throw input_error("fixture " + f.name + ": unknown ring check '" + check + "'");
    }

    const FiniteGradedModule& M = *f.module;
    if (head == "uniform") return to_string(is_graded_uniform(M, lim).verdict);
    if (head == "semi_uniform") return to_string(is_graded_semi_uniform(M, lim).verdict);
    if (head == "multiplication") return to_string(is_multiplication_module(M, lim).verdict);
    if (head == "faithful") return to_string(is_faithful_module(M, lim).verdict);
    if (head == "essential") {
        const GradedSubgroup K = detail::scaled_submodule(M, args.at(0), lim);
        return to_string(is_graded_essential(M, K, lim).verdict);
    }
    if (head == "prime") {
        const GradedSubgroup K = detail::scaled_submodule(M, args.at(0), lim);
        return to_string(is_graded_prime_submodule(M, K, lim).verdict);
    }
    if (head == "semi_essential") {
        const GradedSubgroup K = detail::scaled_submodule(M, args.at(0), lim);
        const auto lattice = enumerate_graded_submodules(M, lim);
        const auto primes = enumerate_graded_prime_submodules(M, lattice, lim);
        return to_string(is_graded_semi_essential(M, K, primes, lim).verdict);
    }
    if (head == "intersect_zero") {
        const GradedSubgroup A = detail::scaled_submodule(M, args.at(0), lim);
        const GradedSubgroup B = detail::scaled_submodule(M, args.at(1), lim);
        return subgroup_intersect(A, B).is_zero() ? "true" : "false";
    }
    if (head == "primes_contain") {
        const GradedSubgroup K = detail::scaled_submodule(M, args.at(0), lim);
        const auto lattice = enumerate_graded_submodules(M, lim);
        const auto primes = enumerate_graded_prime_submodules(M, lattice, lim);
        for (const GradedSubgroup& P : primes)
            if (P == K) return "true";
        return "false";
    }
    throw input_error("fixture " + f.name + ": unknown module check '" + check + "'");
}

struct FixtureCheckRow {
    std::string fixture;
    std::string check;
    std::string expected;
    std::string computed;
    std::string origin;
    std::string note;
    bool match = false;
};

inline std::vector<FixtureCheckRow> verify_fixture(const Fixture& f, const Limits& lim) {
    std::vector<FixtureCheckRow> rows;
    for (const Expectation& e : f.expected) {
        FixtureCheckRow row;
        row.fixture = f.name;
        row.check = e.check;
        row.expected = e.expect;
        row.computed = evaluate_check(f, e.check, lim);
        row.origin = e.origin;
        row.note = e.note;
        row.match = row.computed == row.expected;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json fixture_rows_json(const std::vector<FixtureCheckRow>& rows) {
    Json arr = Json::array();
    for (const FixtureCheckRow& r : rows) {
        Json j;
        j["fixture"] = r.fixture;
        j["check"] = r.check;
        j["expected"] = r.expected;
        j["computed"] = r.computed;
        j["match"] = r.match;
        j["origin"] = r.origin;
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace graded
