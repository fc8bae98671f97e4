#pragma once

// Seeded instance families. (seed, index) fully determines an instance: each
// index gets a fresh engine, so any instance can be regenerated without
// replaying the stream. Every family is associativity-safe by construction,
// so generated structures always pass the constructor validation.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graded/fixtures.hpp"
#include "graded/module.hpp"
#include "graded/monomial.hpp"
#include "graded/ring.hpp"

namespace graded {

using u64 = std::uint64_t;

struct GeneratorParams {
    u64 seed = 1;
    i64 max_group_order = 8;
    std::vector<i64> coefficient_primes = {2, 3, 5};
    i64 max_matrix_dim = 3;
    i64 max_modulus = 12;
    // a: group algebras of quotients, b: good matrix gradings with deletions,
    // c: quadratic extensions, d: monomial rings, e: trivial gradings,
    // f: direct sums
    std::vector<i64> ring_family_weights = {2, 3, 2, 2, 1, 2};
    // ring as module, column modules, pair modules, quotients, restrictions
    std::vector<i64> module_family_weights = {2, 2, 3, 2, 2};
};

struct RingInstance {
    std::string id;
    std::optional<FiniteGradedRing> finite;
    std::optional<MonomialGradedRing> monomial;
};

struct ModuleInstance {
    std::string id;
    std::optional<FiniteGradedModule> module;
};

namespace detail {

// mt19937_64 is bit-specified by the standard; std distributions are not, so
// draws go through plain modulo to stay reproducible across toolchains.
inline std::mt19937_64 instance_engine(u64 seed, u64 index, u64 salt) {
    return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + (index + 1) * 0xBF58476D1CE4E5B9ULL +
                           salt);
}

inline u64 draw(std::mt19937_64& eng, u64 n) { return n == 0 ? 0 : eng() % n; }

inline i64 draw_range(std::mt19937_64& eng, i64 lo, i64 hi) {
    return lo + static_cast<i64>(draw(eng, static_cast<u64>(hi - lo + 1)));
}

inline std::size_t draw_weighted(std::mt19937_64& eng, const std::vector<i64>& weights) {
    i64 total = 0;
    for (i64 w : weights) total += w > 0 ? w : 0;
    if (total <= 0) return 0;
    i64 t = draw_range(eng, 0, total - 1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0) continue;
        if (t < weights[i]) return i;
        t -= weights[i];
    }
    return weights.size() - 1;
}

inline Group draw_finite_group(std::mt19937_64& eng, i64 max_order) {
    if (max_order >= 4 && draw(eng, 3) == 0) {
        const i64 m = draw_range(eng, 2, max_order / 2);
        return Group::dihedral(m);
    }
    return Group::cyclic(draw_range(eng, 1, max_order));
}

// Prime whose power stays enumerable: p^slots <= 100000, so a single
// component filled by every basis vector still fits the element cap.
inline i64 draw_bounded_prime(std::mt19937_64& eng, const std::vector<i64>& primes, i64 slots) {
    std::vector<i64> ok;
    for (i64 p : primes) {
        u64 pow = 1;
        bool fits = true;
        for (i64 s = 0; s < slots && fits; ++s) {
            pow *= static_cast<u64>(p);
            if (pow > 100000) fits = false;
        }
        if (fits) ok.push_back(p);
    }
    if (ok.empty()) ok.push_back(2);
    return ok[static_cast<std::size_t>(draw(eng, ok.size()))];
}

// K[H] graded by a quotient H/N through the coset map; the grading
// compatibility is the homomorphism property of the projection.
inline FiniteGradedRing group_algebra_ring(std::mt19937_64& eng, const GeneratorParams& P) {
    const i64 h = draw_range(eng, 2, P.max_group_order);
    const Group H = Group::cyclic(h);
    std::vector<i64> divisors;
    for (i64 d = 1; d <= h; ++d)
        if (h % d == 0) divisors.push_back(d);
    const i64 d = divisors[static_cast<std::size_t>(draw(eng, divisors.size()))];
    std::vector<i64> normal;
    for (i64 x = 0; x < h; x += d) normal.push_back(x);
    std::vector<i64> proj;
    const Group G = H.quotient(normal, &proj);
    const i64 p = draw_bounded_prime(eng, P.coefficient_primes, h);
    std::vector<BasisVec> basis;
    for (i64 x = 0; x < h; ++x)
        basis.push_back({"h" + std::to_string(x), p, proj[static_cast<std::size_t>(x)]});
    const std::size_t n = static_cast<std::size_t>(h);
    std::vector<std::vector<Coords>> mul(n, std::vector<Coords>(n, Coords(n, 0)));
    for (i64 x = 0; x < h; ++x)
        for (i64 y = 0; y < h; ++y)
            mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
               [static_cast<std::size_t>(H.op(x, y))] = 1;
    Coords one(n, 0);
    one[0] = 1;
    return FiniteGradedRing("k" + std::to_string(p) + "_c" + std::to_string(h) + "_mod" +
                                std::to_string(d),
                            G, std::move(basis), std::move(mul), std::move(one));
}

// Good grading of a matrix algebra with an optional deletion: the surviving
// unit set is a reflexive transitively closed relation, so products of
// survivors survive and the diagonal (hence the unit) is intact.
inline FiniteGradedRing good_grading_ring(std::mt19937_64& eng, const GeneratorParams& P) {
    const int n = static_cast<int>(draw_range(eng, 2, P.max_matrix_dim));
    const Group G = draw_finite_group(eng, P.max_group_order);
    std::vector<i64> d;
    for (int i = 0; i < n; ++i) d.push_back(draw_range(eng, 0, G.order() - 1));
    const i64 p = draw_bounded_prime(eng, P.coefficient_primes, static_cast<i64>(n) * n);

    std::vector<std::vector<char>> keep(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) keep[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    const bool full = draw(eng, 2) == 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (full || draw(eng, 3) != 0))
                keep[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (keep[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    keep[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    keep[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;

    std::vector<BasisVec> basis;
    std::vector<std::pair<int, int>> pos;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (keep[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                basis.push_back({"e" + std::to_string(r + 1) + std::to_string(c + 1), p,
                                 G.op(G.inv(d[static_cast<std::size_t>(r)]),
                                      d[static_cast<std::size_t>(c)])});
                pos.emplace_back(r, c);
            }
    const std::size_t m = basis.size();
    auto find_pos = [&](int r, int c) -> std::size_t {
        for (std::size_t i = 0; i < m; ++i)
            if (pos[i].first == r && pos[i].second == c) return i;
        return m;
    };
    std::vector<std::vector<Coords>> mul(m, std::vector<Coords>(m, Coords(m, 0)));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (pos[a].second == pos[b].first)
                mul[a][b][find_pos(pos[a].first, pos[b].second)] = 1;
    Coords one(m, 0);
    for (int r = 0; r < n; ++r) one[find_pos(r, r)] = 1;
    return FiniteGradedRing("m" + std::to_string(n) + "_" + G.name() + "_k" + std::to_string(m),
                            G, std::move(basis), std::move(mul), std::move(one));
}

inline FiniteGradedRing quadratic_ring(std::mt19937_64& eng, const GeneratorParams& P) {
    const i64 nmod = draw_range(eng, 2, P.max_modulus);
    const i64 c = draw_range(eng, 0, nmod - 1);
    return quadratic_extension(nmod, c,
                               "z" + std::to_string(nmod) + "x2_" + std::to_string(c));
}

inline MonomialGradedRing monomial_ring(std::mt19937_64& eng, const GeneratorParams& P) {
    const i64 q = P.coefficient_primes[static_cast<std::size_t>(
        draw(eng, P.coefficient_primes.size()))];
    if (draw(eng, 2) == 0) {
        const i64 gamma = draw_range(eng, -2, 3);
        return MonomialGradedRing("kx_int_g" + std::to_string(gamma), q, Group::integers(),
                                  gamma);
    }
    const i64 k = draw_range(eng, 1, P.max_group_order);
    const i64 gamma = draw_range(eng, 0, k - 1);
    return MonomialGradedRing("kx_c" + std::to_string(k) + "_g" + std::to_string(gamma), q,
                              Group::cyclic(k), gamma);
}

inline FiniteGradedRing trivial_ring(std::mt19937_64& eng, const GeneratorParams& P) {
    const i64 nmod = draw_range(eng, 2, P.max_modulus);
    const i64 k = draw_range(eng, 1, P.max_group_order);
    std::vector<BasisVec> basis = {{"1", nmod, 0}};
    std::vector<std::vector<Coords>> mul = {{{1}}};
    return FiniteGradedRing("z" + std::to_string(nmod) + "_triv_c" + std::to_string(k),
                            Group::cyclic(k), std::move(basis), std::move(mul), {1});
}

// Block-diagonal sum of two rings graded by the same group.
inline FiniteGradedRing direct_sum_rings(const FiniteGradedRing& A, const FiniteGradedRing& B,
                                         const std::string& name) {
    if (!(A.group() == B.group())) throw input_error("direct sum: group mismatch");
    std::vector<BasisVec> basis;
    for (std::size_t i = 0; i < A.dim(); ++i)
        basis.push_back({"p." + A.basis(i).name, A.basis(i).order, A.basis(i).degree});
    for (std::size_t i = 0; i < B.dim(); ++i)
        basis.push_back({"q." + B.basis(i).name, B.basis(i).order, B.basis(i).degree});
    const std::size_t na = A.dim(), n = na + B.dim();
    std::vector<std::vector<Coords>> mul(n, std::vector<Coords>(n, Coords(n, 0)));
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const Coords& c = A.basis_product(i, j);
            for (std::size_t k = 0; k < A.dim(); ++k) mul[i][j][k] = c[k];
        }
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j) {
            const Coords& c = B.basis_product(i, j);
            for (std::size_t k = 0; k < B.dim(); ++k) mul[na + i][na + j][na + k] = c[k];
        }
    Coords one(n, 0);
    for (std::size_t i = 0; i < A.dim(); ++i) one[i] = A.one()[i];
    for (std::size_t i = 0; i < B.dim(); ++i) one[na + i] = B.one()[i];
    return FiniteGradedRing(name, A.group(), std::move(basis), std::move(mul), std::move(one));
}

inline FiniteGradedRing direct_sum_ring(std::mt19937_64& eng, const GeneratorParams& P) {
    const i64 k = draw_range(eng, 1, P.max_group_order);
    const Group G = Group::cyclic(k);
    auto summand = [&]() -> FiniteGradedRing {
        if (draw(eng, 2) == 0) {
            // good grading over G; two summands may share a degree, so size
            // each for half the element budget
            const int n = 2;
            std::vector<i64> d;
            for (int i = 0; i < n; ++i) d.push_back(draw_range(eng, 0, k - 1));
            const i64 p = draw_bounded_prime(eng, P.coefficient_primes, 2 * n * n);
            return good_matrix_ring("s", G, d, p);
        }
        if (k == 2 && draw(eng, 2) == 0) {
            const i64 nmod = draw_range(eng, 2, P.max_modulus);
            return quadratic_extension(nmod, draw_range(eng, 0, nmod - 1), "s");
        }
        const i64 nmod = draw_range(eng, 2, P.max_modulus);
        std::vector<BasisVec> basis = {{"1", nmod, 0}};
        std::vector<std::vector<Coords>> mul = {{{1}}};
        return FiniteGradedRing("s", G, std::move(basis), std::move(mul), {1});
    };
    const FiniteGradedRing A = summand();
    const FiniteGradedRing B = summand();
    return direct_sum_rings(A, B, "sum_" + A.name() + "_" + B.name() + "_c" + std::to_string(k));
}

}  // namespace detail

inline RingInstance generate_graded_ring(const GeneratorParams& P, u64 index) {
    std::mt19937_64 eng = detail::instance_engine(P.seed, index, 0x52494E47ULL);
    const std::size_t family = detail::draw_weighted(eng, P.ring_family_weights);
    RingInstance inst;
    const char* tag = "abcdef";
    inst.id = "ring:" + std::to_string(P.seed) + ":" + std::to_string(index) + ":" +
              std::string(1, tag[family]);
    switch (family) {
        case 0: inst.finite = detail::group_algebra_ring(eng, P); break;
        case 1: inst.finite = detail::good_grading_ring(eng, P); break;
        case 2: inst.finite = detail::quadratic_ring(eng, P); break;
        case 3: inst.monomial = detail::monomial_ring(eng, P); break;
        case 4: inst.finite = detail::trivial_ring(eng, P); break;
        default: inst.finite = detail::direct_sum_ring(eng, P); break;
    }
    return inst;
}

namespace detail {

inline FiniteGradedModule column_module(std::mt19937_64& eng, const GeneratorParams& P) {
    const int n = static_cast<int>(draw_range(eng, 2, P.max_matrix_dim));
    const Group G = draw_finite_group(eng, P.max_group_order);
    std::vector<i64> d;
    for (int i = 0; i < n; ++i) d.push_back(draw_range(eng, 0, G.order() - 1));
    const i64 p = draw_bounded_prime(eng, P.coefficient_primes, static_cast<i64>(n) * n);
    const FiniteGradedRing R = good_matrix_ring("m" + std::to_string(n) + "_" + G.name(), G, d, p);
    const i64 shift = draw_range(eng, 0, G.order() - 1);
    std::vector<BasisVec> basis;
    for (int i = 0; i < n; ++i)
        basis.push_back({"c" + std::to_string(i + 1), p,
                         G.op(G.inv(d[static_cast<std::size_t>(i)]), shift)});
    auto idx = [n](int r, int c) { return static_cast<std::size_t>(r * n + c); };
    std::vector<std::vector<Coords>> act(
        R.dim(), std::vector<Coords>(static_cast<std::size_t>(n),
                                     Coords(static_cast<std::size_t>(n), 0)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            act[idx(r, c)][static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = 1;
    return FiniteGradedModule("col" + std::to_string(n) + "_s" + std::to_string(shift), R,
                              std::move(basis), std::move(act));
}

inline FiniteGradedModule pair_module(std::mt19937_64& eng, const GeneratorParams& P) {
    const i64 nmod = draw_range(eng, 2, P.max_modulus);
    return gauss_pair_module(nmod, "z" + std::to_string(nmod) + "i");
}

inline std::optional<GradedSubgroup> random_proper_cyclic(std::mt19937_64& eng,
                                                          const FiniteGradedModule& M,
                                                          const Limits& lim) {
    // gather nonzero homogeneous elements, try a few in random order
    std::vector<std::pair<i64, Coords>> hom;
    for (i64 g : M.support())
        for (const Coords& x : M.component_elements(g, lim))
            if (!M.is_zero(x)) hom.emplace_back(g, x);
    if (hom.empty()) return std::nullopt;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const auto& [g, x] = hom[static_cast<std::size_t>(draw(eng, hom.size()))];
        GradedSubgroup N = submodule_closure(M, {{g, x}}, lim);
        if (!subgroup_is_whole_carrier(M, N)) return N;
    }
    return std::nullopt;
}

}  // namespace detail

// Upper triangular 2x2 matrices over GF(2) with the Z2 good grading
// d = (0, 1): the degree-1 component is spanned by e12 alone, so
// x R_{1} R_{1} = 0 for x = e12 while no component is zero.
inline FiniteGradedRing upper_triangular_m2() {
    std::vector<BasisVec> basis = {{"e11", 2, 0}, {"e22", 2, 0}, {"e12", 2, 1}};
    std::vector<std::vector<Coords>> mul(3, std::vector<Coords>(3, Coords(3, 0)));
    mul[0][0] = {1, 0, 0};
    mul[1][1] = {0, 1, 0};
    mul[0][2] = {0, 0, 1};
    mul[2][1] = {0, 0, 1};
    return FiniteGradedRing("t2_z2", Group::cyclic(2), std::move(basis), std::move(mul),
                            {1, 1, 0});
}

inline ModuleInstance generate_graded_module(const GeneratorParams& P,
                                             const FiniteGradedRing& ring, u64 index) {
    std::mt19937_64 eng = detail::instance_engine(P.seed, index, 0x4D4F4455ULL);
    std::size_t family = detail::draw_weighted(eng, P.module_family_weights);
    ModuleInstance inst;
    // ring-backed families need the ring to be small enough for element scans
    const bool ring_small = ring.ring_size() <= 4096;
    if (!ring_small && (family == 0 || family == 3 || family == 4)) family = 2;
    const char* tags[] = {"self", "col", "pair", "quot", "restr"};
    inst.id = "module:" + std::to_string(P.seed) + ":" + std::to_string(index) + ":" +
              tags[family];
    const Limits lim;
    switch (family) {
        case 0: inst.module = ring_as_module(ring, ring.name() + "_self"); break;
        case 1: inst.module = detail::column_module(eng, P); break;
        case 2: inst.module = detail::pair_module(eng, P); break;
        case 3: {
            FiniteGradedModule base =
                detail::draw(eng, 2) == 0 ? detail::pair_module(eng, P)
                                  : ring_as_module(ring, ring.name() + "_self");
            const auto N = detail::random_proper_cyclic(eng, base, lim);
            if (N && !N->is_zero())
                inst.module = quotient_module(base, *N, base.name() + "_q");
            else
                inst.module = std::move(base);
            break;
        }
        default: {
            FiniteGradedModule base =
                detail::draw(eng, 2) == 0 ? detail::pair_module(eng, P)
                                  : ring_as_module(ring, ring.name() + "_self");
            const auto N = detail::random_proper_cyclic(eng, base, lim);
            if (N && !N->is_zero())
                inst.module = restrict_module(base, *N, base.name() + "_r");
            else
                inst.module = std::move(base);
            break;
        }
    }
    return inst;
}

}  // namespace graded
