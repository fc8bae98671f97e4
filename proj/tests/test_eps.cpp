#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "graded/common.hpp"
#include "graded/eps.hpp"

using graded::Eps;
using graded::i64;
using graded::Rng;

namespace {

// Reference membership for a raw (threshold, period, residues, exceptional)
// description, bypassing canonicalization.
bool raw_member(i64 j, i64 t, i64 p, const std::vector<i64>& res, const std::vector<i64>& exc) {
    if (j < t) {
        for (i64 x : exc)
            if (x == j) return true;
        return false;
    }
    for (i64 r : res)
        if (graded::mod_norm(j, p) == r) return true;
    return false;
}

Eps random_eps(Rng& rng, i64 max_t, i64 max_p) {
    const i64 t = rng.range(0, max_t);
    const i64 p = rng.range(1, max_p);
    std::vector<i64> res, exc;
    for (i64 r = 0; r < p; ++r)
        if (rng.chance(1, 3)) res.push_back(r);
    for (i64 x = 0; x < t; ++x)
        if (rng.chance(1, 3)) exc.push_back(x);
    return Eps::make(t, p, res, exc);
}

}  // namespace

TEST_CASE("basic constructors and membership") {
    Eps e = Eps::empty_set();
    CHECK(e.empty());
    CHECK(e.finite());
    CHECK_FALSE(e.contains(0));

    Eps n = Eps::naturals();
    CHECK_FALSE(n.empty());
    CHECK_FALSE(n.finite());
    CHECK(n.contains(0));
    CHECK(n.contains(1000000));
    CHECK_FALSE(n.contains(-1));
    CHECK(n.threshold() == 0);
    CHECK(n.period() == 1);

    Eps f = Eps::finite({5, 1, 5, 3});
    CHECK(f.finite());
    CHECK(f.contains(1));
    CHECK(f.contains(3));
    CHECK(f.contains(5));
    CHECK_FALSE(f.contains(0));
    CHECK_FALSE(f.contains(7));
    CHECK(f.min() == 1);

    Eps p = Eps::progression(4, 3);  // {4, 7, 10, ...}
    CHECK(p.contains(4));
    CHECK(p.contains(7));
    CHECK_FALSE(p.contains(1));
    CHECK_FALSE(p.contains(5));
    CHECK(p.min() == 4);
    CHECK_FALSE(p.finite());
}

TEST_CASE("canonical form picks minimal period then minimal threshold") {
    // Same set presented with a redundant doubled period.
    Eps a = Eps::make(0, 6, {1, 3, 5}, {});
    Eps b = Eps::make(0, 2, {1}, {});
    CHECK(a == b);
    CHECK(a.period() == 2);

    // Exceptional entries that merely restate the periodic rule are dropped.
    Eps c = Eps::make(3, 2, {1}, {1});
    CHECK(c.threshold() == 0);
    CHECK(c.exceptional().empty());
    CHECK(c == Eps::progression(1, 2));

    // {1, 4, 7, ...} with one genuine exception at 0.
    Eps d = Eps::make(3, 3, {1}, {0, 1});
    CHECK(d.threshold() == 1);
    CHECK(d.exceptional() == std::vector<i64>{0});
    CHECK(d.contains(0));
    CHECK_FALSE(d.contains(2));
    CHECK(d.contains(4));

    // progression with start below step canonicalizes to threshold 0
    Eps e = Eps::progression(1, 4);
    CHECK(e.threshold() == 0);
    CHECK(e.period() == 4);

    // Empty set always normalizes to (0, 1, {}, {}).
    Eps z = Eps::make(5, 7, {}, {});
    CHECK(z == Eps::empty_set());
    CHECK(z.period() == 1);
    CHECK(z.threshold() == 0);
}

TEST_CASE("canonicalization is presentation independent") {
    Rng rng(20240815);
    for (int it = 0; it < 300; ++it) {
        Eps a = random_eps(rng, 10, 12);
        // Re-present with inflated period and threshold.
        const i64 k = rng.range(1, 4);
        const i64 pad = rng.range(0, 8);
        const i64 p2 = a.period() * k;
        const i64 t2 = a.threshold() + pad;
        std::vector<i64> res2, exc2;
        // A residue survives iff some member at or past the new threshold hits it.
        for (i64 r = 0; r < p2; ++r) {
            i64 probe = r;
            while (probe < t2) probe += p2;
            if (a.contains(probe)) res2.push_back(r);
        }
        for (i64 x = 0; x < t2; ++x)
            if (a.contains(x)) exc2.push_back(x);
        Eps b = Eps::make(t2, p2, res2, exc2);
        CAPTURE(it, a.threshold(), a.period(), t2, p2);
        CHECK(a == b);
    }
}

TEST_CASE("make agrees with raw description") {
    Rng rng(98765);
    for (int it = 0; it < 200; ++it) {
        const i64 t = rng.range(0, 10);
        const i64 p = rng.range(1, 12);
        std::vector<i64> res, exc;
        for (i64 r = 0; r < p; ++r)
            if (rng.chance(1, 3)) res.push_back(r);
        for (i64 x = 0; x < t; ++x)
            if (rng.chance(1, 3)) exc.push_back(x);
        Eps e = Eps::make(t, p, res, exc);
        for (i64 j = 0; j < 150; ++j) {
            if (e.contains(j) != raw_member(j, t, p, res, exc)) {
                CAPTURE(it, j, t, p);
                FAIL("membership mismatch after canonicalization");
            }
        }
    }
}

TEST_CASE("union and intersection match pointwise oracle") {
    Rng rng(4242);
    for (int it = 0; it < 200; ++it) {
        Eps a = random_eps(rng, 10, 12);
        Eps b = random_eps(rng, 10, 12);
        Eps u = set_union(a, b);
        Eps i = set_intersect(a, b);
        for (i64 j = 0; j < 400; ++j) {
            CAPTURE(it, j);
            CHECK(u.contains(j) == (a.contains(j) || b.contains(j)));
            CHECK(i.contains(j) == (a.contains(j) && b.contains(j)));
        }
    }
}

TEST_CASE("sumset matches brute force oracle") {
    Rng rng(777);
    for (int it = 0; it < 120; ++it) {
        Eps a = random_eps(rng, 8, 9);
        Eps b = random_eps(rng, 8, 9);
        Eps s = sumset(a, b);
        if (a.empty() || b.empty()) {
            CHECK(s.empty());
            continue;
        }
        // Oracle: j is in A+B iff some a' <= j lies in A with j-a' in B.
        const i64 window = 700;
        for (i64 j = 0; j < window; ++j) {
            bool expect = false;
            for (i64 x = 0; x <= j && !expect; ++x)
                if (a.contains(x) && b.contains(j - x)) expect = true;
            if (s.contains(j) != expect) {
                CAPTURE(it, j, a.threshold(), a.period(), b.threshold(), b.period());
                FAIL("sumset mismatch");
            }
        }
    }
}

TEST_CASE("sumset of progressions") {
    // {2,5,8,...} + {1,4,7,...} = {3,6,9,...}
    Eps s = sumset(Eps::progression(2, 3), Eps::progression(1, 3));
    CHECK(s == Eps::progression(3, 3));

    // {0,2,4,...} + {0,3,6,...} stabilizes to even+multiples-of-3 = all but 1.
    Eps t = sumset(Eps::progression(0, 2), Eps::progression(0, 3));
    CHECK_FALSE(t.contains(1));
    CHECK(t.contains(0));
    for (i64 j = 2; j < 50; ++j) CHECK(t.contains(j));
}

TEST_CASE("subset and min") {
    Eps a = Eps::progression(4, 6);
    Eps b = Eps::progression(4, 3);
    CHECK(a.subset_of(b));
    CHECK_FALSE(b.subset_of(a));
    CHECK(Eps::empty_set().subset_of(a));
    CHECK_FALSE(a.subset_of(Eps::empty_set()));
    CHECK(b.min() == 4);

    Eps c = Eps::make(2, 4, {3}, {0});
    CHECK(c.min() == 0);
    Eps d = Eps::make(0, 5, {4}, {});
    CHECK(d.min() == 4);
}

TEST_CASE("elements_below") {
    Eps a = Eps::make(1, 3, {2}, {0});
    CHECK(a.elements_below(10) == std::vector<i64>{0, 2, 5, 8});
    CHECK(Eps::empty_set().elements_below(10).empty());
}
