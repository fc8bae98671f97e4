#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace graded {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Thrown on malformed or inconsistent input (bad JSON, invalid tables, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown internally when an enumeration exceeds its configured cap.
// Predicate wrappers catch it and report the aborted_cap verdict; it never
// escapes the public predicate entry points.
struct cap_reached : std::runtime_error {
    explicit cap_reached(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budgets. Exceeding one never produces a wrong answer, only an
// aborted_cap verdict carrying the cap that was hit.
struct Limits {
    std::size_t element_cap = 100000;   // materialized elements per closure
    std::size_t lattice_cap = 10000;    // submodule / ideal lattice size
    std::size_t pair_scan_cap = 3000;   // full-ring quadratic scans
    std::size_t group_order_cap = 64;   // finite group construction
};

// Work counters attached to every report.
struct Stats {
    u64 elements_enumerated = 0;
    u64 products_computed = 0;
    u64 subgroups_built = 0;

    void merge(const Stats& o) {
        elements_enumerated += o.elements_enumerated;
        products_computed += o.products_computed;
        subgroups_built += o.subgroups_built;
    }
};

// Deterministic RNG wrapper. Only raw engine draws are used: the standard
// distributions are implementation-defined, which would break cross-platform
// replay of (seed, index) -> instance.
class Rng {
public:
    explicit Rng(u64 seed) : eng_(seed) {}

    u64 next() { return eng_(); }

    // Uniform-ish draw in [0, n). Modulo bias is irrelevant here; stability is
    // what matters.
    u64 below(u64 n) { return n == 0 ? 0 : eng_() % n; }

    i64 range(i64 lo, i64 hi) {  // inclusive bounds
        if (hi <= lo) return lo;
        return lo + static_cast<i64>(below(static_cast<u64>(hi - lo + 1)));
    }

    bool chance(u64 num, u64 den) { return below(den) < num; }

private:
    std::mt19937_64 eng_;
};

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_i64(a, b) * b;
}

// Canonical residue in [0, n).
inline i64 mod_norm(i64 v, i64 n) {
    i64 r = v % n;
    if (r < 0) r += n;
    return r;
}

}  // namespace graded
