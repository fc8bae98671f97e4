#pragma once

// Symbolic monomial rings K[x] over GF(q), graded by the integers or by a
// cyclic group through the monoid map j -> j*gamma. Components are described
// by their exponent sets; all predicate work on this backend reduces to
// eventually-periodic-set arithmetic instead of element enumeration.

#include <string>
#include <utility>

#include "graded/common.hpp"
#include "graded/eps.hpp"
#include "graded/group.hpp"

namespace graded {

class MonomialGradedRing {
public:
    MonomialGradedRing(std::string name, i64 q, Group grp, i64 gamma)
        : name_(std::move(name)), q_(q), grp_(std::move(grp)), gamma_(gamma) {
        if (q_ < 2 || !is_prime(q_)) throw input_error("monomial ring: field order must be prime");
        if (grp_.is_finite()) {
            if (grp_ != Group::cyclic(grp_.order()))
                throw input_error("monomial ring: finite grading group must be cyclic");
            gamma_ = mod_norm(gamma_, grp_.order());
        }
        if (!grp_.valid_elem(gamma_)) throw input_error("monomial ring: bad generator degree");
    }

    const std::string& name() const { return name_; }
    i64 q() const { return q_; }
    const Group& group() const { return grp_; }
    i64 gamma() const { return gamma_; }

    // Exponents j with x^j homogeneous of degree g, i.e. j*gamma = g.
    Eps component_exponents(i64 g) const {
        if (grp_.is_integers()) {
            if (gamma_ == 0) return g == 0 ? Eps::naturals() : Eps::empty_set();
            if (g % gamma_ != 0) return Eps::empty_set();
            const i64 j = g / gamma_;
            return j >= 0 ? Eps::finite({j}) : Eps::empty_set();
        }
        const i64 n = grp_.order();
        const i64 gg = mod_norm(g, n);
        const i64 d = gcd_i64(gamma_ == 0 ? n : gamma_, n);
        if (gg % d != 0) return Eps::empty_set();
        // minimal j0 with j0*gamma = g (mod n); period n/d
        for (i64 j0 = 0; j0 < n; ++j0)
            if (mod_norm(j0 * gamma_, n) == gg) return Eps::progression(j0, n / d);
        return Eps::empty_set();
    }

    bool in_support(i64 g) const { return !component_exponents(g).empty(); }

    // Degree of the support generator: the cyclic subgroup / submonoid the
    // support lives on is generated by gamma.
    i64 support_generator() const {
        return grp_.is_integers() ? gamma_ : gcd_i64(gamma_ == 0 ? grp_.order() : gamma_,
                                                     grp_.order());
    }

    // Support degrees for a finite grading group, canonical order.
    std::vector<i64> support_finite() const {
        if (grp_.is_integers()) throw input_error("support_finite on integer grading");
        std::vector<i64> out;
        for (i64 g = 0; g < grp_.order(); ++g)
            if (in_support(g)) out.push_back(g);
        return grp_.sorted_degrees(std::move(out));
    }

    static bool is_prime(i64 n) {
        if (n < 2) return false;
        for (i64 d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::string name_;
    i64 q_;
    Group grp_;
    i64 gamma_;
};

}  // namespace graded
