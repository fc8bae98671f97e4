#pragma once

// Structure-constant graded rings. The additive group is a direct sum of
// cyclic groups Z_{n_i}, one per basis vector; each basis vector carries a
// degree; multiplication is given by structure constants on basis pairs and
// extended bilinearly. Every component R_g is spanned by the basis vectors of
// degree g, so component arithmetic is exact subgroup arithmetic.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graded/common.hpp"
#include "graded/group.hpp"

namespace graded {

// Coordinate vector over a ring or module basis; entry i canonical in [0, n_i).
using Coords = std::vector<i64>;

struct BasisVec {
    std::string name;
    i64 order;   // additive order n_i >= 2
    i64 degree;  // group element
};

class FiniteGradedRing {
public:
    FiniteGradedRing(std::string name, Group grp, std::vector<BasisVec> basis,
                     std::vector<std::vector<Coords>> mul, Coords one)
        : name_(std::move(name)),
          grp_(std::move(grp)),
          basis_(std::move(basis)),
          mul_(std::move(mul)),
          one_(std::move(one)) {
        validate();
        std::vector<i64> degs;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            degs.push_back(basis_[i].degree);
            comp_[basis_[i].degree].push_back(i);
        }
        support_ = grp_.sorted_degrees(std::move(degs));
    }

    const std::string& name() const { return name_; }
    const Group& group() const { return grp_; }
    std::size_t dim() const { return basis_.size(); }
    const BasisVec& basis(std::size_t i) const { return basis_[i]; }
    const std::vector<BasisVec>& basis_list() const { return basis_; }
    const Coords& basis_product(std::size_t i, std::size_t j) const { return mul_[i][j]; }
    const Coords& one() const { return one_; }

    Coords zero() const { return Coords(basis_.size(), 0); }

    Coords basis_elem(std::size_t i) const {
        Coords c = zero();
        c[i] = 1;
        return c;
    }

    bool is_zero(const Coords& a) const {
        for (i64 v : a)
            if (v != 0) return false;
        return true;
    }

    Coords add(const Coords& a, const Coords& b) const {
        Coords c(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            c[i] = mod_norm(a[i] + b[i], basis_[i].order);
        return c;
    }

    Coords neg(const Coords& a) const {
        Coords c(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            c[i] = mod_norm(-a[i], basis_[i].order);
        return c;
    }

    Coords sub(const Coords& a, const Coords& b) const { return add(a, neg(b)); }

    Coords smul(i64 k, const Coords& a) const {
        Coords c(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            c[i] = mod_norm(k * a[i], basis_[i].order);
        return c;
    }

    Coords mul(const Coords& a, const Coords& b) const {
        Coords c = zero();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (b[j] == 0) continue;
                const i64 coeff = a[i] * b[j];
                const Coords& sc = mul_[i][j];
                for (std::size_t k = 0; k < basis_.size(); ++k)
                    if (sc[k] != 0) c[k] = mod_norm(c[k] + coeff * sc[k], basis_[k].order);
            }
        }
        return c;
    }

    // Degrees with a nonzero component, in canonical order. Since every basis
    // vector has additive order >= 2, these are exactly the basis degrees.
    const std::vector<i64>& support() const { return support_; }

    bool in_support(i64 g) const { return comp_.count(g) != 0; }

    // Basis indices of degree g; nullptr when the component is zero.
    const std::vector<std::size_t>* component_indices(i64 g) const {
        auto it = comp_.find(g);
        return it == comp_.end() ? nullptr : &it->second;
    }

    u64 component_size(i64 g) const {
        auto it = comp_.find(g);
        if (it == comp_.end()) return 1;
        u64 n = 1;
        for (std::size_t i : it->second) n = sat_mul(n, static_cast<u64>(basis_[i].order));
        return n;
    }

    u64 ring_size() const {
        u64 n = 1;
        for (const auto& b : basis_) n = sat_mul(n, static_cast<u64>(b.order));
        return n;
    }

    // All elements of R_g (zero included), lexicographically ascending by
    // coordinate vector. Throws cap_reached when the component is too big.
    std::vector<Coords> component_elements(i64 g, const Limits& lim,
                                           Stats* stats = nullptr) const {
        const u64 size = component_size(g);
        if (size > lim.element_cap)
            throw cap_reached("component of degree " + grp_.label(g) + " has " +
                              std::to_string(size) + " elements, cap " +
                              std::to_string(lim.element_cap));
        auto it = comp_.find(g);
        std::vector<Coords> out;
        out.reserve(static_cast<std::size_t>(size));
        if (it == comp_.end()) {
            out.push_back(zero());
            return out;
        }
        const std::vector<std::size_t>& idx = it->second;
        Coords cur = zero();
        while (true) {
            out.push_back(cur);
            // odometer: last index varies fastest, giving lex ascending order
            std::size_t p = idx.size();
            while (p > 0) {
                --p;
                const std::size_t k = idx[p];
                if (cur[k] + 1 < basis_[k].order) {
                    ++cur[k];
                    break;
                }
                cur[k] = 0;
                if (p == 0) {
                    if (stats) stats->elements_enumerated += out.size();
                    return out;
                }
            }
            if (idx.empty()) break;
        }
        if (stats) stats->elements_enumerated += out.size();
        return out;
    }

    // Every ring element; for oracle cross-checks on small rings only.
    std::vector<Coords> all_elements(u64 cap) const {
        const u64 size = ring_size();
        if (size > cap)
            throw cap_reached("ring has " + std::to_string(size) + " elements, cap " +
                              std::to_string(cap));
        std::vector<Coords> out;
        out.reserve(static_cast<std::size_t>(size));
        Coords cur = zero();
        while (true) {
            out.push_back(cur);
            std::size_t p = basis_.size();
            while (p > 0) {
                --p;
                if (cur[p] + 1 < basis_[p].order) {
                    ++cur[p];
                    break;
                }
                cur[p] = 0;
                if (p == 0) return out;
            }
            if (basis_.empty()) break;
        }
        return out;
    }

    bool is_homogeneous(const Coords& a, i64* deg_out = nullptr) const {
        bool found = false;
        i64 deg = grp_.id();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (a[i] == 0) continue;
            if (!found) {
                deg = basis_[i].degree;
                found = true;
            } else if (basis_[i].degree != deg) {
                return false;
            }
        }
        if (deg_out) *deg_out = found ? deg : grp_.id();
        return true;
    }

    // Homogeneous parts in canonical degree order; zero parts omitted.
    std::vector<std::pair<i64, Coords>> decompose(const Coords& a) const {
        std::vector<std::pair<i64, Coords>> out;
        for (i64 g : support_) {
            Coords part = zero();
            bool nz = false;
            for (std::size_t i : comp_.at(g)) {
                part[i] = a[i];
                if (a[i] != 0) nz = true;
            }
            if (nz) out.emplace_back(g, std::move(part));
        }
        return out;
    }

    std::string coords_str(const Coords& a) const {
        std::string s;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (basis_[i].name == "1") {
                s += std::to_string(a[i]);
            } else {
                if (a[i] != 1) s += std::to_string(a[i]) + "*";
                s += basis_[i].name;
            }
        }
        return s.empty() ? "0" : s;
    }

    std::size_t basis_index(const std::string& name) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].name == name) return i;
        throw input_error("unknown basis name '" + name + "'");
    }

    static u64 sat_mul(u64 a, u64 b) {
        if (a != 0 && b > static_cast<u64>(-1) / a) return static_cast<u64>(-1);
        return a * b;
    }

private:
    void validate() {
        const std::size_t n = basis_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (basis_[i].name.empty()) throw input_error("ring: empty basis name");
            if (basis_[i].order < 2) throw input_error("ring: basis additive order must be >= 2");
            if (!grp_.valid_elem(basis_[i].degree))
                throw input_error("ring: invalid degree on basis '" + basis_[i].name + "'");
            for (std::size_t j = i + 1; j < n; ++j)
                if (basis_[i].name == basis_[j].name)
                    throw input_error("ring: duplicate basis name '" + basis_[i].name + "'");
        }
        if (mul_.size() != n) throw input_error("ring: mul table size mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (mul_[i].size() != n) throw input_error("ring: mul table row size mismatch");
            for (std::size_t j = 0; j < n; ++j) {
                const Coords& c = mul_[i][j];
                if (c.size() != n) throw input_error("ring: mul entry size mismatch");
                const i64 want = grp_.op(basis_[i].degree, basis_[j].degree);
                for (std::size_t k = 0; k < n; ++k) {
                    if (c[k] < 0 || c[k] >= basis_[k].order)
                        throw input_error("ring: mul coefficient out of range at (" +
                                          basis_[i].name + "," + basis_[j].name + ")");
                    if (c[k] == 0) continue;
                    if (basis_[k].degree != want)
                        throw input_error(
                            "ring: grading violated: " + basis_[i].name + "*" + basis_[j].name +
                            " hits " + basis_[k].name + " outside degree " + grp_.label(want));
                    // (n_i e_i) e_j = 0 forces n_i * mul(i,j) = 0, same on the right
                    if (mod_norm(basis_[i].order * c[k], basis_[k].order) != 0 ||
                        mod_norm(basis_[j].order * c[k], basis_[k].order) != 0)
                        throw input_error("ring: additive orders inconsistent at (" +
                                          basis_[i].name + "," + basis_[j].name + ")");
                }
            }
        }
        if (one_.size() != n) throw input_error("ring: unit vector size mismatch");
        for (std::size_t k = 0; k < n; ++k)
            if (one_[k] < 0 || one_[k] >= basis_[k].order)
                throw input_error("ring: unit coefficient out of range");
        for (std::size_t k = 0; k < n; ++k)
            if (one_[k] != 0 && basis_[k].degree != grp_.id())
                throw input_error("ring: unit is not homogeneous of identity degree");
        for (std::size_t i = 0; i < n; ++i) {
            const Coords e = [&] {
                Coords c(n, 0);
                c[i] = 1;
                return c;
            }();
            if (mul(one_, e) != e || mul(e, one_) != e)
                throw input_error("ring: unit law fails on basis '" + basis_[i].name + "'");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (mul(mul_[i][j], basis_one(k)) != mul(basis_one(i), mul_[j][k]))
                        throw input_error("ring: associativity fails on basis triple (" +
                                          basis_[i].name + "," + basis_[j].name + "," +
                                          basis_[k].name + ")");
                }
            }
    }

    Coords basis_one(std::size_t i) const {
        Coords c(basis_.size(), 0);
        c[i] = 1;
        return c;
    }

    std::string name_;
    Group grp_;
    std::vector<BasisVec> basis_;
    std::vector<std::vector<Coords>> mul_;
    Coords one_;
    std::vector<i64> support_;
    std::map<i64, std::vector<std::size_t>> comp_;
};

enum class SubRole { additive, left_ideal, right_ideal, two_sided_ideal, submodule };

inline const char* to_string(SubRole r) {
    switch (r) {
        case SubRole::additive: return "additive";
        case SubRole::left_ideal: return "left-ideal";
        case SubRole::right_ideal: return "right-ideal";
        case SubRole::two_sided_ideal: return "two-sided-ideal";
        case SubRole::submodule: return "submodule";
    }
    return "?";
}

// Graded additive subgroup of a ring or module: per-degree sorted element
// sets (each a subgroup of its component, zero included), plus the
// homogeneous generators it was built from. Degrees whose part is just {0}
// are not stored.
class GradedSubgroup {
public:
    explicit GradedSubgroup(SubRole role = SubRole::additive) : role_(role) {}

    SubRole role() const { return role_; }
    void set_role(SubRole r) { role_ = r; }

    bool is_zero() const { return parts_.empty(); }

    const std::map<i64, std::vector<Coords>>& parts() const { return parts_; }
    std::map<i64, std::vector<Coords>>& parts_mut() { return parts_; }

    const std::vector<Coords>* part(i64 g) const {
        auto it = parts_.find(g);
        return it == parts_.end() ? nullptr : &it->second;
    }

    const std::vector<std::pair<i64, Coords>>& generators() const { return gens_; }
    std::vector<std::pair<i64, Coords>>& generators_mut() { return gens_; }

    // Total stored elements (zeros included), for cap accounting.
    u64 storage_size() const {
        u64 n = 0;
        for (const auto& [g, v] : parts_) n += v.size();
        return n;
    }

    // Actual cardinality: the direct sum of the parts.
    u64 cardinality() const {
        u64 n = 1;
        for (const auto& [g, v] : parts_)
            n = FiniteGradedRing::sat_mul(n, static_cast<u64>(v.size()));
        return n;
    }

    // Membership of a homogeneous element of the given degree.
    bool contains(i64 g, const Coords& x, const Coords& zero) const {
        if (x == zero) return true;
        auto it = parts_.find(g);
        if (it == parts_.end()) return false;
        return std::binary_search(it->second.begin(), it->second.end(), x);
    }

    void drop_trivial_parts() {
        for (auto it = parts_.begin(); it != parts_.end();) {
            if (it->second.size() <= 1)
                it = parts_.erase(it);
            else
                ++it;
        }
    }

    friend bool operator==(const GradedSubgroup& a, const GradedSubgroup& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const GradedSubgroup& a, const GradedSubgroup& b) {
        return !(a == b);
    }

    // Canonical order for lattice listings: larger submodule first, then
    // parts lexicographically. Deterministic and schedule-independent.
    static bool canonical_less(const GradedSubgroup& a, const GradedSubgroup& b) {
        const u64 ca = a.cardinality(), cb = b.cardinality();
        if (ca != cb) return ca > cb;
        return a.parts_ < b.parts_;
    }

private:
    SubRole role_;
    std::map<i64, std::vector<Coords>> parts_;
    std::vector<std::pair<i64, Coords>> gens_;
};

namespace detail {

// Grow the sorted subgroup `part` (zero included) by adjoining h: the result
// is the union of cosets part + j*h until j*h falls back into part.
template <typename AddFn>
bool grow_part(std::vector<Coords>& part, const Coords& h, AddFn add, std::size_t cap,
               Stats* stats) {
    if (std::binary_search(part.begin(), part.end(), h)) return false;
    std::vector<Coords> result = part;
    Coords shift = h;
    while (!std::binary_search(part.begin(), part.end(), shift)) {
        for (const Coords& x : part) {
            result.push_back(add(x, shift));
            if (result.size() > cap)
                throw cap_reached("subgroup closure exceeded element cap " + std::to_string(cap));
        }
        shift = add(shift, h);
    }
    std::sort(result.begin(), result.end());
    if (stats) stats->elements_enumerated += result.size() - part.size();
    part = std::move(result);
    return true;
}

}  // namespace detail

// Additive closure of homogeneous generators, per degree. Works for any
// carrier with zero()/add() (rings and modules).
template <typename Carrier>
GradedSubgroup additive_closure(const Carrier& R,
                                const std::vector<std::pair<i64, Coords>>& gens,
                                const Limits& lim, Stats* stats = nullptr,
                                SubRole role = SubRole::additive) {
    GradedSubgroup sub(role);
    const Coords zero = R.zero();
    auto add = [&R](const Coords& a, const Coords& b) { return R.add(a, b); };
    u64 other = 0;
    for (const auto& [g, x] : gens) {
        if (x == zero) continue;
        auto& part = sub.parts_mut()[g];
        if (part.empty()) part.push_back(zero);
        other = sub.storage_size() - part.size();
        const std::size_t budget =
            lim.element_cap > other ? static_cast<std::size_t>(lim.element_cap - other) : 0;
        detail::grow_part(part, x, add, budget, stats);
    }
    sub.generators_mut() = gens;
    sub.drop_trivial_parts();
    if (stats) stats->subgroups_built += 1;
    return sub;
}

// Smallest ideal of the requested sidedness containing the homogeneous
// generators. For a unital ring the two-sided ideal is the additive span of
// the basis sandwiches e_i s e_j (closed under basis action by
// associativity); one-sided ideals use one-sided basis products.
inline GradedSubgroup ideal_closure(const FiniteGradedRing& R,
                                    const std::vector<std::pair<i64, Coords>>& gens,
                                    SubRole sided, const Limits& lim, Stats* stats = nullptr) {
    std::vector<std::pair<i64, Coords>> seed;
    const Group& G = R.group();
    for (const auto& [g, s] : gens) {
        seed.emplace_back(g, s);
        for (std::size_t i = 0; i < R.dim(); ++i) {
            const i64 di = R.basis(i).degree;
            if (sided == SubRole::left_ideal || sided == SubRole::two_sided_ideal) {
                Coords ls = R.mul(R.basis_elem(i), s);
                if (stats) stats->products_computed += 1;
                seed.emplace_back(G.op(di, g), std::move(ls));
            }
            if (sided == SubRole::right_ideal || sided == SubRole::two_sided_ideal) {
                Coords rs = R.mul(s, R.basis_elem(i));
                if (stats) stats->products_computed += 1;
                seed.emplace_back(G.op(g, di), std::move(rs));
            }
            if (sided == SubRole::two_sided_ideal) {
                for (std::size_t j = 0; j < R.dim(); ++j) {
                    Coords both = R.mul(R.mul(R.basis_elem(i), s), R.basis_elem(j));
                    if (stats) stats->products_computed += 2;
                    seed.emplace_back(G.op(G.op(di, g), R.basis(j).degree), std::move(both));
                }
            }
        }
    }
    GradedSubgroup sub = additive_closure(R, seed, lim, stats, sided);
    sub.generators_mut() = gens;
    return sub;
}

// The additive subgroup R_g R_h of R_{gh}: closure of pairwise basis
// products (exact by bilinearity). Sorted, zero included.
inline std::vector<Coords> component_product(const FiniteGradedRing& R, i64 g, i64 h,
                                             const Limits& lim, Stats* stats = nullptr) {
    std::vector<Coords> part = {R.zero()};
    const auto* ig = R.component_indices(g);
    const auto* ih = R.component_indices(h);
    if (!ig || !ih) return part;
    auto add = [&R](const Coords& a, const Coords& b) { return R.add(a, b); };
    for (std::size_t i : *ig)
        for (std::size_t j : *ih) {
            const Coords& p = R.basis_product(i, j);
            if (stats) stats->products_computed += 1;
            if (!R.is_zero(p)) detail::grow_part(part, p, add, lim.element_cap, stats);
        }
    return part;
}

template <typename Carrier>
bool part_is_whole_component(const Carrier& R, const std::vector<Coords>& part, i64 g) {
    return static_cast<u64>(part.size()) == R.component_size(g);
}

// All components present and full (for a ring: A = R; for a module: A = M).
template <typename Carrier>
bool subgroup_is_whole_carrier(const Carrier& R, const GradedSubgroup& A) {
    for (i64 g : R.support()) {
        if (R.component_size(g) == 1) continue;
        const auto* p = A.part(g);
        if (!p || static_cast<u64>(p->size()) != R.component_size(g)) return false;
    }
    return true;
}

inline bool subgroup_is_whole_ring(const FiniteGradedRing& R, const GradedSubgroup& A) {
    return subgroup_is_whole_carrier(R, A);
}

// Membership of an arbitrary (possibly non-homogeneous) element.
template <typename Carrier>
bool subgroup_contains_elem(const Carrier& R, const GradedSubgroup& A, const Coords& x) {
    const Coords zero = R.zero();
    for (const auto& [g, part] : R.decompose(x))
        if (!A.contains(g, part, zero)) return false;
    return true;
}

template <typename Carrier>
GradedSubgroup subgroup_sum(const Carrier& R, const GradedSubgroup& A, const GradedSubgroup& B,
                            const Limits& lim, Stats* stats = nullptr) {
    GradedSubgroup out = A;
    const Coords zero = R.zero();
    auto add = [&R](const Coords& a, const Coords& b) { return R.add(a, b); };
    for (const auto& [g, bpart] : B.parts()) {
        auto& part = out.parts_mut()[g];
        if (part.empty()) part.push_back(zero);
        for (const Coords& x : bpart) {
            const u64 other = out.storage_size() - part.size();
            const std::size_t budget =
                lim.element_cap > other ? static_cast<std::size_t>(lim.element_cap - other) : 0;
            if (x != zero) detail::grow_part(part, x, add, budget, stats);
        }
    }
    for (const auto& [g, x] : B.generators()) out.generators_mut().emplace_back(g, x);
    out.drop_trivial_parts();
    if (out.role() != B.role()) out.set_role(SubRole::additive);
    return out;
}

inline GradedSubgroup subgroup_intersect(const GradedSubgroup& A, const GradedSubgroup& B) {
    GradedSubgroup out(A.role() == B.role() ? A.role() : SubRole::additive);
    for (const auto& [g, apart] : A.parts()) {
        const auto* bpart = B.part(g);
        if (!bpart) continue;
        std::vector<Coords> meet;
        std::set_intersection(apart.begin(), apart.end(), bpart->begin(), bpart->end(),
                              std::back_inserter(meet));
        if (meet.size() > 1) out.parts_mut()[g] = std::move(meet);
    }
    return out;
}

// B subset of A, per degree.
inline bool subgroup_contains_subgroup(const GradedSubgroup& A, const GradedSubgroup& B) {
    for (const auto& [g, bpart] : B.parts()) {
        const auto* apart = A.part(g);
        if (!apart) return false;
        if (!std::includes(apart->begin(), apart->end(), bpart.begin(), bpart.end()))
            return false;
    }
    return true;
}

// The whole carrier as a graded subgroup (materialized components).
template <typename Carrier>
GradedSubgroup whole_carrier_subgroup(const Carrier& R, const Limits& lim,
                                      Stats* stats = nullptr,
                                      SubRole role = SubRole::two_sided_ideal) {
    GradedSubgroup out(role);
    u64 total = 0;
    for (i64 g : R.support()) {
        total += R.component_size(g);
        if (total > lim.element_cap)
            throw cap_reached("whole-carrier materialization exceeds element cap");
        out.parts_mut()[g] = R.component_elements(g, lim, stats);
    }
    out.drop_trivial_parts();
    return out;
}

inline GradedSubgroup whole_ring_subgroup(const FiniteGradedRing& R, const Limits& lim,
                                          Stats* stats = nullptr) {
    return whole_carrier_subgroup(R, lim, stats, SubRole::two_sided_ideal);
}

// Searches for u in R_g with a two-sided inverse; the search for the inverse
// is restricted to the inverse-degree component, which is complete because a
// homogeneous unit's inverse is homogeneous of inverse degree.
inline std::optional<std::pair<Coords, Coords>> homogeneous_unit_search(
    const FiniteGradedRing& R, i64 g, const Limits& lim, Stats* stats = nullptr) {
    if (R.dim() == 0) return std::make_pair(R.zero(), R.zero());  // zero ring: 0 = 1
    const i64 gi = R.group().inv(g);
    const std::vector<Coords> us = R.component_elements(g, lim, stats);
    const std::vector<Coords> vs = R.component_elements(gi, lim, stats);
    for (const Coords& u : us) {
        if (R.is_zero(u)) continue;
        for (const Coords& v : vs) {
            if (R.is_zero(v)) continue;
            if (stats) stats->products_computed += 2;
            if (R.mul(u, v) == R.one() && R.mul(v, u) == R.one())
                return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

// Two-sided inverse of x via power iteration, with no assumption on where the
// inverse lives. In a finite ring x is a unit iff some power of x equals 1
// (then the previous power is the inverse, and it is two-sided because powers
// of x commute with x). For a unit the power sequence is purely periodic, so
// revisiting an earlier power before ever reaching 1 proves x is not a unit.
inline std::optional<Coords> power_inverse(const FiniteGradedRing& R, const Coords& x,
                                           u64 step_cap, Stats* stats = nullptr) {
    if (R.dim() == 0) return R.zero();  // zero ring: 0 = 1
    if (R.is_zero(x)) return std::nullopt;
    std::set<Coords> seen;
    Coords prev = x;
    Coords p = x;
    for (u64 step = 0;; ++step) {
        if (step > step_cap) throw cap_reached("power iteration exceeded step cap");
        if (p == R.one()) return prev;
        if (!seen.insert(p).second) return std::nullopt;
        prev = p;
        if (stats) stats->products_computed += 1;
        p = R.mul(p, x);
    }
}

// Non-graded closures, stored as a flat sorted element set. Used for
// statements about arbitrary (one/two-sided) ideals.
inline std::vector<Coords> flat_ideal_closure(const FiniteGradedRing& R,
                                              const std::vector<Coords>& gens, SubRole sided,
                                              const Limits& lim, Stats* stats = nullptr) {
    std::vector<Coords> set = {R.zero()};
    auto add = [&R](const Coords& a, const Coords& b) { return R.add(a, b); };
    std::vector<Coords> seed;
    for (const Coords& s : gens) {
        seed.push_back(s);
        for (std::size_t i = 0; i < R.dim(); ++i) {
            if (sided == SubRole::left_ideal || sided == SubRole::two_sided_ideal)
                seed.push_back(R.mul(R.basis_elem(i), s));
            if (sided == SubRole::right_ideal || sided == SubRole::two_sided_ideal)
                seed.push_back(R.mul(s, R.basis_elem(i)));
            if (sided == SubRole::two_sided_ideal)
                for (std::size_t j = 0; j < R.dim(); ++j)
                    seed.push_back(R.mul(R.mul(R.basis_elem(i), s), R.basis_elem(j)));
        }
    }
    if (stats) stats->products_computed += seed.size();
    for (const Coords& x : seed)
        if (!R.is_zero(x)) detail::grow_part(set, x, add, lim.element_cap, stats);
    return set;
}

// Does a flat element set satisfy the graded decomposition property?
inline bool flat_set_is_graded(const FiniteGradedRing& R, const std::vector<Coords>& set) {
    for (const Coords& x : set)
        for (const auto& [g, part] : R.decompose(x))
            if (!std::binary_search(set.begin(), set.end(), part)) return false;
    return true;
}

}  // namespace graded
