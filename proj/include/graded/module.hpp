#pragma once

// Finite graded left modules over a structure-constant graded ring. Same
// coordinate representation as the ring: the additive group is a direct sum
// of cyclic groups, one per basis vector, each basis vector carries a degree,
// and the ring acts through an action table extended bilinearly.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graded/common.hpp"
#include "graded/ring.hpp"
#include "graded/smith.hpp"

namespace graded {

class FiniteGradedModule {
public:
    FiniteGradedModule(std::string name, FiniteGradedRing ring, std::vector<BasisVec> basis,
                       std::vector<std::vector<Coords>> act)
        : name_(std::move(name)),
          ring_(std::move(ring)),
          basis_(std::move(basis)),
          act_(std::move(act)) {
        validate();
        std::vector<i64> degs;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            degs.push_back(basis_[i].degree);
            comp_[basis_[i].degree].push_back(i);
        }
        support_ = group().sorted_degrees(std::move(degs));
    }

    const std::string& name() const { return name_; }
    const FiniteGradedRing& ring() const { return ring_; }
    const Group& group() const { return ring_.group(); }
    std::size_t dim() const { return basis_.size(); }
    const BasisVec& basis(std::size_t i) const { return basis_[i]; }
    const std::vector<BasisVec>& basis_list() const { return basis_; }
    const Coords& act_basis(std::size_t i, std::size_t j) const { return act_[i][j]; }

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

    // r * m for a ring element r and module element m.
    Coords act(const Coords& r, const Coords& m) const {
        Coords c = zero();
        for (std::size_t i = 0; i < ring_.dim(); ++i) {
            if (r[i] == 0) continue;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (m[j] == 0) continue;
                const i64 coeff = r[i] * m[j];
                const Coords& sc = act_[i][j];
                for (std::size_t k = 0; k < basis_.size(); ++k)
                    if (sc[k] != 0) c[k] = mod_norm(c[k] + coeff * sc[k], basis_[k].order);
            }
        }
        return c;
    }

    const std::vector<i64>& support() const { return support_; }

    bool in_support(i64 g) const { return comp_.count(g) != 0; }

    const std::vector<std::size_t>* component_indices(i64 g) const {
        auto it = comp_.find(g);
        return it == comp_.end() ? nullptr : &it->second;
    }

    u64 component_size(i64 g) const {
        auto it = comp_.find(g);
        if (it == comp_.end()) return 1;
        u64 n = 1;
        for (std::size_t i : it->second) n = FiniteGradedRing::sat_mul(n, static_cast<u64>(basis_[i].order));
        return n;
    }

    u64 module_size() const {
        u64 n = 1;
        for (const auto& b : basis_) n = FiniteGradedRing::sat_mul(n, static_cast<u64>(b.order));
        return n;
    }

    std::vector<Coords> component_elements(i64 g, const Limits& lim,
                                           Stats* stats = nullptr) const {
        const u64 size = component_size(g);
        if (size > lim.element_cap)
            throw cap_reached("module component of degree " + group().label(g) + " has " +
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

    std::vector<Coords> all_elements(u64 cap) const {
        const u64 size = module_size();
        if (size > cap)
            throw cap_reached("module has " + std::to_string(size) + " elements, cap " +
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
        i64 deg = group().id();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (a[i] == 0) continue;
            if (!found) {
                deg = basis_[i].degree;
                found = true;
            } else if (basis_[i].degree != deg) {
                return false;
            }
        }
        if (deg_out) *deg_out = found ? deg : group().id();
        return true;
    }

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
        throw input_error("unknown module basis name '" + name + "'");
    }

private:
    void validate() {
        const std::size_t n = basis_.size();
        const std::size_t rn = ring_.dim();
        for (std::size_t i = 0; i < n; ++i) {
            if (basis_[i].name.empty()) throw input_error("module: empty basis name");
            if (basis_[i].order < 2)
                throw input_error("module: basis additive order must be >= 2");
            if (!group().valid_elem(basis_[i].degree))
                throw input_error("module: invalid degree on basis '" + basis_[i].name + "'");
            for (std::size_t j = i + 1; j < n; ++j)
                if (basis_[i].name == basis_[j].name)
                    throw input_error("module: duplicate basis name '" + basis_[i].name + "'");
        }
        if (act_.size() != rn) throw input_error("module: action table size mismatch");
        for (std::size_t i = 0; i < rn; ++i) {
            if (act_[i].size() != n) throw input_error("module: action table row size mismatch");
            for (std::size_t j = 0; j < n; ++j) {
                const Coords& c = act_[i][j];
                if (c.size() != n) throw input_error("module: action entry size mismatch");
                const i64 want = group().op(ring_.basis(i).degree, basis_[j].degree);
                for (std::size_t k = 0; k < n; ++k) {
                    if (c[k] < 0 || c[k] >= basis_[k].order)
                        throw input_error("module: action coefficient out of range at (" +
                                          ring_.basis(i).name + "," + basis_[j].name + ")");
                    if (c[k] == 0) continue;
                    if (basis_[k].degree != want)
                        throw input_error("module: grading violated: " + ring_.basis(i).name +
                                          "*" + basis_[j].name + " hits " + basis_[k].name +
                                          " outside degree " + group().label(want));
                    if (mod_norm(ring_.basis(i).order * c[k], basis_[k].order) != 0 ||
                        mod_norm(basis_[j].order * c[k], basis_[k].order) != 0)
                        throw input_error("module: additive orders inconsistent at (" +
                                          ring_.basis(i).name + "," + basis_[j].name + ")");
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Coords m = basis_one(j);
            if (act(ring_.one(), m) != m)
                throw input_error("module: unit action fails on basis '" + basis_[j].name + "'");
        }
        for (std::size_t i = 0; i < rn; ++i)
            for (std::size_t i2 = 0; i2 < rn; ++i2)
                for (std::size_t j = 0; j < n; ++j) {
                    // (e_i e_i2) m_j = e_i (e_i2 m_j)
                    if (act(ring_.basis_product(i, i2), basis_one(j)) !=
                        act(ring_.basis_elem(i), act_[i2][j]))
                        throw input_error("module: associativity fails on (" +
                                          ring_.basis(i).name + "," + ring_.basis(i2).name +
                                          "," + basis_[j].name + ")");
                }
    }

    Coords basis_one(std::size_t j) const {
        Coords c(basis_.size(), 0);
        c[j] = 1;
        return c;
    }

    std::string name_;
    FiniteGradedRing ring_;
    std::vector<BasisVec> basis_;
    std::vector<std::vector<Coords>> act_;
    std::vector<i64> support_;
    std::map<i64, std::vector<std::size_t>> comp_;
};

// R as a left module over itself: same basis, action = multiplication.
inline FiniteGradedModule ring_as_module(const FiniteGradedRing& R, const std::string& name) {
    std::vector<std::vector<Coords>> act;
    for (std::size_t i = 0; i < R.dim(); ++i) {
        act.emplace_back();
        for (std::size_t j = 0; j < R.dim(); ++j) act.back().push_back(R.basis_product(i, j));
    }
    return FiniteGradedModule(name, R, R.basis_list(), std::move(act));
}

// Is the graded subgroup A closed under the ring action?
inline bool is_submodule(const FiniteGradedModule& M, const GradedSubgroup& A) {
    const FiniteGradedRing& R = M.ring();
    const Coords zero = M.zero();
    for (const auto& [g, part] : A.parts())
        for (const Coords& x : part) {
            if (x == zero) continue;
            for (std::size_t i = 0; i < R.dim(); ++i) {
                const Coords y = M.act(R.basis_elem(i), x);
                if (!A.contains(M.group().op(R.basis(i).degree, g), y, zero)) return false;
            }
        }
    return true;
}

// Smallest graded submodule containing the homogeneous generators: the
// additive span of the generators and their basis actions (closed under the
// whole ring action by associativity and unitality).
inline GradedSubgroup submodule_closure(const FiniteGradedModule& M,
                                        const std::vector<std::pair<i64, Coords>>& gens,
                                        const Limits& lim, Stats* stats = nullptr) {
    const FiniteGradedRing& R = M.ring();
    std::vector<std::pair<i64, Coords>> seed;
    for (const auto& [g, x] : gens) {
        seed.emplace_back(g, x);
        for (std::size_t i = 0; i < R.dim(); ++i) {
            Coords y = M.act(R.basis_elem(i), x);
            if (stats) stats->products_computed += 1;
            seed.emplace_back(M.group().op(R.basis(i).degree, g), std::move(y));
        }
    }
    GradedSubgroup sub = additive_closure(M, seed, lim, stats, SubRole::submodule);
    sub.generators_mut() = gens;
    return sub;
}

// (N : M) = {r in R : r M <= N}, a graded two-sided ideal of R. N need only
// be a graded subgroup of M.
inline GradedSubgroup colon_ideal(const FiniteGradedModule& M, const GradedSubgroup& N,
                                  const Limits& lim, Stats* stats = nullptr) {
    const FiniteGradedRing& R = M.ring();
    const Coords zero = M.zero();
    GradedSubgroup out(SubRole::two_sided_ideal);
    for (i64 g : R.support()) {
        std::vector<Coords> part;
        for (const Coords& r : R.component_elements(g, lim, stats)) {
            bool ok = true;
            for (std::size_t j = 0; j < M.dim() && ok; ++j) {
                if (stats) stats->products_computed += 1;
                const Coords y = M.act(r, M.basis_elem(j));
                ok = N.contains(M.group().op(g, M.basis(j).degree), y, zero);
            }
            if (ok) part.push_back(r);
        }
        if (part.size() > 1) out.parts_mut()[g] = std::move(part);
    }
    return out;
}

inline GradedSubgroup annihilator(const FiniteGradedModule& M, const Limits& lim,
                                  Stats* stats = nullptr) {
    return colon_ideal(M, GradedSubgroup(SubRole::submodule), lim, stats);
}

// (N : m) = {r in R : r m in N} for a homogeneous m of degree h.
inline GradedSubgroup colon_of_element(const FiniteGradedModule& M, const GradedSubgroup& N,
                                       i64 h, const Coords& m, const Limits& lim,
                                       Stats* stats = nullptr) {
    const FiniteGradedRing& R = M.ring();
    const Coords zero = M.zero();
    GradedSubgroup out(SubRole::left_ideal);
    for (i64 g : R.support()) {
        std::vector<Coords> part;
        for (const Coords& r : R.component_elements(g, lim, stats)) {
            if (stats) stats->products_computed += 1;
            if (N.contains(M.group().op(g, h), M.act(r, m), zero)) part.push_back(r);
        }
        if (part.size() > 1) out.parts_mut()[g] = std::move(part);
    }
    return out;
}

namespace detail {

inline bool rings_match(const FiniteGradedRing& a, const FiniteGradedRing& b) {
    if (!(a.group() == b.group()) || a.dim() != b.dim() || a.one() != b.one()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.basis(i).name != b.basis(i).name || a.basis(i).order != b.basis(i).order ||
            a.basis(i).degree != b.basis(i).degree)
            return false;
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
    }
    return true;
}

// Cyclic decomposition of one degree component modulo a subgroup part.
// Returns the invariant factors >= 2 with coordinate maps into and out of
// the quotient.
struct ComponentQuotient {
    std::vector<std::size_t> idx;    // module basis indices of this degree
    std::vector<i64> orders;         // invariant factors >= 2
    std::vector<std::size_t> keep;   // positions in the smith diagonal
    SmithForm sf;

    // class of a homogeneous element (coords in the ambient module)
    std::vector<i64> project(const Coords& x) const {
        std::vector<i64> out;
        for (std::size_t t = 0; t < keep.size(); ++t) {
            i64 v = 0;
            for (std::size_t c = 0; c < idx.size(); ++c) v += x[idx[c]] * sf.V[c][keep[t]];
            out.push_back(mod_norm(v, orders[t]));
        }
        return out;
    }
};

inline ComponentQuotient component_quotient(const FiniteGradedModule& M, i64 g,
                                            const std::vector<Coords>* npart) {
    ComponentQuotient cq;
    const auto* ip = M.component_indices(g);
    if (ip) cq.idx = *ip;
    const std::size_t k = cq.idx.size();
    std::vector<std::vector<i64>> rel;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<i64> row(k, 0);
        row[c] = M.basis(cq.idx[c]).order;
        rel.push_back(std::move(row));
    }
    if (npart)
        for (const Coords& x : *npart) {
            std::vector<i64> row(k);
            for (std::size_t c = 0; c < k; ++c) row[c] = x[cq.idx[c]];
            rel.push_back(std::move(row));
        }
    cq.sf = smith_form(std::move(rel), k);
    for (std::size_t t = 0; t < k; ++t) {
        if (cq.sf.diag[t] == 0)
            throw input_error("module quotient: relation lattice not of full rank");
        if (cq.sf.diag[t] >= 2) {
            cq.keep.push_back(t);
            cq.orders.push_back(cq.sf.diag[t]);
        }
    }
    return cq;
}

// The module is literally the ring in module clothing: same basis, action
// equal to multiplication.
inline bool is_ring_as_module(const FiniteGradedModule& M) {
    const FiniteGradedRing& R = M.ring();
    if (M.dim() != R.dim()) return false;
    for (std::size_t i = 0; i < R.dim(); ++i) {
        if (M.basis(i).name != R.basis(i).name || M.basis(i).order != R.basis(i).order ||
            M.basis(i).degree != R.basis(i).degree)
            return false;
        for (std::size_t j = 0; j < R.dim(); ++j)
            if (M.act_basis(i, j) != R.basis_product(i, j)) return false;
    }
    return true;
}

}  // namespace detail

enum class HomKind { plain, graded, grade_fixing };

inline std::string hom_kind_str(HomKind k) {
    switch (k) {
        case HomKind::plain: return "plain";
        case HomKind::graded: return "graded";
        default: return "grade_fixing";
    }
}

// Module homomorphism given by basis images. A plain hom is additive and
// R-linear only; a graded hom additionally preserves every degree; a grade
// fixing hom is a graded hom whose codomain is the ring as a module over
// itself.
class GradedModuleHom {
public:
    GradedModuleHom(FiniteGradedModule dom, FiniteGradedModule cod, std::vector<Coords> images,
                    HomKind kind = HomKind::graded)
        : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)), kind_(kind) {
        if (!detail::rings_match(dom_.ring(), cod_.ring()))
            throw input_error("hom: modules over different rings");
        if (images_.size() != dom_.dim()) throw input_error("hom: image count mismatch");
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i].size() != cod_.dim()) throw input_error("hom: image size mismatch");
            for (std::size_t k = 0; k < cod_.dim(); ++k)
                if (images_[i][k] < 0 || images_[i][k] >= cod_.basis(k).order)
                    throw input_error("hom: image coefficient out of range");
            if (!cod_.is_zero(cod_.smul(dom_.basis(i).order, images_[i])))
                throw input_error("hom: additive order not respected on basis '" +
                                  dom_.basis(i).name + "'");
            if (kind_ == HomKind::plain) continue;
            i64 deg = 0;
            if (!cod_.is_homogeneous(images_[i], &deg) ||
                (!cod_.is_zero(images_[i]) && deg != dom_.basis(i).degree))
                throw input_error("hom: image of '" + dom_.basis(i).name +
                                  "' is not homogeneous of the same degree");
        }
        if (kind_ == HomKind::grade_fixing && !detail::is_ring_as_module(cod_))
            throw input_error("hom: grade fixing maps land in the ring as a module");
        const FiniteGradedRing& R = dom_.ring();
        for (std::size_t r = 0; r < R.dim(); ++r)
            for (std::size_t j = 0; j < dom_.dim(); ++j)
                if (apply(dom_.act(R.basis_elem(r), dom_.basis_elem(j))) !=
                    cod_.act(R.basis_elem(r), images_[j]))
                    throw input_error("hom: not linear on (" + R.basis(r).name + "," +
                                      dom_.basis(j).name + ")");
    }

    const FiniteGradedModule& dom() const { return dom_; }
    const FiniteGradedModule& cod() const { return cod_; }
    const std::vector<Coords>& images() const { return images_; }
    HomKind kind() const { return kind_; }

    Coords apply(const Coords& x) const {
        Coords y = cod_.zero();
        for (std::size_t i = 0; i < dom_.dim(); ++i)
            if (x[i] != 0) y = cod_.add(y, cod_.smul(x[i], images_[i]));
        return y;
    }

    GradedSubgroup kernel(const Limits& lim, Stats* stats = nullptr) const {
        require_graded("kernel");
        GradedSubgroup out(SubRole::submodule);
        for (i64 g : dom_.support()) {
            std::vector<Coords> part;
            for (const Coords& x : dom_.component_elements(g, lim, stats))
                if (cod_.is_zero(apply(x))) part.push_back(x);
            if (part.size() > 1) out.parts_mut()[g] = std::move(part);
        }
        return out;
    }

    GradedSubgroup image(const Limits& lim, Stats* stats = nullptr) const {
        require_graded("image");
        std::vector<std::pair<i64, Coords>> gens;
        for (std::size_t i = 0; i < dom_.dim(); ++i)
            if (!cod_.is_zero(images_[i])) gens.emplace_back(dom_.basis(i).degree, images_[i]);
        return submodule_closure(cod_, gens, lim, stats);
    }

    // f(N) for a graded subgroup N of the domain: the set of images is
    // already an additive group and closed under the action.
    GradedSubgroup image_of(const GradedSubgroup& N, const Limits& lim,
                            Stats* stats = nullptr) const {
        require_graded("image_of");
        std::vector<std::pair<i64, Coords>> gens;
        for (const auto& [g, part] : N.parts())
            for (const Coords& x : part) {
                Coords y = apply(x);
                if (!cod_.is_zero(y)) gens.emplace_back(g, std::move(y));
            }
        return additive_closure(cod_, gens, lim, stats, SubRole::submodule);
    }

    // f^{-1}(L) for a graded subgroup L of the codomain.
    GradedSubgroup preimage(const GradedSubgroup& L, const Limits& lim,
                            Stats* stats = nullptr) const {
        require_graded("preimage");
        const Coords czero = cod_.zero();
        GradedSubgroup out(SubRole::submodule);
        for (i64 g : dom_.support()) {
            std::vector<Coords> part;
            for (const Coords& x : dom_.component_elements(g, lim, stats))
                if (L.contains(g, apply(x), czero)) part.push_back(x);
            if (part.size() > 1) out.parts_mut()[g] = std::move(part);
        }
        return out;
    }

    bool injective(const Limits& lim, Stats* stats = nullptr) const {
        if (kind_ == HomKind::plain) {
            for (const Coords& x : dom_.all_elements(lim.element_cap))
                if (!dom_.is_zero(x) && cod_.is_zero(apply(x))) return false;
            return true;
        }
        return kernel(lim, stats).is_zero();
    }

    bool surjective(const Limits& lim, Stats* stats = nullptr) const {
        if (kind_ == HomKind::plain) {
            std::set<Coords> seen;
            for (const Coords& x : dom_.all_elements(lim.element_cap)) seen.insert(apply(x));
            return seen.size() == cod_.module_size();
        }
        return subgroup_is_whole_carrier(cod_, image(lim, stats));
    }

private:
    void require_graded(const char* op) const {
        if (kind_ == HomKind::plain)
            throw input_error(std::string("hom: ") + op + " needs a graded map");
    }

    FiniteGradedModule dom_, cod_;
    std::vector<Coords> images_;
    HomKind kind_;
};

struct ModuleWithHom {
    FiniteGradedModule module;
    GradedModuleHom hom;
};

// M / N for a graded submodule N, with the canonical projection. Each new
// basis vector is a cyclic factor of one degree component, with degree
// labels baked into the names.
inline ModuleWithHom quotient_with_projection(const FiniteGradedModule& M,
                                              const GradedSubgroup& N, const std::string& name) {
    if (!is_submodule(M, N)) throw input_error("quotient_module: not a submodule");
    const FiniteGradedRing& R = M.ring();
    std::map<i64, detail::ComponentQuotient> cqs;
    std::vector<BasisVec> basis;
    std::map<i64, std::size_t> first_index;  // degree -> first new basis index
    for (i64 g : M.support()) {
        detail::ComponentQuotient cq = detail::component_quotient(M, g, N.part(g));
        first_index[g] = basis.size();
        for (std::size_t t = 0; t < cq.orders.size(); ++t)
            basis.push_back({"q" + M.group().label(g) + "_" + std::to_string(t), cq.orders[t], g});
        cqs.emplace(g, std::move(cq));
    }
    // lift of new basis vector t of degree g: row keep[t] of Vinv
    auto lift = [&](i64 g, std::size_t t) {
        const detail::ComponentQuotient& cq = cqs.at(g);
        Coords x = M.zero();
        for (std::size_t c = 0; c < cq.idx.size(); ++c)
            x[cq.idx[c]] = mod_norm(cq.sf.Vinv[cq.keep[t]][c], M.basis(cq.idx[c]).order);
        return x;
    };
    std::vector<std::vector<Coords>> act(R.dim(), std::vector<Coords>(basis.size()));
    for (std::size_t i = 0; i < R.dim(); ++i) {
        std::size_t col = 0;
        for (i64 g : M.support()) {
            const detail::ComponentQuotient& cq = cqs.at(g);
            for (std::size_t t = 0; t < cq.orders.size(); ++t, ++col) {
                const Coords y = M.act(R.basis_elem(i), lift(g, t));
                const i64 h = M.group().op(R.basis(i).degree, g);
                Coords out(basis.size(), 0);
                auto it = cqs.find(h);
                if (it != cqs.end()) {
                    const std::vector<i64> yq = it->second.project(y);
                    for (std::size_t t2 = 0; t2 < yq.size(); ++t2)
                        out[first_index.at(h) + t2] = yq[t2];
                } else if (!M.is_zero(y)) {
                    throw input_error("quotient_module: action leaves the grading");
                }
                act[i][col] = std::move(out);
            }
        }
    }
    std::vector<Coords> proj(M.dim());
    for (std::size_t j = 0; j < M.dim(); ++j) {
        const i64 g = M.basis(j).degree;
        const detail::ComponentQuotient& cq = cqs.at(g);
        const std::vector<i64> yq = cq.project(M.basis_elem(j));
        Coords out(basis.size(), 0);
        for (std::size_t t2 = 0; t2 < yq.size(); ++t2) out[first_index.at(g) + t2] = yq[t2];
        proj[j] = std::move(out);
    }
    FiniteGradedModule Q(name, R, std::move(basis), std::move(act));
    GradedModuleHom pi(M, Q, std::move(proj));
    return {std::move(Q), std::move(pi)};
}

inline FiniteGradedModule quotient_module(const FiniteGradedModule& M, const GradedSubgroup& N,
                                          const std::string& name) {
    return quotient_with_projection(M, N, name).module;
}

// N itself as a graded module (cyclic coordinates), with the inclusion back
// into M.
inline ModuleWithHom restrict_with_inclusion(const FiniteGradedModule& M, const GradedSubgroup& N,
                                             const std::string& name) {
    if (!is_submodule(M, N)) throw input_error("restrict_module: not a submodule");
    const FiniteGradedRing& R = M.ring();

    struct CompRestrict {
        std::vector<std::size_t> idx;
        std::vector<i64> d1;             // invariant factors of the lattice basis
        SmithForm sf1;                   // presents the subgroup lattice L_N
        std::vector<i64> orders;         // invariant factors >= 2 of N_g
        std::vector<std::size_t> keep;
        SmithForm sf2;

        // coords of x (element of N_g) in the cyclic presentation
        std::vector<i64> project(const Coords& x) const {
            const std::size_t k = idx.size();
            std::vector<i64> c(k, 0);
            for (std::size_t j = 0; j < k; ++j) {
                i64 v = 0;
                for (std::size_t a = 0; a < k; ++a) v += x[idx[a]] * sf1.V[a][j];
                if (v % d1[j] != 0)
                    throw input_error("restrict_module: element outside the submodule");
                c[j] = v / d1[j];
            }
            std::vector<i64> out;
            for (std::size_t t = 0; t < keep.size(); ++t) {
                i64 v = 0;
                for (std::size_t j = 0; j < k; ++j) v += c[j] * sf2.V[j][keep[t]];
                out.push_back(mod_norm(v, orders[t]));
            }
            return out;
        }

        Coords lift(const FiniteGradedModule& M, std::size_t t) const {
            const std::size_t k = idx.size();
            Coords x = M.zero();
            for (std::size_t a = 0; a < k; ++a) {
                i64 v = 0;
                for (std::size_t j = 0; j < k; ++j)
                    v += sf2.Vinv[keep[t]][j] * d1[j] * sf1.Vinv[j][a];
                x[idx[a]] = mod_norm(v, M.basis(idx[a]).order);
            }
            return x;
        }
    };

    std::map<i64, CompRestrict> crs;
    std::vector<BasisVec> basis;
    std::map<i64, std::size_t> first_index;
    for (const auto& [g, part] : N.parts()) {
        CompRestrict cr;
        cr.idx = *M.component_indices(g);
        const std::size_t k = cr.idx.size();
        std::vector<std::vector<i64>> rows;
        for (const Coords& x : part) {
            std::vector<i64> row(k);
            for (std::size_t c = 0; c < k; ++c) row[c] = x[cr.idx[c]];
            rows.push_back(std::move(row));
        }
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<i64> row(k, 0);
            row[c] = M.basis(cr.idx[c]).order;
            rows.push_back(std::move(row));
        }
        cr.sf1 = smith_form(std::move(rows), k);
        cr.d1 = cr.sf1.diag;
        for (i64 d : cr.d1)
            if (d == 0) throw input_error("restrict_module: degenerate lattice");
        // relations of N_g in lattice-basis coordinates: n_c e_c rewritten
        std::vector<std::vector<i64>> rel(k, std::vector<i64>(k, 0));
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t j = 0; j < k; ++j) {
                const i64 v = M.basis(cr.idx[c]).order * cr.sf1.V[c][j];
                if (v % cr.d1[j] != 0)
                    throw input_error("restrict_module: relation outside the lattice");
                rel[c][j] = v / cr.d1[j];
            }
        cr.sf2 = smith_form(std::move(rel), k);
        for (std::size_t t = 0; t < k; ++t) {
            if (cr.sf2.diag[t] == 0)
                throw input_error("restrict_module: relation lattice not of full rank");
            if (cr.sf2.diag[t] >= 2) {
                cr.keep.push_back(t);
                cr.orders.push_back(cr.sf2.diag[t]);
            }
        }
        first_index[g] = basis.size();
        for (std::size_t t = 0; t < cr.orders.size(); ++t)
            basis.push_back({"s" + M.group().label(g) + "_" + std::to_string(t), cr.orders[t], g});
        crs.emplace(g, std::move(cr));
    }
    std::vector<std::vector<Coords>> act(R.dim(), std::vector<Coords>(basis.size()));
    for (std::size_t i = 0; i < R.dim(); ++i) {
        std::size_t col = 0;
        for (const auto& [g, cr] : crs) {
            for (std::size_t t = 0; t < cr.orders.size(); ++t, ++col) {
                const Coords y = M.act(R.basis_elem(i), cr.lift(M, t));
                const i64 h = M.group().op(R.basis(i).degree, g);
                Coords out(basis.size(), 0);
                auto it = crs.find(h);
                if (it != crs.end()) {
                    const std::vector<i64> yq = it->second.project(y);
                    for (std::size_t t2 = 0; t2 < yq.size(); ++t2)
                        out[first_index.at(h) + t2] = yq[t2];
                } else if (!M.is_zero(y)) {
                    throw input_error("restrict_module: action leaves the submodule");
                }
                act[i][col] = std::move(out);
            }
        }
    }
    std::vector<Coords> incl;
    for (const auto& [g, cr] : crs)
        for (std::size_t t = 0; t < cr.orders.size(); ++t) incl.push_back(cr.lift(M, t));
    FiniteGradedModule S(name, R, std::move(basis), std::move(act));
    GradedModuleHom in(S, M, std::move(incl));
    return {std::move(S), std::move(in)};
}

inline FiniteGradedModule restrict_module(const FiniteGradedModule& M, const GradedSubgroup& N,
                                          const std::string& name) {
    return restrict_with_inclusion(M, N, name).module;
}

}  // namespace graded
