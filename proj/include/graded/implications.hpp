#pragma once

// Executable statement catalog. Each entry encodes one implication between
// structural properties of graded rings or graded modules and is evaluated
// instance by instance over a seeded pool: theorem entries must never see a
// counterexample, non-implication entries must see at least one, and note
// entries record why a statement cannot be probed on finite carriers.
// Per-instance predicate results are memoized in a profile so that each
// report is computed at most once per instance.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graded/fixtures.hpp"
#include "graded/generator.hpp"
#include "graded/io.hpp"
#include "graded/module_predicates.hpp"
#include "graded/ring_predicates.hpp"

namespace graded {

enum class Expected { theorem, non_implication, vacuous_note };

inline const char* to_string(Expected e) {
    switch (e) {
        case Expected::theorem: return "theorem";
        case Expected::non_implication: return "non_implication";
        case Expected::vacuous_note: return "vacuous_note";
    }
    return "?";
}

// Outcome of one entry on one instance. applicable: the hypothesis held and
// the conclusion was evaluated. counterexample: the conclusion failed.
// aborted: some required value was undecided within the caps.
struct ImplicationResult {
    bool applicable = false;
    bool counterexample = false;
    bool aborted = false;
    std::string note;
    Json witness = Json::object();
};

namespace detail {

// scan budgets; instances beyond a gate abort the affected entries instead
// of silently skewing the suite runtime
constexpr u64 flat_scan_gate = 400;        // ring size for principal ideal surveys
constexpr u64 unit_scan_gate = 1000;       // homogeneous elements for unit sweeps
constexpr u64 pair_work_gate = 2000000;    // elementwise pair scans per instance
constexpr u64 module_lattice_gate = 2000;  // module size for full lattice work
constexpr u64 endo_sweep_gate = 4096;      // module size for plain-hom sweeps
constexpr std::size_t restriction_scan_cap = 24;  // restrictions per heredity scan

inline ImplicationResult na_result() { return {}; }

inline ImplicationResult aborted_result(std::string why) {
    ImplicationResult r;
    r.aborted = true;
    r.note = std::move(why);
    return r;
}

inline ImplicationResult ok_result(std::string note = "") {
    ImplicationResult r;
    r.applicable = true;
    r.note = std::move(note);
    return r;
}

inline ImplicationResult bad_result(Json witness, std::string note = "") {
    ImplicationResult r;
    r.applicable = true;
    r.counterexample = true;
    r.witness = std::move(witness);
    r.note = std::move(note);
    return r;
}

inline std::optional<bool> verdict_opt(const PropertyReport& r) {
    if (r.verdict == Verdict::holds) return true;
    if (r.verdict == Verdict::fails) return false;
    return std::nullopt;
}

inline std::optional<bool> opt_and(std::optional<bool> a, std::optional<bool> b) {
    if (a && !*a) return false;
    if (b && !*b) return false;
    if (!a || !b) return std::nullopt;
    return true;
}

inline std::optional<bool> opt_iff(std::optional<bool> a, std::optional<bool> b) {
    if (!a || !b) return std::nullopt;
    return *a == *b;
}

inline std::optional<bool> opt_not(std::optional<bool> a) {
    if (!a) return std::nullopt;
    return !*a;
}

// hypothesis chain with short-circuit: the first false term settles the
// instance as not applicable, the first undecided term as aborted
class TriState {
public:
    template <typename F>
    TriState& need(F&& get, const char* what) {
        if (state_ != State::yes) return *this;
        const std::optional<bool> v = get();
        if (!v) {
            state_ = State::undecided;
            why_ = std::string(what) + " undecided at the caps";
        } else if (!*v) {
            state_ = State::no;
        }
        return *this;
    }
    bool yes() const { return state_ == State::yes; }
    bool undecided() const { return state_ == State::undecided; }
    const std::string& why() const { return why_; }

private:
    enum class State { yes, no, undecided };
    State state_ = State::yes;
    std::string why_;
};

inline std::optional<ImplicationResult> gate_result(const TriState& t) {
    if (t.undecided()) return aborted_result(t.why());
    if (!t.yes()) return na_result();
    return std::nullopt;
}

inline ImplicationResult conclude(std::optional<bool> con, const std::function<Json()>& witness) {
    if (!con) return aborted_result("conclusion undecided at the caps");
    if (*con) return ok_result();
    return bad_result(witness());
}

inline std::vector<Coords> sorted_set(std::vector<Coords> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace detail

// Survey of every principal non-graded two-sided ideal of a small ring:
// records the first ideal that meets some component but not the identity
// component, and the first nonzero proper ideal.
struct PrincipalIdealSurvey {
    bool computed = false;
    std::string note;
    std::optional<Json> meet_violation;
    std::optional<Json> proper_ideal;
};

// Power-iteration unit sweep over all homogeneous elements: counts units,
// records a unit whose inverse fails to be homogeneous of the inverse degree
// and a sample nonzero homogeneous non-unit.
struct HomogeneousUnitScan {
    bool computed = false;
    std::string note;
    u64 units = 0;
    u64 non_units = 0;
    std::optional<Json> bad_inverse;
    std::optional<Json> sample_non_unit;
};

namespace detail {

inline PrincipalIdealSurvey principal_ideal_survey(const FiniteGradedRing& R, const Limits& lim) {
    PrincipalIdealSurvey s;
    if (R.ring_size() > flat_scan_gate) {
        s.note = "ring size above the principal ideal scan gate";
        return s;
    }
    const i64 e = R.group().id();
    for (const Coords& x : R.all_elements(lim.element_cap)) {
        if (R.is_zero(x)) continue;
        const std::vector<Coords> I = flat_ideal_closure(R, {x}, SubRole::two_sided_ideal, lim);
        if (!s.proper_ideal && I.size() < R.ring_size())
            s.proper_ideal = Json{{"generator", R.coords_str(x)},
                                  {"ideal_size", I.size()},
                                  {"ring_size", R.ring_size()}};
        if (!s.meet_violation) {
            bool meets_identity = false;
            std::optional<std::pair<i64, Coords>> other;
            for (const Coords& y : I) {
                if (R.is_zero(y)) continue;
                i64 d = 0;
                if (!R.is_homogeneous(y, &d)) continue;
                if (d == e) {
                    meets_identity = true;
                    break;
                }
                if (!other) other = std::make_pair(d, y);
            }
            if (!meets_identity && other)
                s.meet_violation = Json{{"generator", R.coords_str(x)},
                                        {"met_degree", R.group().label(other->first)},
                                        {"met_element", R.coords_str(other->second)}};
        }
        if (s.proper_ideal && s.meet_violation) break;
    }
    s.computed = true;
    return s;
}

inline HomogeneousUnitScan homogeneous_unit_scan(const FiniteGradedRing& R, const Limits& lim) {
    HomogeneousUnitScan s;
    u64 hom_count = 0;
    for (i64 g : R.support()) hom_count += R.component_size(g);
    if (hom_count > unit_scan_gate) {
        s.note = "homogeneous element count above the unit scan gate";
        return s;
    }
    const Group& G = R.group();
    for (i64 g : R.support())
        for (const Coords& a : R.component_elements(g, lim)) {
            if (R.is_zero(a)) continue;
            const std::optional<Coords> inv = power_inverse(R, a, lim.element_cap);
            if (!inv) {
                s.non_units += 1;
                if (!s.sample_non_unit)
                    s.sample_non_unit =
                        Json{{"degree", G.label(g)}, {"element", R.coords_str(a)}};
                continue;
            }
            s.units += 1;
            i64 d = 0;
            const bool good =
                R.is_homogeneous(*inv, &d) && !R.is_zero(*inv) && d == G.inv(g);
            if (!good && !s.bad_inverse)
                s.bad_inverse = Json{{"degree", G.label(g)},
                                     {"element", R.coords_str(a)},
                                     {"inverse", R.coords_str(*inv)}};
        }
    s.computed = true;
    return s;
}

}  // namespace detail

// Memoized predicate reports over one ring instance (structure-constant or
// monomial backend). Getters return nullopt when the value is undecided at
// the caps or gated out by a scan budget.
class LazyRingProfile {
public:
    LazyRingProfile(const RingInstance& inst, const Limits& lim)
        : fin_(inst.finite ? &*inst.finite : nullptr),
          mono_(inst.monomial ? &*inst.monomial : nullptr),
          lim_(lim) {}
    LazyRingProfile(const FiniteGradedRing& R, const Limits& lim)
        : fin_(&R), mono_(nullptr), lim_(lim) {}

    bool finite() const { return fin_ != nullptr; }
    const FiniteGradedRing& fin() const { return *fin_; }
    const MonomialGradedRing& mono() const { return *mono_; }
    const Limits& limits() const { return lim_; }

    const PropertyReport& weak_report() {
        return memo(weak_, [&] { return fin_ ? is_weak(*fin_) : is_weak(*mono_); });
    }
    const PropertyReport& support_rep() {
        return memo(support_,
                    [&] { return fin_ ? support_report(*fin_) : support_report(*mono_); });
    }
    const PropertyReport& degeneracy_rep() {
        return memo(degen_, [&] {
            return fin_ ? degeneracy_class(*fin_, lim_) : degeneracy_class(*mono_);
        });
    }
    const PropertyReport& regular_rep() {
        return memo(regular_,
                    [&] { return fin_ ? is_regular(*fin_, lim_) : is_regular(*mono_); });
    }
    const PropertyReport& strongness_rep() {
        return memo(strong_, [&] {
            return fin_ ? strongness_class(*fin_, lim_) : strongness_class(*mono_);
        });
    }
    const PropertyReport& crossed_rep() {
        return memo(crossed_,
                    [&] { return fin_ ? crossed_class(*fin_, lim_) : crossed_class(*mono_); });
    }
    const PropertyReport& invertible_rep() {
        return memo(invert_, [&] {
            return fin_ ? is_invertible_graded(*fin_, lim_) : is_invertible_graded(*mono_);
        });
    }
    const PropertyReport& zero_divisor_rep() {
        return memo(zd_, [&] {
            return fin_ ? zero_divisor_search(*fin_, lim_) : zero_divisor_search(*mono_);
        });
    }
    const PropertyReport& graded_simple_rep() {
        return memo(simple_, [&] {
            return fin_ ? is_graded_simple(*fin_, lim_) : is_graded_simple(*mono_);
        });
    }
    const PropertyReport& linear_rep() {
        return memo(linear_, [&] {
            return fin_ ? identity_component_linear_report(*fin_, lim_)
                        : identity_component_linear_report(*mono_);
        });
    }

    std::optional<bool> is_finite_backend() { return fin_ != nullptr; }
    std::optional<bool> is_monomial_backend() { return mono_ != nullptr; }

    std::optional<bool> weak() { return detail::verdict_opt(weak_report()); }
    std::optional<bool> support_subgroup() {
        const PropertyReport& r = support_rep();
        if (r.verdict == Verdict::aborted_cap) return std::nullopt;
        return r.classification == "subgroup";
    }
    std::optional<bool> nondegenerate() { return detail::verdict_opt(degeneracy_rep()); }
    std::optional<bool> faithful() { return classified(degeneracy_rep(), {"faithful"}); }
    std::optional<bool> regular() {
        if (fin_ && square_pair_work() > detail::pair_work_gate) return std::nullopt;
        return detail::verdict_opt(regular_rep());
    }
    std::optional<bool> strong() { return classified(strongness_rep(), {"strong"}); }
    std::optional<bool> first_strong() {
        return classified(strongness_rep(), {"strong", "first_strong"});
    }
    std::optional<bool> second_strong() { return detail::verdict_opt(strongness_rep()); }
    std::optional<bool> crossed() {
        if (fin_ && inverse_pair_work() > detail::pair_work_gate) return std::nullopt;
        return classified(crossed_rep(), {"crossed"});
    }
    std::optional<bool> weakly_crossed() {
        if (fin_ && inverse_pair_work() > detail::pair_work_gate) return std::nullopt;
        return classified(crossed_rep(), {"crossed", "weakly_crossed"});
    }
    std::optional<bool> invertible() {
        if (fin_) {
            const u64 ce = fin_->component_size(fin_->group().id());
            if (FiniteGradedRing::sat_mul(ce, ce) > detail::pair_work_gate)
                return std::nullopt;
        }
        return detail::verdict_opt(invertible_rep());
    }
    std::optional<bool> domain() {
        if (fin_ && fin_->dim() == 0) return false;
        const std::optional<bool> zd = detail::verdict_opt(zero_divisor_rep());
        if (!zd) return std::nullopt;
        return !*zd;
    }
    std::optional<bool> graded_simple() { return detail::verdict_opt(graded_simple_rep()); }

    std::optional<bool> commutative() {
        if (!comm_) {
            if (!fin_) {
                comm_ = true;  // one-variable polynomial rings over Z_q commute
            } else {
                bool ok = true;
                for (std::size_t i = 0; i < fin_->dim() && ok; ++i)
                    for (std::size_t j = 0; j < i && ok; ++j)
                        ok = fin_->basis_product(i, j) == fin_->basis_product(j, i);
                comm_ = ok;
            }
        }
        return *comm_;
    }

    std::optional<bool> group_abelian() {
        if (!gab_) {
            const Group& G = fin_ ? fin_->group() : mono_->group();
            if (G.is_integers()) {
                gab_ = true;
            } else {
                bool ok = true;
                const std::vector<i64> els = G.elements();
                for (std::size_t i = 0; i < els.size() && ok; ++i)
                    for (std::size_t j = 0; j < i && ok; ++j)
                        ok = G.op(els[i], els[j]) == G.op(els[j], els[i]);
                gab_ = ok;
            }
        }
        return *gab_;
    }

    std::optional<bool> support_commutes() {
        const Group& G = fin_ ? fin_->group() : mono_->group();
        if (G.is_integers()) return true;
        const std::vector<i64> s = support_degrees();
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (G.op(s[i], s[j]) != G.op(s[j], s[i])) return false;
        return true;
    }

    // support equals the whole (finite) grading group
    std::optional<bool> full_support() {
        const Group& G = fin_ ? fin_->group() : mono_->group();
        if (!G.is_finite()) return false;
        return static_cast<i64>(support_degrees().size()) == G.order();
    }

    // finite backend: the exact support; monomial backend: the support window
    // (the full support for a finite grading group)
    std::vector<i64> support_degrees() {
        if (fin_) return fin_->support();
        return detail::monomial_support_window(*mono_, 0);
    }

    const PrincipalIdealSurvey& ideal_survey() {
        if (!survey_) survey_ = detail::principal_ideal_survey(*fin_, lim_);
        return *survey_;
    }
    const HomogeneousUnitScan& unit_scan() {
        if (!uscan_) uscan_ = detail::homogeneous_unit_scan(*fin_, lim_);
        return *uscan_;
    }

private:
    template <typename F>
    const PropertyReport& memo(std::optional<PropertyReport>& slot, F&& make) {
        if (!slot) slot = make();
        return *slot;
    }
    static std::optional<bool> classified(const PropertyReport& r,
                                          std::initializer_list<const char*> labels) {
        if (!r.decided()) return std::nullopt;
        for (const char* l : labels)
            if (r.classification == l) return true;
        return false;
    }
    u64 inverse_pair_work() {
        u64 t = 0;
        for (i64 g : fin_->support())
            t += FiniteGradedRing::sat_mul(fin_->component_size(g),
                                           fin_->component_size(fin_->group().inv(g)));
        return t;
    }
    u64 square_pair_work() {
        u64 t = 0;
        for (i64 g : fin_->support())
            t += FiniteGradedRing::sat_mul(fin_->component_size(g), fin_->component_size(g));
        return t;
    }

    const FiniteGradedRing* fin_;
    const MonomialGradedRing* mono_;
    Limits lim_;
    std::optional<PropertyReport> weak_, support_, degen_, regular_, strong_, crossed_,
        invert_, zd_, simple_, linear_;
    std::optional<bool> comm_, gab_;
    std::optional<PrincipalIdealSurvey> survey_;
    std::optional<HomogeneousUnitScan> uscan_;
};

namespace detail {

inline const PropertyReport& profile_report(LazyRingProfile& p, const std::string& name) {
    if (name == "weak") return p.weak_report();
    if (name == "support") return p.support_rep();
    if (name == "degeneracy") return p.degeneracy_rep();
    if (name == "regular") return p.regular_rep();
    if (name == "strongness") return p.strongness_rep();
    if (name == "crossed") return p.crossed_rep();
    if (name == "invertible") return p.invertible_rep();
    if (name == "zero_divisors") return p.zero_divisor_rep();
    if (name == "graded_simple") return p.graded_simple_rep();
    if (name == "linear") return p.linear_rep();
    throw std::logic_error("unknown report " + name);
}

inline Json profile_reports(LazyRingProfile& p, const std::vector<std::string>& names) {
    Json j = Json::object();
    for (const std::string& n : names) j[n] = profile_report(p, n).to_json();
    return j;
}

}  // namespace detail

// Memoized predicate data over one module instance, including the submodule
// lattice with its primality, essentiality and semi-essentiality marks, the
// graded ideal lattice of the base ring, transfer-check rows over a fixed
// probe family, and an endomorphism probe pair for rings as modules.
class LazyModuleProfile {
public:
    LazyModuleProfile(const FiniteGradedModule& M, const Limits& lim)
        : M_(&M), lim_(lim), ring_prof_(M.ring(), lim) {}

    const FiniteGradedModule& mod() const { return *M_; }
    LazyRingProfile& ring_prof() { return ring_prof_; }
    const Limits& limits() const { return lim_; }
    bool gated() const { return M_->module_size() > detail::module_lattice_gate; }

    struct LatticeData {
        bool ok = false;
        std::string note;
        std::vector<GradedSubgroup> lattice;
        std::vector<GradedSubgroup> primes;
        std::vector<char> semi;  // per lattice index; zero submodules stay 0
        std::vector<char> ess;
        std::map<std::map<i64, std::vector<Coords>>, std::size_t> index;
    };

    const LatticeData& lat() {
        if (lat_) return *lat_;
        lat_.emplace();
        LatticeData& L = *lat_;
        if (gated()) {
            L.note = "module size above the lattice gate";
            return L;
        }
        try {
            L.lattice = enumerate_graded_submodules(*M_, lim_);
            L.primes = enumerate_graded_prime_submodules(*M_, L.lattice, lim_);
            L.semi.assign(L.lattice.size(), 0);
            L.ess.assign(L.lattice.size(), 0);
            for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                L.index.emplace(L.lattice[i].parts(), i);
                if (L.lattice[i].is_zero()) continue;
                const PropertyReport er = is_graded_essential(*M_, L.lattice[i], lim_);
                if (!er.decided()) throw cap_reached("essential mark undecided: " + er.note);
                const PropertyReport sr =
                    is_graded_semi_essential(*M_, L.lattice[i], L.primes, lim_);
                if (!sr.decided())
                    throw cap_reached("semi-essential mark undecided: " + sr.note);
                L.ess[i] = er.holds() ? 1 : 0;
                L.semi[i] = sr.holds() ? 1 : 0;
            }
            L.ok = true;
        } catch (const cap_reached& e) {
            const std::string why = e.what();
            L = LatticeData{};
            L.note = why;
        }
        return L;
    }

    const PropertyReport& uniform_rep() {
        return memo(uni_, [&] { return is_graded_uniform(*M_, lim_); });
    }
    const PropertyReport& semi_uniform_rep() {
        return memo(semiu_, [&] { return is_graded_semi_uniform(*M_, lim_); });
    }
    const PropertyReport& multiplication_rep() {
        return memo(mult_, [&] { return is_multiplication_module(*M_, lim_); });
    }
    const PropertyReport& faithful_rep() {
        return memo(faith_, [&] { return is_faithful_module(*M_, lim_); });
    }
    std::optional<bool> uniform() {
        if (gated()) return std::nullopt;
        return detail::verdict_opt(uniform_rep());
    }
    std::optional<bool> semi_uniform() {
        if (gated()) return std::nullopt;
        return detail::verdict_opt(semi_uniform_rep());
    }
    std::optional<bool> multiplication() {
        if (gated()) return std::nullopt;
        return detail::verdict_opt(multiplication_rep());
    }
    std::optional<bool> faithful_module() {
        if (gated()) return std::nullopt;
        return detail::verdict_opt(faithful_rep());
    }

    const GradedSubgroup& ann() {
        if (!ann_) ann_ = annihilator(*M_, lim_);
        return *ann_;
    }

    struct RingIdealData {
        bool ok = false;
        std::string note;
        std::vector<GradedSubgroup> ideals;
        std::vector<GradedSubgroup> primes;
    };
    const RingIdealData& ring_ideals() {
        if (rid_) return *rid_;
        rid_.emplace();
        const FiniteGradedRing& R = M_->ring();
        if (R.ring_size() > detail::module_lattice_gate) {
            rid_->note = "ring size above the lattice gate";
            return *rid_;
        }
        try {
            rid_->ideals = enumerate_graded_ideals(R, lim_);
            rid_->primes = enumerate_graded_prime_ideals(R, rid_->ideals, lim_);
            rid_->ok = true;
        } catch (const cap_reached& e) {
            rid_->note = e.what();
        }
        return *rid_;
    }
    const PropertyReport& ring_semi_uniform_rep() {
        return memo(rsemi_, [&] { return is_semi_uniform_ring(M_->ring(), lim_); });
    }
    std::optional<bool> ring_semi_uniform() {
        if (M_->ring().ring_size() > detail::module_lattice_gate) return std::nullopt;
        return detail::verdict_opt(ring_semi_uniform_rep());
    }

    // every homogeneous m outside N has (N : m) = Ann(M); the colon of a
    // graded submodule at a homogeneous element is graded, so homogeneous
    // agreement decides equality
    bool colon_condition(const GradedSubgroup& N) {
        const auto it = colon_cache_.find(N.parts());
        if (it != colon_cache_.end()) return it->second;
        const FiniteGradedRing& R = M_->ring();
        const GradedSubgroup& A = ann();
        const Coords mzero = M_->zero();
        const Coords rzero = R.zero();
        bool ok = true;
        for (i64 g : M_->support()) {
            if (!ok) break;
            for (const Coords& m : M_->component_elements(g, lim_)) {
                if (!ok) break;
                if (N.contains(g, m, mzero)) continue;
                for (i64 h : R.support()) {
                    if (!ok) break;
                    for (const Coords& r : R.component_elements(h, lim_)) {
                        const bool in_colon =
                            N.contains(R.group().op(h, g), M_->act(r, m), mzero);
                        if (in_colon != A.contains(h, r, rzero)) {
                            ok = false;
                            break;
                        }
                    }
                }
            }
        }
        colon_cache_.emplace(N.parts(), ok);
        return ok;
    }

    // transfer-check rows over the identity and up to two projections onto
    // quotients by nonzero primes, for the largest proper nonzero
    // semi-essential submodule (the whole module as fallback)
    const std::vector<Json>& transfer_rows() {
        if (rows_) return *rows_;
        rows_.emplace();
        const LatticeData& L = lat();
        if (!L.ok) return *rows_;
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < L.lattice.size(); ++i) {
            if (L.lattice[i].is_zero() || !L.semi[i]) continue;
            if (subgroup_is_whole_carrier(*M_, L.lattice[i])) {
                if (!pick) pick = i;
                continue;
            }
            pick = i;
            break;
        }
        if (!pick) return *rows_;
        const GradedSubgroup& K = L.lattice[*pick];

        std::vector<std::pair<std::string, GradedModuleHom>> probes;
        std::vector<Coords> id_images;
        for (std::size_t j = 0; j < M_->dim(); ++j) id_images.push_back(M_->basis_elem(j));
        probes.emplace_back("identity",
                            GradedModuleHom(*M_, *M_, std::move(id_images), HomKind::graded));
        int projections = 0;
        for (const GradedSubgroup& T : L.primes) {
            if (T.is_zero() || projections >= 2) continue;
            ModuleWithHom q = quotient_with_projection(*M_, T, M_->name() + "_qt");
            probes.emplace_back("projection", std::move(q.hom));
            ++projections;
        }
        for (const auto& [label, hom] : probes) {
            PropertyReport tr = make_report("transfer");
            try {
                tr = semi_essential_transfer_checks(hom, K, lim_);
            } catch (const cap_reached&) {
                continue;
            }
            if (!tr.decided()) continue;
            for (const Json& row : tr.witness) {
                Json r = row;
                r["probe"] = label;
                rows_->push_back(std::move(r));
            }
        }
        return *rows_;
    }

    // endomorphism probes of the ring as a module over itself: the identity
    // and one right multiplication by a homogeneous unit of non-identity
    // degree (additive and linear but not graded)
    struct ProbeData {
        bool ok = false;
        std::string note;
        std::vector<std::pair<std::string, GradedModuleHom>> homs;
    };
    const ProbeData& endo_probes() {
        if (probes_) return *probes_;
        probes_.emplace();
        ProbeData& P = *probes_;
        if (!detail::is_ring_as_module(*M_)) {
            P.note = "not the ring as a module over itself";
            return P;
        }
        if (M_->module_size() > detail::endo_sweep_gate) {
            P.note = "module size above the endomorphism sweep gate";
            return P;
        }
        const FiniteGradedRing& R = M_->ring();
        std::vector<Coords> id_images;
        for (std::size_t j = 0; j < M_->dim(); ++j) id_images.push_back(M_->basis_elem(j));
        P.homs.emplace_back("identity",
                            GradedModuleHom(*M_, *M_, std::move(id_images), HomKind::graded));
        for (i64 g : R.support()) {
            if (g == R.group().id()) continue;
            const auto uv = homogeneous_unit_search(R, g, lim_);
            if (!uv) continue;
            std::vector<Coords> im;
            for (std::size_t j = 0; j < M_->dim(); ++j)
                im.push_back(R.mul(R.basis_elem(j), uv->first));
            P.homs.emplace_back("right multiplication by a unit of degree " +
                                    R.group().label(g),
                                GradedModuleHom(*M_, *M_, std::move(im), HomKind::plain));
            break;
        }
        P.ok = true;
        return P;
    }

private:
    template <typename F>
    const PropertyReport& memo(std::optional<PropertyReport>& slot, F&& make) {
        if (!slot) slot = make();
        return *slot;
    }

    const FiniteGradedModule* M_;
    Limits lim_;
    LazyRingProfile ring_prof_;
    std::optional<LatticeData> lat_;
    std::optional<PropertyReport> uni_, semiu_, mult_, faith_, rsemi_;
    std::optional<GradedSubgroup> ann_;
    std::optional<RingIdealData> rid_;
    std::map<std::map<i64, std::vector<Coords>>, bool> colon_cache_;
    std::optional<std::vector<Json>> rows_;
    std::optional<ProbeData> probes_;
};

struct RingCtx {
    const RingInstance& inst;
    LazyRingProfile& prof;
    const Limits& lim;
};

struct ModuleCtx {
    const ModuleInstance& inst;
    LazyModuleProfile& prof;
    const Limits& lim;
};

struct Implication {
    std::string id;
    std::string statement;
    Expected expected = Expected::theorem;
    std::function<ImplicationResult(RingCtx&)> ring_eval;
    std::function<ImplicationResult(ModuleCtx&)> module_eval;
    std::string note;
};

namespace detail {

using ProfGet = std::optional<bool> (LazyRingProfile::*)();

// hypothesis conjunction then conclusion conjunction over profile getters,
// with lazy short-circuit in hypothesis order
inline std::function<ImplicationResult(RingCtx&)> profile_rule(
    std::vector<ProfGet> hyp, std::vector<ProfGet> con, std::vector<std::string> reports) {
    return [hyp = std::move(hyp), con = std::move(con),
            reports = std::move(reports)](RingCtx& c) {
        TriState h;
        for (ProfGet m : hyp) h.need([&] { return (c.prof.*m)(); }, "a hypothesis term");
        if (auto r = gate_result(h)) return *r;
        std::optional<bool> acc = true;
        for (ProfGet m : con) {
            acc = opt_and(acc, (c.prof.*m)());
            if (acc && !*acc) break;
        }
        return conclude(acc, [&] { return profile_reports(c.prof, reports); });
    };
}

// hypothesis then an equivalence between one getter and a conjunction
inline std::function<ImplicationResult(RingCtx&)> profile_iff_rule(
    std::vector<ProfGet> hyp, ProfGet lhs, std::vector<ProfGet> rhs,
    std::vector<std::string> reports) {
    return [hyp = std::move(hyp), lhs, rhs = std::move(rhs),
            reports = std::move(reports)](RingCtx& c) {
        TriState h;
        for (ProfGet m : hyp) h.need([&] { return (c.prof.*m)(); }, "a hypothesis term");
        if (auto r = gate_result(h)) return *r;
        std::optional<bool> right = true;
        for (ProfGet m : rhs) right = opt_and(right, (c.prof.*m)());
        const std::optional<bool> con = opt_iff((c.prof.*lhs)(), right);
        return conclude(con, [&] { return profile_reports(c.prof, reports); });
    };
}

inline std::vector<Coords> hom_component_image(const GradedModuleHom& f, i64 g,
                                               const Limits& lim) {
    std::vector<Coords> out;
    for (const Coords& x : f.dom().component_elements(g, lim)) out.push_back(f.apply(x));
    return sorted_set(std::move(out));
}

// aggregate transfer rows of one statement name: applicable when some row has
// the hypothesis, counterexample when such a row is not respected
inline std::function<ImplicationResult(ModuleCtx&)> transfer_row_rule(std::string statement) {
    return [statement = std::move(statement)](ModuleCtx& c) {
        const auto& L = c.prof.lat();
        if (!L.ok) return aborted_result(L.note);
        ImplicationResult res;
        for (const Json& row : c.prof.transfer_rows()) {
            if (row.at("statement").get<std::string>() != statement) continue;
            if (!row.at("applicable").get<bool>() || !row.at("hypothesis").get<bool>())
                continue;
            res.applicable = true;
            if (!row.at("respected").get<bool>()) {
                res.counterexample = true;
                res.witness = row;
                return res;
            }
        }
        return res;
    };
}

}  // namespace detail

inline const std::vector<Implication>& implication_catalog() {
    static const std::vector<Implication> catalog = [] {
        std::vector<Implication> v;
        auto ring_entry = [&](std::string id, std::string statement, Expected ex,
                              std::function<ImplicationResult(RingCtx&)> fn) {
            Implication im;
            im.id = std::move(id);
            im.statement = std::move(statement);
            im.expected = ex;
            im.ring_eval = std::move(fn);
            v.push_back(std::move(im));
        };
        auto module_entry = [&](std::string id, std::string statement, Expected ex,
                                std::function<ImplicationResult(ModuleCtx&)> fn) {
            Implication im;
            im.id = std::move(id);
            im.statement = std::move(statement);
            im.expected = ex;
            im.module_eval = std::move(fn);
            v.push_back(std::move(im));
        };
        auto note_entry = [&](std::string id, std::string statement, std::string note) {
            Implication im;
            im.id = std::move(id);
            im.statement = std::move(statement);
            im.expected = Expected::vacuous_note;
            im.note = std::move(note);
            v.push_back(std::move(im));
        };
        using P = LazyRingProfile;
        const Expected TH = Expected::theorem;
        const Expected NI = Expected::non_implication;

        // ------------------------------------------------------------------
        // ring statements: degeneracy, support, strongness

        ring_entry("nondegenerate_implies_weak", "a nondegenerate graded ring is weak", TH,
                   detail::profile_rule({&P::nondegenerate}, {&P::weak},
                                        {"degeneracy", "weak"}));
        ring_entry("faithful_implies_weak", "a faithful graded ring is weak", TH,
                   detail::profile_rule({&P::faithful}, {&P::weak}, {"degeneracy", "weak"}));
        ring_entry("faithful_implies_nondegenerate",
                   "a faithful graded ring is nondegenerate", TH,
                   detail::profile_rule({&P::faithful}, {&P::nondegenerate}, {"degeneracy"}));
        ring_entry("faithful_implies_full_support",
                   "a faithful grading over a finite group has full support", TH,
                   detail::profile_rule({&P::faithful}, {&P::full_support},
                                        {"degeneracy", "support"}));
        ring_entry("regular_implies_nondegenerate", "a regular graded ring is nondegenerate",
                   TH,
                   detail::profile_rule({&P::regular}, {&P::nondegenerate},
                                        {"regular", "degeneracy"}));
        ring_entry("regular_implies_weak", "a regular graded ring is weak", TH,
                   detail::profile_rule({&P::regular}, {&P::weak}, {"regular", "weak"}));
        ring_entry("strong_implies_weak", "a strong grading is weak", TH,
                   detail::profile_rule({&P::strong}, {&P::weak}, {"strongness", "weak"}));
        ring_entry("strong_implies_faithful", "a strong grading is faithful", TH,
                   detail::profile_rule({&P::strong}, {&P::faithful},
                                        {"strongness", "degeneracy"}));
        ring_entry("strong_implies_first_strong", "a strong grading is first strong", TH,
                   detail::profile_rule({&P::strong}, {&P::first_strong}, {"strongness"}));
        ring_entry("first_strong_implies_weak", "a first strong grading is weak", TH,
                   detail::profile_rule({&P::first_strong}, {&P::weak},
                                        {"strongness", "weak"}));
        ring_entry("first_strong_implies_second_strong",
                   "a first strong grading is second strong", TH,
                   detail::profile_rule({&P::first_strong}, {&P::second_strong},
                                        {"strongness"}));
        ring_entry("first_strong_implies_support_subgroup",
                   "the support of a first strong grading is a subgroup", TH,
                   detail::profile_rule({&P::first_strong}, {&P::support_subgroup},
                                        {"strongness", "support"}));
        ring_entry("support_subgroup_implies_weak",
                   "a grading whose support is a subgroup is weak", TH,
                   detail::profile_rule({&P::support_subgroup}, {&P::weak},
                                        {"support", "weak"}));
        ring_entry("domain_weak_iff_support_subgroup",
                   "a graded domain is weak exactly when its support is a subgroup", TH,
                   detail::profile_iff_rule({&P::domain}, &P::weak, {&P::support_subgroup},
                                            {"zero_divisors", "weak", "support"}));
        ring_entry("no_zero_divisors_weak_iff_nondegenerate",
                   "a graded domain is weak exactly when it is nondegenerate", TH,
                   detail::profile_iff_rule({&P::domain}, &P::weak, {&P::nondegenerate},
                                            {"zero_divisors", "weak", "degeneracy"}));
        ring_entry("domain_commutative_weak_support_abelian",
                   "the support of a commutative weak graded domain is an abelian subgroup",
                   TH,
                   detail::profile_rule({&P::commutative, &P::weak, &P::domain},
                                        {&P::support_subgroup, &P::support_commutes},
                                        {"weak", "zero_divisors", "support"}));
        ring_entry("domain_commutative_faithful_group_abelian",
                   "a commutative faithful graded domain forces an abelian grading group",
                   TH,
                   detail::profile_rule({&P::commutative, &P::faithful, &P::domain},
                                        {&P::group_abelian},
                                        {"degeneracy", "zero_divisors"}));
        ring_entry("second_strong_weak_implies_first_strong",
                   "a weak second strong grading is first strong", TH,
                   detail::profile_rule({&P::second_strong, &P::weak}, {&P::first_strong},
                                        {"strongness", "weak"}));
        ring_entry("second_strong_weak_iff_support_subgroup",
                   "a second strong grading is weak exactly when its support is a subgroup",
                   TH,
                   detail::profile_iff_rule({&P::second_strong}, &P::weak,
                                            {&P::support_subgroup},
                                            {"strongness", "weak", "support"}));
        ring_entry("first_strong_iff_second_strong_nondegenerate",
                   "first strong is equivalent to second strong plus nondegenerate", TH,
                   detail::profile_iff_rule({}, &P::first_strong,
                                            {&P::second_strong, &P::nondegenerate},
                                            {"strongness", "degeneracy"}));
        ring_entry("strong_iff_second_strong_faithful",
                   "strong is equivalent to second strong plus faithful", TH,
                   detail::profile_iff_rule({}, &P::strong, {&P::second_strong, &P::faithful},
                                            {"strongness", "degeneracy"}));

        // ------------------------------------------------------------------
        // polynomial ring with scalar identity component

        ring_entry("polynomial_scalar_identity_not_weak",
                   "a polynomial ring graded by degree with scalar identity component is "
                   "not weak",
                   TH, [](RingCtx& c) {
                       detail::TriState h;
                       h.need([&] { return c.prof.is_monomial_backend(); }, "backend");
                       h.need([&] { return c.prof.invertible(); }, "invertible");
                       if (auto r = detail::gate_result(h)) return *r;
                       return detail::conclude(detail::opt_not(c.prof.weak()), [&] {
                           return detail::profile_reports(c.prof, {"invertible", "weak"});
                       });
                   });
        ring_entry("polynomial_scalar_identity_not_strong",
                   "a polynomial ring graded by degree with scalar identity component is "
                   "second strong but not first strong",
                   TH, [](RingCtx& c) {
                       detail::TriState h;
                       h.need([&] { return c.prof.is_monomial_backend(); }, "backend");
                       h.need([&] { return c.prof.invertible(); }, "invertible");
                       if (auto r = detail::gate_result(h)) return *r;
                       const std::optional<bool> con = detail::opt_and(
                           c.prof.second_strong(), detail::opt_not(c.prof.first_strong()));
                       return detail::conclude(con, [&] {
                           return detail::profile_reports(c.prof,
                                                          {"invertible", "strongness"});
                       });
                   });

        // ------------------------------------------------------------------
        // ideals of weak graded domains

        ring_entry("weak_domain_ideal_meet_identity",
                   "in a weak graded domain, an ideal meeting some component meets the "
                   "identity component",
                   TH, [](RingCtx& c) {
                       detail::TriState h;
                       h.need([&] { return c.prof.is_finite_backend(); }, "backend");
                       h.need([&] { return c.prof.weak(); }, "weak");
                       h.need([&] { return c.prof.domain(); }, "the zero divisor scan");
                       if (auto r = detail::gate_result(h)) return *r;
                       const PrincipalIdealSurvey& s = c.prof.ideal_survey();
                       if (!s.computed) return detail::aborted_result(s.note);
                       if (!s.meet_violation) return detail::ok_result();
                       return detail::bad_result(*s.meet_violation);
                   });
        ring_entry("weak_domain_division_identity_simple",
                   "a weak graded domain whose identity component is a division ring is "
                   "simple",
                   TH, [](RingCtx& c) {
                       detail::TriState h;
                       h.need([&] { return c.prof.is_finite_backend(); }, "backend");
                       h.need([&] { return c.prof.invertible(); }, "invertible");
                       h.need([&] { return c.prof.weak(); }, "weak");
                       h.need([&] { return c.prof.domain(); }, "the zero divisor scan");
                       if (auto r = detail::gate_result(h)) return *r;
                       const PrincipalIdealSurvey& s = c.prof.ideal_survey();
                       if (!s.computed) return detail::aborted_result(s.note);
                       if (!s.proper_ideal) return detail::ok_result();
                       return detail::bad_result(*s.proper_ideal);
                   });

        // ------------------------------------------------------------------
        // homogeneous units

        ring_entry(
            "unit_inverse_degree",
            "the inverse of a homogeneous unit is homogeneous of the inverse degree", TH,
            [](RingCtx& c) {
                if (!c.prof.finite()) {
                    const MonomialGradedRing& R = c.prof.mono();
                    for (i64 a = 1; a < R.q(); ++a) {
                        bool found = false;
                        for (i64 b = 1; b < R.q() && !found; ++b) found = a * b % R.q() == 1;
                        if (!found)
                            return detail::bad_result(
                                Json{{"constant_without_inverse", a}, {"modulus", R.q()}});
                    }
                    return detail::ok_result(
                        "units are the nonzero constants and invert in identity degree");
                }
                const HomogeneousUnitScan& s = c.prof.unit_scan();
                if (!s.computed) return detail::aborted_result(s.note);
                if (s.units == 0) return detail::na_result();
                if (!s.bad_inverse) return detail::ok_result();
                return detail::bad_result(*s.bad_inverse);
            });
        ring_entry("invertible_weak_domain_homogeneous_units",
                   "in a weak graded domain with division identity component every nonzero "
                   "homogeneous element is a unit",
                   TH, [](RingCtx& c) {
                       detail::TriState h;
                       h.need([&] { return c.prof.is_finite_backend(); }, "backend");
                       h.need([&] { return c.prof.invertible(); }, "invertible");
                       h.need([&] { return c.prof.weak(); }, "weak");
                       h.need([&] { return c.prof.domain(); }, "the zero divisor scan");
                       if (auto r = detail::gate_result(h)) return *r;
                       const HomogeneousUnitScan& s = c.prof.unit_scan();
                       if (!s.computed) return detail::aborted_result(s.note);
                       if (s.non_units == 0) return detail::ok_result();
                       return detail::bad_result(*s.sample_non_unit);
                   });

        // ------------------------------------------------------------------
        // division identity component

        auto invertible_weak_domain = [](RingCtx& c) -> std::optional<ImplicationResult> {
            detail::TriState h;
            h.need([&] { return c.prof.invertible(); }, "invertible");
            h.need([&] { return c.prof.weak(); }, "weak");
            h.need([&] { return c.prof.domain(); }, "the zero divisor scan");
            return detail::gate_result(h);
        };
        ring_entry("invertible_weak_domain_components_cyclic",
                   "in a weak graded domain with division identity component every support "
                   "component is cyclic over the identity component",
                   TH, [invertible_weak_domain](RingCtx& c) {
                       if (auto r = invertible_weak_domain(c)) return *r;
                       if (!c.prof.finite())
                           return detail::ok_result(
                               "the identity component is the scalar field and every "
                               "component is spanned by one monomial power");
                       for (i64 g : c.prof.fin().support()) {
                           const PropertyReport r =
                               component_as_Re_module_report(c.prof.fin(), g, c.lim);
                           if (!r.decided()) return detail::aborted_result(r.note);
                           if (!r.holds()) return detail::bad_result(r.to_json());
                       }
                       return detail::ok_result();
                   });
        ring_entry("invertible_weak_domain_components_simple",
                   "in a weak graded domain with division identity component every support "
                   "component is simple over the identity component",
                   TH, [invertible_weak_domain](RingCtx& c) {
                       if (auto r = invertible_weak_domain(c)) return *r;
                       if (!c.prof.finite())
                           return detail::ok_result(
                               "support components are one-dimensional over the scalar "
                               "field");
                       for (i64 g : c.prof.fin().support()) {
                           const PropertyReport r =
                               component_as_Re_module_report(c.prof.fin(), g, c.lim);
                           if (!r.decided()) return detail::aborted_result(r.note);
                           if (r.classification != "simple")
                               return detail::bad_result(r.to_json());
                       }
                       return detail::ok_result();
                   });
        ring_entry("invertible_weak_domain_first_strong",
                   "a weak graded domain with division identity component is first strong",
                   TH,
                   detail::profile_rule({&P::invertible, &P::weak, &P::domain},
                                        {&P::first_strong},
                                        {"invertible", "weak", "zero_divisors",
                                         "strongness"}));
        ring_entry("invertible_weak_domain_graded_simple",
                   "a weak graded domain with division identity component has no proper "
                   "nonzero graded ideal",
                   TH,
                   detail::profile_rule({&P::invertible, &P::weak, &P::domain},
                                        {&P::graded_simple},
                                        {"invertible", "weak", "zero_divisors",
                                         "graded_simple"}));
        ring_entry("invertible_weak_domain_weakly_crossed",
                   "a weak graded domain with division identity component is weakly "
                   "crossed",
                   TH,
                   detail::profile_rule({&P::invertible, &P::weak, &P::domain},
                                        {&P::weakly_crossed},
                                        {"invertible", "weak", "zero_divisors", "crossed"}));
        ring_entry("invertible_identity_component_linear",
                   "over a division identity component each component is a vector space "
                   "and the identity projection behaves linearly",
                   TH, [](RingCtx& c) {
                       detail::TriState h;
                       h.need([&] { return c.prof.invertible(); }, "invertible");
                       if (auto r = detail::gate_result(h)) return *r;
                       const PropertyReport& r = c.prof.linear_rep();
                       if (r.verdict == Verdict::aborted_cap)
                           return detail::aborted_result(r.note);
                       if (r.holds()) return detail::ok_result();
                       return detail::bad_result(r.to_json());
                   });

        // ------------------------------------------------------------------
        // weakly crossed gradings

        ring_entry("weakly_crossed_implies_weak", "a weakly crossed grading is weak", TH,
                   detail::profile_rule({&P::weakly_crossed}, {&P::weak},
                                        {"crossed", "weak"}));
        ring_entry("weakly_crossed_implies_first_strong",
                   "a weakly crossed grading is first strong", TH,
                   detail::profile_rule({&P::weakly_crossed}, {&P::first_strong},
                                        {"crossed", "strongness"}));
        ring_entry("weakly_crossed_implies_second_strong",
                   "a weakly crossed grading is second strong", TH,
                   detail::profile_rule({&P::weakly_crossed}, {&P::second_strong},
                                        {"crossed", "strongness"}));
        ring_entry("weakly_crossed_implies_nondegenerate",
                   "a weakly crossed grading is nondegenerate", TH,
                   detail::profile_rule({&P::weakly_crossed}, {&P::nondegenerate},
                                        {"crossed", "degeneracy"}));
        ring_entry("weakly_crossed_support_subgroup",
                   "the support of a weakly crossed grading is a subgroup", TH,
                   detail::profile_rule({&P::weakly_crossed}, {&P::support_subgroup},
                                        {"crossed", "support"}));
        ring_entry(
            "weakly_crossed_components_unit_translate",
            "in a weakly crossed grading every support component is the identity "
            "component translated by a homogeneous unit",
            TH, [](RingCtx& c) {
                detail::TriState h;
                h.need([&] { return c.prof.weakly_crossed(); }, "crossed");
                if (auto r = detail::gate_result(h)) return *r;
                if (!c.prof.finite()) {
                    const std::vector<i64> win = c.prof.support_degrees();
                    const bool trivial =
                        win.size() == 1 && win.front() == c.prof.mono().group().id();
                    if (trivial)
                        return detail::ok_result(
                            "the support is the identity degree alone");
                    return detail::bad_result(Json{{"support_window", win}});
                }
                const FiniteGradedRing& R = c.prof.fin();
                const std::vector<Coords> re =
                    detail::sorted_set(R.component_elements(R.group().id(), c.lim));
                for (i64 g : R.support()) {
                    const auto uv = homogeneous_unit_search(R, g, c.lim);
                    if (!uv)
                        return detail::bad_result(
                            Json{{"degree_without_unit", R.group().label(g)}});
                    std::vector<Coords> translate;
                    for (const Coords& a : re) translate.push_back(R.mul(a, uv->first));
                    if (detail::sorted_set(std::move(translate)) !=
                        detail::sorted_set(R.component_elements(g, c.lim)))
                        return detail::bad_result(
                            Json{{"degree", R.group().label(g)},
                                 {"unit", R.coords_str(uv->first)}});
                }
                return detail::ok_result();
            });
        ring_entry(
            "weakly_crossed_components_equicardinal",
            "in a weakly crossed grading every support component has the size of the "
            "identity component",
            TH, [](RingCtx& c) {
                detail::TriState h;
                h.need([&] { return c.prof.weakly_crossed(); }, "crossed");
                if (auto r = detail::gate_result(h)) return *r;
                if (!c.prof.finite()) {
                    const std::vector<i64> win = c.prof.support_degrees();
                    const bool trivial =
                        win.size() == 1 && win.front() == c.prof.mono().group().id();
                    if (trivial)
                        return detail::ok_result(
                            "the support is the identity degree alone");
                    return detail::bad_result(Json{{"support_window", win}});
                }
                const FiniteGradedRing& R = c.prof.fin();
                const u64 ce = R.component_size(R.group().id());
                for (i64 g : R.support())
                    if (R.component_size(g) != ce)
                        return detail::bad_result(
                            Json{{"degree", R.group().label(g)},
                                 {"component_size", R.component_size(g)},
                                 {"identity_component_size", ce}});
                return detail::ok_result();
            });

        // ------------------------------------------------------------------
        // ring non-implications: each expects at least one counterexample
        // somewhere in the pool

        ring_entry("weak_not_implies_nondegenerate", "weak does not imply nondegenerate",
                   NI,
                   detail::profile_rule({&P::weak}, {&P::nondegenerate},
                                        {"weak", "degeneracy"}));
        ring_entry("weak_not_implies_support_subgroup",
                   "weak does not force the support to be a subgroup", NI,
                   detail::profile_rule({&P::weak}, {&P::support_subgroup},
                                        {"weak", "support"}));
        ring_entry("weak_not_implies_first_strong", "weak does not imply first strong", NI,
                   detail::profile_rule({&P::weak}, {&P::first_strong},
                                        {"weak", "strongness"}));
        ring_entry("weak_not_implies_second_strong", "weak does not imply second strong",
                   NI,
                   detail::profile_rule({&P::weak}, {&P::second_strong},
                                        {"weak", "strongness"}));
        ring_entry("second_strong_not_implies_weak", "second strong does not imply weak",
                   NI,
                   detail::profile_rule({&P::second_strong}, {&P::weak},
                                        {"strongness", "weak"}));
        ring_entry("nondegenerate_not_implies_weakly_crossed",
                   "nondegenerate does not imply weakly crossed", NI,
                   detail::profile_rule({&P::nondegenerate}, {&P::weakly_crossed},
                                        {"degeneracy", "crossed"}));
        ring_entry("weak_not_implies_weakly_crossed", "weak does not imply weakly crossed",
                   NI,
                   detail::profile_rule({&P::weak}, {&P::weakly_crossed},
                                        {"weak", "crossed"}));
        ring_entry("strong_not_implies_invertible",
                   "strong does not force a division identity component", NI,
                   detail::profile_rule({&P::strong}, {&P::invertible},
                                        {"strongness", "invertible"}));
        ring_entry("invertible_not_implies_strong",
                   "a division identity component does not force a strong grading", NI,
                   detail::profile_rule({&P::invertible}, {&P::strong},
                                        {"invertible", "strongness"}));
        ring_entry("weakly_crossed_not_implies_invertible",
                   "weakly crossed does not force a division identity component", NI,
                   detail::profile_rule({&P::weakly_crossed}, {&P::invertible},
                                        {"crossed", "invertible"}));
        ring_entry("weakly_crossed_not_implies_crossed",
                   "weakly crossed does not imply crossed", NI,
                   detail::profile_rule({&P::weakly_crossed}, {&P::crossed}, {"crossed"}));

        // ------------------------------------------------------------------
        // module statements: component translates and endomorphism probes

        module_entry(
            "commutative_weakly_crossed_component_translate",
            "over a commutative weakly crossed ring each module component at a support "
            "degree is a unit translate of the identity-degree component",
            TH, [](ModuleCtx& c) {
                detail::TriState h;
                h.need([&] { return c.prof.ring_prof().commutative(); }, "commutativity");
                h.need([&] { return c.prof.ring_prof().weakly_crossed(); }, "crossed");
                if (auto r = detail::gate_result(h)) return *r;
                const FiniteGradedModule& M = c.prof.mod();
                const FiniteGradedRing& R = M.ring();
                const i64 e = R.group().id();
                const std::vector<Coords> me =
                    detail::sorted_set(M.component_elements(e, c.lim));
                for (i64 g : R.support()) {
                    const auto uv = homogeneous_unit_search(R, g, c.lim);
                    if (!uv)
                        return detail::bad_result(
                            Json{{"degree_without_unit", R.group().label(g)}});
                    std::vector<Coords> translate;
                    for (const Coords& x : me) translate.push_back(M.act(uv->first, x));
                    if (detail::sorted_set(std::move(translate)) !=
                        detail::sorted_set(M.component_elements(g, c.lim)))
                        return detail::bad_result(Json{{"degree", R.group().label(g)},
                                                       {"unit", R.coords_str(uv->first)}});
                }
                return detail::ok_result();
            });
        module_entry(
            "weakly_crossed_hom_component_images",
            "over a weakly crossed ring an endomorphism of the ring as a module fixes the "
            "identity component exactly when it fixes every component",
            TH, [](ModuleCtx& c) {
                detail::TriState h;
                h.need([&] { return c.prof.ring_prof().weakly_crossed(); }, "crossed");
                if (auto r = detail::gate_result(h)) return *r;
                const auto& Pd = c.prof.endo_probes();
                if (!Pd.ok) return detail::na_result();
                const FiniteGradedModule& M = c.prof.mod();
                const i64 e = M.group().id();
                ImplicationResult res;
                for (const auto& [label, f] : Pd.homs) {
                    res.applicable = true;
                    const bool fixes_identity =
                        detail::hom_component_image(f, e, c.lim) ==
                        detail::sorted_set(M.component_elements(e, c.lim));
                    bool fixes_all = true;
                    for (i64 g : M.support())
                        if (detail::hom_component_image(f, g, c.lim) !=
                            detail::sorted_set(M.component_elements(g, c.lim))) {
                            fixes_all = false;
                            break;
                        }
                    if (fixes_identity != fixes_all) {
                        res.counterexample = true;
                        res.witness = Json{{"probe", label},
                                           {"fixes_identity_component", fixes_identity},
                                           {"fixes_every_component", fixes_all}};
                        return res;
                    }
                }
                return res;
            });
        module_entry(
            "weakly_crossed_bijection_grade_fixing",
            "over a weakly crossed ring a bijective endomorphism of the ring as a module "
            "is grade fixing exactly when it fixes the identity component",
            TH, [](ModuleCtx& c) {
                detail::TriState h;
                h.need([&] { return c.prof.ring_prof().weakly_crossed(); }, "crossed");
                if (auto r = detail::gate_result(h)) return *r;
                const auto& Pd = c.prof.endo_probes();
                if (!Pd.ok) return detail::na_result();
                const FiniteGradedModule& M = c.prof.mod();
                const i64 e = M.group().id();
                ImplicationResult res;
                for (const auto& [label, f] : Pd.homs) {
                    if (!f.injective(c.lim) || !f.surjective(c.lim)) continue;
                    res.applicable = true;
                    const PropertyReport gf = is_grade_fixing(f);
                    if (!gf.decided()) return detail::aborted_result(gf.note);
                    const bool fixes_identity =
                        detail::hom_component_image(f, e, c.lim) ==
                        detail::sorted_set(M.component_elements(e, c.lim));
                    if (gf.holds() != fixes_identity) {
                        res.counterexample = true;
                        res.witness = Json{{"probe", label},
                                           {"grade_fixing", gf.to_json()},
                                           {"fixes_identity_component", fixes_identity}};
                        return res;
                    }
                }
                return res;
            });

        // ------------------------------------------------------------------
        // module statements: semi-essential submodules

        module_entry("essential_implies_semi_essential",
                     "an essential graded submodule is semi-essential", TH,
                     [](ModuleCtx& c) {
                         const auto& L = c.prof.lat();
                         if (!L.ok) return detail::aborted_result(L.note);
                         ImplicationResult res;
                         for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                             if (L.lattice[i].is_zero() || !L.ess[i]) continue;
                             res.applicable = true;
                             if (!L.semi[i]) {
                                 res.counterexample = true;
                                 res.witness = detail::subgroup_json(c.prof.mod(),
                                                                     L.lattice[i]);
                                 return res;
                             }
                         }
                         return res;
                     });
        module_entry(
            "semi_essential_element_characterization",
            "a nonzero graded submodule is semi-essential exactly when every nonzero "
            "prime contains a homogeneous element pushed into it by a homogeneous scalar",
            TH, [](ModuleCtx& c) {
                const auto& L = c.prof.lat();
                if (!L.ok) return detail::aborted_result(L.note);
                ImplicationResult res;
                for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                    if (L.lattice[i].is_zero()) continue;
                    res.applicable = true;
                    const PropertyReport r = is_graded_semi_essential(
                        c.prof.mod(), L.lattice[i], L.primes, c.lim, true);
                    if (!r.decided()) return detail::aborted_result(r.note);
                    if ((r.holds() ? 1 : 0) != L.semi[i]) {
                        res.counterexample = true;
                        res.witness = r.to_json();
                        return res;
                    }
                }
                return res;
            });
        module_entry("semi_essential_monotone",
                     "a graded submodule containing a semi-essential one is semi-essential",
                     TH, [](ModuleCtx& c) {
                         const auto& L = c.prof.lat();
                         if (!L.ok) return detail::aborted_result(L.note);
                         ImplicationResult res;
                         for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                             if (L.lattice[i].is_zero() || !L.semi[i]) continue;
                             for (std::size_t j = 0; j < L.lattice.size(); ++j) {
                                 if (j == i || L.lattice[j].is_zero()) continue;
                                 if (!subgroup_contains_subgroup(L.lattice[j], L.lattice[i]))
                                     continue;
                                 res.applicable = true;
                                 if (!L.semi[j]) {
                                     res.counterexample = true;
                                     res.witness = Json{
                                         {"inner", detail::subgroup_json(c.prof.mod(),
                                                                         L.lattice[i])},
                                         {"outer", detail::subgroup_json(c.prof.mod(),
                                                                         L.lattice[j])}};
                                     return res;
                                 }
                             }
                         }
                         return res;
                     });
        module_entry("intersection_semi_essential_both",
                     "if the intersection of two graded submodules is semi-essential then "
                     "both are",
                     TH, [](ModuleCtx& c) {
                         const auto& L = c.prof.lat();
                         if (!L.ok) return detail::aborted_result(L.note);
                         ImplicationResult res;
                         for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                             if (L.lattice[i].is_zero()) continue;
                             for (std::size_t j = 0; j <= i; ++j) {
                                 if (L.lattice[j].is_zero()) continue;
                                 const GradedSubgroup N =
                                     subgroup_intersect(L.lattice[i], L.lattice[j]);
                                 if (N.is_zero()) continue;
                                 if (!L.semi[L.index.at(N.parts())]) continue;
                                 res.applicable = true;
                                 if (!L.semi[i] || !L.semi[j]) {
                                     res.counterexample = true;
                                     res.witness = Json{
                                         {"first", detail::subgroup_json(c.prof.mod(),
                                                                         L.lattice[i])},
                                         {"second", detail::subgroup_json(c.prof.mod(),
                                                                          L.lattice[j])}};
                                     return res;
                                 }
                             }
                         }
                         return res;
                     });
        module_entry(
            "essential_cap_semi_essential",
            "the intersection of an essential submodule with a semi-essential one is "
            "semi-essential",
            TH, [](ModuleCtx& c) {
                const auto& L = c.prof.lat();
                if (!L.ok) return detail::aborted_result(L.note);
                ImplicationResult res;
                for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                    if (L.lattice[i].is_zero() || !L.ess[i]) continue;
                    for (std::size_t j = 0; j < L.lattice.size(); ++j) {
                        if (L.lattice[j].is_zero() || !L.semi[j]) continue;
                        res.applicable = true;
                        const GradedSubgroup N =
                            subgroup_intersect(L.lattice[i], L.lattice[j]);
                        const bool good = !N.is_zero() && L.semi[L.index.at(N.parts())];
                        if (!good) {
                            res.counterexample = true;
                            res.witness =
                                Json{{"essential", detail::subgroup_json(c.prof.mod(),
                                                                         L.lattice[i])},
                                     {"semi_essential",
                                      detail::subgroup_json(c.prof.mod(), L.lattice[j])}};
                            return res;
                        }
                    }
                }
                return res;
            });
        module_entry(
            "colon_condition_prime_intersection",
            "if every homogeneous element outside the intersection of a submodule with a "
            "prime has colon equal to the annihilator, the intersection is prime",
            TH, [](ModuleCtx& c) {
                const auto& L = c.prof.lat();
                if (!L.ok) return detail::aborted_result(L.note);
                ImplicationResult res;
                for (std::size_t i = 0; i < L.lattice.size(); ++i)
                    for (std::size_t p = 0; p < L.primes.size(); ++p) {
                        const GradedSubgroup N =
                            subgroup_intersect(L.lattice[i], L.primes[p]);
                        if (subgroup_is_whole_carrier(c.prof.mod(), N)) continue;
                        if (!c.prof.colon_condition(N)) continue;
                        res.applicable = true;
                        const PropertyReport pr =
                            is_graded_prime_submodule(c.prof.mod(), N, c.lim);
                        if (!pr.decided()) return detail::aborted_result(pr.note);
                        if (!pr.holds()) {
                            res.counterexample = true;
                            res.witness =
                                Json{{"intersection",
                                      detail::subgroup_json(c.prof.mod(), N)},
                                     {"prime_check", pr.to_json()}};
                            return res;
                        }
                    }
                return res;
            });
        module_entry(
            "colon_condition_intersection_semi_essential",
            "two semi-essential submodules intersect semi-essentially when the first "
            "satisfies the colon condition against every prime",
            TH, [](ModuleCtx& c) {
                const auto& L = c.prof.lat();
                if (!L.ok) return detail::aborted_result(L.note);
                ImplicationResult res;
                // with no nonzero prime the whole statement is vacuous: any two
                // nonzero submodules are then semi-essential, zero intersection
                // included
                bool has_nonzero_prime = false;
                for (const GradedSubgroup& T : L.primes)
                    if (!T.is_zero()) has_nonzero_prime = true;
                if (!has_nonzero_prime) return res;
                for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                    if (L.lattice[i].is_zero() || !L.semi[i]) continue;
                    bool cond = true;
                    for (std::size_t p = 0; p < L.primes.size() && cond; ++p)
                        cond = c.prof.colon_condition(
                            subgroup_intersect(L.lattice[i], L.primes[p]));
                    if (!cond) continue;
                    for (std::size_t j = 0; j < L.lattice.size(); ++j) {
                        if (L.lattice[j].is_zero() || !L.semi[j]) continue;
                        res.applicable = true;
                        const GradedSubgroup N =
                            subgroup_intersect(L.lattice[i], L.lattice[j]);
                        const bool good = !N.is_zero() && L.semi[L.index.at(N.parts())];
                        if (!good) {
                            res.counterexample = true;
                            res.witness = Json{
                                {"first",
                                 detail::subgroup_json(c.prof.mod(), L.lattice[i])},
                                {"second",
                                 detail::subgroup_json(c.prof.mod(), L.lattice[j])}};
                            return res;
                        }
                    }
                }
                return res;
            });
        module_entry("isomorphic_image_semi_essential",
                     "an isomorphism carries semi-essential submodules to semi-essential "
                     "images",
                     TH, detail::transfer_row_rule("isomorphism_forward"));
        module_entry("preimage_semi_essential",
                     "an epimorphism with kernel inside the prime radical of zero pulls "
                     "semi-essential submodules back to semi-essential preimages",
                     TH, detail::transfer_row_rule("epimorphism_backward"));
        module_entry("quotient_prime_uniqueness",
                     "when the image of a submodule stays semi-essential modulo a prime "
                     "kernel, no larger prime misses the submodule",
                     TH, detail::transfer_row_rule("prime_kernel_forcing"));
        module_entry(
            "multiplication_faithful_colon_semi_essential",
            "over a faithful multiplication module a submodule whose colon ideal is "
            "semi-essential is itself semi-essential",
            TH, [](ModuleCtx& c) {
                detail::TriState h;
                h.need([&] { return c.prof.multiplication(); }, "multiplication");
                h.need([&] { return c.prof.faithful_module(); }, "faithfulness");
                if (auto r = detail::gate_result(h)) return *r;
                const auto& L = c.prof.lat();
                if (!L.ok) return detail::aborted_result(L.note);
                const auto& RI = c.prof.ring_ideals();
                if (!RI.ok) return detail::aborted_result(RI.note);
                ImplicationResult res;
                for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                    if (L.lattice[i].is_zero()) continue;
                    const GradedSubgroup CI = colon_ideal(c.prof.mod(), L.lattice[i], c.lim);
                    if (CI.is_zero()) continue;
                    const PropertyReport ir =
                        is_semi_essential_ideal(c.prof.mod().ring(), CI, RI.primes, c.lim);
                    if (!ir.decided()) return detail::aborted_result(ir.note);
                    if (!ir.holds()) continue;
                    res.applicable = true;
                    if (!L.semi[i]) {
                        res.counterexample = true;
                        res.witness =
                            Json{{"submodule",
                                  detail::subgroup_json(c.prof.mod(), L.lattice[i])},
                                 {"colon_ideal", ir.to_json()}};
                        return res;
                    }
                }
                return res;
            });

        // ------------------------------------------------------------------
        // module statements: uniformity

        module_entry("uniform_implies_semi_uniform",
                     "a graded uniform module is graded semi-uniform", TH,
                     [](ModuleCtx& c) {
                         detail::TriState h;
                         h.need([&] { return c.prof.uniform(); }, "uniformity");
                         if (auto r = detail::gate_result(h)) return *r;
                         return detail::conclude(c.prof.semi_uniform(), [&] {
                             return Json{
                                 {"uniform", c.prof.uniform_rep().to_json()},
                                 {"semi_uniform", c.prof.semi_uniform_rep().to_json()}};
                         });
                     });
        module_entry("semi_uniform_ring_modules",
                     "over a graded semi-uniform ring every faithful multiplication module "
                     "is graded semi-uniform",
                     TH, [](ModuleCtx& c) {
                         detail::TriState h;
                         h.need([&] { return c.prof.ring_semi_uniform(); },
                                "ring semi-uniformity");
                         h.need([&] { return c.prof.multiplication(); }, "multiplication");
                         h.need([&] { return c.prof.faithful_module(); }, "faithfulness");
                         if (auto r = detail::gate_result(h)) return *r;
                         return detail::conclude(c.prof.semi_uniform(), [&] {
                             return Json{
                                 {"ring", c.prof.ring_semi_uniform_rep().to_json()},
                                 {"semi_uniform", c.prof.semi_uniform_rep().to_json()}};
                         });
                     });

        // ------------------------------------------------------------------
        // module non-implications

        module_entry("semi_essential_not_implies_essential",
                     "semi-essential does not imply essential", NI, [](ModuleCtx& c) {
                         const auto& L = c.prof.lat();
                         if (!L.ok) return detail::aborted_result(L.note);
                         ImplicationResult res;
                         for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                             if (L.lattice[i].is_zero() || !L.semi[i]) continue;
                             res.applicable = true;
                             if (!L.ess[i]) {
                                 res.counterexample = true;
                                 res.witness =
                                     detail::subgroup_json(c.prof.mod(), L.lattice[i]);
                                 return res;
                             }
                         }
                         return res;
                     });
        module_entry("semi_essential_monotone_converse",
                     "a submodule of a semi-essential submodule need not be semi-essential",
                     NI, [](ModuleCtx& c) {
                         const auto& L = c.prof.lat();
                         if (!L.ok) return detail::aborted_result(L.note);
                         ImplicationResult res;
                         for (std::size_t j = 0; j < L.lattice.size(); ++j) {
                             if (L.lattice[j].is_zero() || !L.semi[j]) continue;
                             for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                                 if (i == j || L.lattice[i].is_zero()) continue;
                                 if (!subgroup_contains_subgroup(L.lattice[j], L.lattice[i]))
                                     continue;
                                 res.applicable = true;
                                 if (!L.semi[i]) {
                                     res.counterexample = true;
                                     res.witness = Json{
                                         {"outer", detail::subgroup_json(c.prof.mod(),
                                                                         L.lattice[j])},
                                         {"inner", detail::subgroup_json(c.prof.mod(),
                                                                         L.lattice[i])}};
                                     return res;
                                 }
                             }
                         }
                         return res;
                     });
        module_entry("intersection_not_implies_semi_essential",
                     "two semi-essential submodules can intersect in a submodule that is "
                     "not semi-essential",
                     NI, [](ModuleCtx& c) {
                         const auto& L = c.prof.lat();
                         if (!L.ok) return detail::aborted_result(L.note);
                         ImplicationResult res;
                         for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                             if (L.lattice[i].is_zero() || !L.semi[i]) continue;
                             for (std::size_t j = 0; j <= i; ++j) {
                                 if (L.lattice[j].is_zero() || !L.semi[j]) continue;
                                 res.applicable = true;
                                 const GradedSubgroup N =
                                     subgroup_intersect(L.lattice[i], L.lattice[j]);
                                 const bool semi =
                                     !N.is_zero() && L.semi[L.index.at(N.parts())];
                                 if (!semi) {
                                     res.counterexample = true;
                                     res.witness = Json{
                                         {"first", detail::subgroup_json(c.prof.mod(),
                                                                         L.lattice[i])},
                                         {"second", detail::subgroup_json(c.prof.mod(),
                                                                          L.lattice[j])}};
                                     return res;
                                 }
                             }
                         }
                         return res;
                     });
        module_entry("semi_uniform_not_implies_uniform",
                     "graded semi-uniform does not imply graded uniform", NI,
                     [](ModuleCtx& c) {
                         detail::TriState h;
                         h.need([&] { return c.prof.semi_uniform(); }, "semi-uniformity");
                         if (auto r = detail::gate_result(h)) return *r;
                         const std::optional<bool> u = c.prof.uniform();
                         if (!u)
                             return detail::aborted_result(
                                 "uniformity undecided at the caps");
                         if (*u) return detail::ok_result();
                         return detail::bad_result(
                             Json{{"semi_uniform", c.prof.semi_uniform_rep().to_json()},
                                  {"uniform", c.prof.uniform_rep().to_json()}});
                     });
        module_entry(
            "semi_uniform_not_hereditary",
            "graded semi-uniformity does not pass to graded submodules", NI,
            [](ModuleCtx& c) {
                detail::TriState h;
                h.need([&] { return c.prof.semi_uniform(); }, "semi-uniformity");
                if (auto r = detail::gate_result(h)) return *r;
                const auto& L = c.prof.lat();
                if (!L.ok) return detail::aborted_result(L.note);
                ImplicationResult res;
                res.applicable = true;
                std::size_t tried = 0;
                for (std::size_t i = 0; i < L.lattice.size(); ++i) {
                    if (L.lattice[i].is_zero()) continue;
                    if (subgroup_is_whole_carrier(c.prof.mod(), L.lattice[i])) continue;
                    if (++tried > detail::restriction_scan_cap) break;
                    const FiniteGradedModule sub =
                        restrict_module(c.prof.mod(), L.lattice[i],
                                        c.prof.mod().name() + "_h");
                    const PropertyReport sr = is_graded_semi_uniform(sub, c.lim);
                    if (!sr.decided()) continue;
                    if (sr.fails()) {
                        res.counterexample = true;
                        res.witness =
                            Json{{"submodule",
                                  detail::subgroup_json(c.prof.mod(), L.lattice[i])},
                                 {"restricted", sr.to_json()}};
                        return res;
                    }
                }
                return res;
            });

        // ------------------------------------------------------------------
        // statements vacuous on finite carriers

        note_entry("weak_domain_division_artinian",
                   "descending chain conditions in weak graded domains with division "
                   "identity component",
                   "every instance in this corpus has a finite carrier and is Artinian "
                   "outright, so the chain hypothesis cannot separate anything");
        note_entry("invertible_weak_domain_noetherian",
                   "ascending chain conditions in weak graded domains with division "
                   "identity component",
                   "every instance in this corpus has a finite carrier and is Noetherian "
                   "outright, so the chain hypothesis cannot separate anything");
        note_entry("graded_noetherian_bijective_fixing",
                   "injective grade-preserving endomorphisms of Noetherian modules",
                   "on a finite carrier every injective endomorphism is bijective, so the "
                   "Noetherian hypothesis adds nothing here");

        return v;
    }();
    return catalog;
}

// ---------------------------------------------------------------------------
// instance pools and the suite runner

inline std::vector<RingInstance> suite_ring_pool(const GeneratorParams& P, u64 count) {
    std::vector<RingInstance> out;
    for (const std::string& name : fixture_names()) {
        Fixture f = build_fixture(name);
        if (!f.ring && !f.monomial) continue;
        RingInstance ri;
        ri.id = "fixture:" + name;
        ri.finite = std::move(f.ring);
        ri.monomial = std::move(f.monomial);
        out.push_back(std::move(ri));
    }
    {
        RingInstance ri;
        ri.id = "aux:t2_z2";
        ri.finite = upper_triangular_m2();
        out.push_back(std::move(ri));
    }
    {
        RingInstance ri;
        ri.id = "aux:w6";
        ri.finite = detail::wrapped_zn(6, "w6");
        out.push_back(std::move(ri));
    }
    for (u64 i = 0; i < count; ++i) out.push_back(generate_graded_ring(P, i));
    return out;
}

inline std::vector<ModuleInstance> suite_module_pool(const GeneratorParams& P, u64 count) {
    std::vector<ModuleInstance> out;
    for (const std::string& name : fixture_names()) {
        Fixture f = build_fixture(name);
        if (!f.module) continue;
        ModuleInstance mi;
        mi.id = "fixture:" + name;
        mi.module = std::move(f.module);
        out.push_back(std::move(mi));
    }
    {
        // a ring as a module over itself, over a weakly crossed base: keeps the
        // endomorphism and uniformity statements exercised on every run
        Fixture f = build_fixture("gf9_z2");
        if (f.ring) {
            ModuleInstance mi;
            mi.id = "aux:gf9_self";
            mi.module = ring_as_module(*f.ring, "gf9_self");
            out.push_back(std::move(mi));
        }
    }
    // ring-backed module families reuse the ring stream at the same index;
    // monomial draws fall back to a fixed scalar ring
    const FiniteGradedRing fallback = detail::wrapped_zn(12, "z12");
    for (u64 i = 0; i < count; ++i) {
        const RingInstance ri = generate_graded_ring(P, i);
        out.push_back(generate_graded_module(P, ri.finite ? *ri.finite : fallback, i));
    }
    return out;
}

struct SuiteOptions {
    GeneratorParams params;
    u64 ring_count = 200;
    u64 module_count = 60;
    Limits limits;
    bool stop_on_violation = true;
};

struct ImplicationStat {
    std::string id;
    Expected expected = Expected::theorem;
    u64 instances = 0;
    u64 applicable = 0;
    u64 counterexamples = 0;
    u64 aborted = 0;
    std::string first_instance;
    Json first_witness = Json::object();
    bool ok = true;
};

struct SuiteReport {
    bool ok = true;
    u64 ring_instances = 0;
    u64 module_instances = 0;
    std::vector<ImplicationStat> entries;
    Json violations = Json::array();

    Json to_json() const {
        Json j;
        j["ok"] = ok;
        j["ring_instances"] = ring_instances;
        j["module_instances"] = module_instances;
        Json es = Json::array();
        for (const ImplicationStat& s : entries) {
            Json e;
            e["id"] = s.id;
            e["expected"] = to_string(s.expected);
            e["instances"] = s.instances;
            e["applicable"] = s.applicable;
            e["counterexamples"] = s.counterexamples;
            e["aborted"] = s.aborted;
            e["ok"] = s.ok;
            if (!s.first_instance.empty()) {
                e["first_counterexample"] = s.first_instance;
                e["first_witness"] = s.first_witness;
            }
            es.push_back(std::move(e));
        }
        j["entries"] = std::move(es);
        j["violations"] = violations;
        return j;
    }
};

inline SuiteReport run_implication_suite(const SuiteOptions& opt) {
    const std::vector<Implication>& cat = implication_catalog();
    SuiteReport rep;
    rep.entries.resize(cat.size());
    for (std::size_t k = 0; k < cat.size(); ++k) {
        rep.entries[k].id = cat[k].id;
        rep.entries[k].expected = cat[k].expected;
    }
    const std::vector<RingInstance> rings = suite_ring_pool(opt.params, opt.ring_count);
    const std::vector<ModuleInstance> modules =
        suite_module_pool(opt.params, opt.module_count);
    rep.ring_instances = rings.size();
    rep.module_instances = modules.size();

    // true when the result violates a theorem entry
    auto absorb = [&](std::size_t k, const ImplicationResult& res, const std::string& id,
                      const std::function<Json()>& replay) {
        ImplicationStat& st = rep.entries[k];
        st.instances += 1;
        if (res.aborted) {
            st.aborted += 1;
            return false;
        }
        if (!res.applicable) return false;
        st.applicable += 1;
        if (!res.counterexample) return false;
        st.counterexamples += 1;
        if (st.first_instance.empty()) {
            st.first_instance = id;
            st.first_witness = res.witness;
        }
        if (cat[k].expected != Expected::theorem) return false;
        rep.violations.push_back(Json{{"implication", cat[k].id},
                                      {"instance", id},
                                      {"witness", res.witness},
                                      {"note", res.note},
                                      {"replay", replay()}});
        return true;
    };

    bool stop = false;
    for (const RingInstance& inst : rings) {
        if (stop) break;
        // the statements presume a ring with 1 != 0
        if (inst.finite && inst.finite->dim() == 0) continue;
        LazyRingProfile prof(inst, opt.limits);
        RingCtx ctx{inst, prof, opt.limits};
        auto replay = [&] {
            return inst.finite ? ring_to_json(*inst.finite) : monomial_to_json(*inst.monomial);
        };
        for (std::size_t k = 0; k < cat.size() && !stop; ++k) {
            if (!cat[k].ring_eval) continue;
            ImplicationResult res;
            try {
                res = cat[k].ring_eval(ctx);
            } catch (const cap_reached& e) {
                res = detail::aborted_result(e.what());
            }
            if (absorb(k, res, inst.id, replay) && opt.stop_on_violation) stop = true;
        }
    }
    for (const ModuleInstance& inst : modules) {
        if (stop) break;
        if (!inst.module || inst.module->dim() == 0) continue;
        LazyModuleProfile prof(*inst.module, opt.limits);
        ModuleCtx ctx{inst, prof, opt.limits};
        auto replay = [&] { return module_to_json(*inst.module); };
        for (std::size_t k = 0; k < cat.size() && !stop; ++k) {
            if (!cat[k].module_eval) continue;
            ImplicationResult res;
            try {
                res = cat[k].module_eval(ctx);
            } catch (const cap_reached& e) {
                res = detail::aborted_result(e.what());
            }
            if (absorb(k, res, inst.id, replay) && opt.stop_on_violation) stop = true;
        }
    }
    for (ImplicationStat& st : rep.entries) {
        switch (st.expected) {
            case Expected::theorem: st.ok = st.counterexamples == 0; break;
            case Expected::non_implication: st.ok = st.counterexamples >= 1; break;
            case Expected::vacuous_note: st.ok = true; break;
        }
        rep.ok = rep.ok && st.ok;
    }
    rep.ok = rep.ok && rep.violations.empty();
    return rep;
}

}  // namespace graded
