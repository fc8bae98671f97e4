#pragma once

// Eventually periodic subsets of the naturals. Exact finite descriptions of
// exponent supports such as {1, 4, 7, ...}; all set algebra (union,
// intersection, sumset) stays within the class.

#include <algorithm>
#include <vector>

#include "graded/common.hpp"

namespace graded {

class Eps {
public:
    // Membership rule: j < threshold ? j in exceptional : (j mod period) in residues.
    // Canonical form: minimal period, then minimal threshold, exceptional sorted
    // and confined to [0, threshold).
    Eps() : threshold_(0), period_(1) {}

    static Eps empty_set() { return Eps(); }

    static Eps naturals() {
        Eps e;
        e.residues_ = {0};
        e.canonicalize();
        return e;
    }

    static Eps finite(std::vector<i64> members) {
        Eps e;
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (i64 m : members)
            if (m < 0) throw input_error("Eps members must be nonnegative");
        e.exceptional_ = std::move(members);
        e.threshold_ = e.exceptional_.empty() ? 0 : e.exceptional_.back() + 1;
        e.canonicalize();
        return e;
    }

    // {start, start+step, start+2*step, ...}
    static Eps progression(i64 start, i64 step) {
        if (start < 0 || step <= 0) throw input_error("Eps progression needs start >= 0, step > 0");
        Eps e;
        e.threshold_ = start;
        e.period_ = step;
        e.residues_ = {mod_norm(start, step)};
        e.canonicalize();
        return e;
    }

    static Eps make(i64 threshold, i64 period, std::vector<i64> residues,
                    std::vector<i64> exceptional) {
        if (threshold < 0 || period <= 0) throw input_error("Eps: bad threshold/period");
        Eps e;
        e.threshold_ = threshold;
        e.period_ = period;
        std::sort(residues.begin(), residues.end());
        residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
        for (i64 r : residues)
            if (r < 0 || r >= period) throw input_error("Eps: residue out of range");
        std::sort(exceptional.begin(), exceptional.end());
        exceptional.erase(std::unique(exceptional.begin(), exceptional.end()), exceptional.end());
        for (i64 x : exceptional)
            if (x < 0 || x >= threshold) throw input_error("Eps: exceptional out of range");
        e.residues_ = std::move(residues);
        e.exceptional_ = std::move(exceptional);
        e.canonicalize();
        return e;
    }

    bool contains(i64 j) const {
        if (j < 0) return false;
        if (j < threshold_) return std::binary_search(exceptional_.begin(), exceptional_.end(), j);
        return std::binary_search(residues_.begin(), residues_.end(), mod_norm(j, period_));
    }

    bool empty() const { return exceptional_.empty() && residues_.empty(); }
    bool finite() const { return residues_.empty(); }

    // Smallest member; only valid on a nonempty set.
    i64 min() const {
        if (!exceptional_.empty()) return exceptional_.front();
        for (i64 j = threshold_; j < threshold_ + period_; ++j)
            if (contains(j)) return j;
        throw input_error("Eps::min on empty set");
    }

    std::vector<i64> elements_below(i64 n) const {
        std::vector<i64> out;
        for (i64 j = 0; j < n; ++j)
            if (contains(j)) out.push_back(j);
        return out;
    }

    i64 threshold() const { return threshold_; }
    i64 period() const { return period_; }
    const std::vector<i64>& residues() const { return residues_; }
    const std::vector<i64>& exceptional() const { return exceptional_; }

    friend bool operator==(const Eps& a, const Eps& b) {
        return a.threshold_ == b.threshold_ && a.period_ == b.period_ &&
               a.residues_ == b.residues_ && a.exceptional_ == b.exceptional_;
    }
    friend bool operator!=(const Eps& a, const Eps& b) { return !(a == b); }

    friend Eps set_union(const Eps& a, const Eps& b) {
        return pointwise(a, b, [](bool x, bool y) { return x || y; });
    }

    friend Eps set_intersect(const Eps& a, const Eps& b) {
        return pointwise(a, b, [](bool x, bool y) { return x && y; });
    }

    bool subset_of(const Eps& b) const { return set_intersect(*this, b) == *this; }

    // A+B = {a+b}. Stabilization: for j >= T_A + T_B + 2L (L = lcm of periods)
    // membership of j and j+L agree, because any decomposition j = a+b forces
    // a >= T_A + L or b >= T_B + L, and the periodic zone absorbs a shift by L
    // in that coordinate. So sampling [0, T'+L) determines the sumset exactly.
    friend Eps sumset(const Eps& a, const Eps& b) {
        if (a.empty() || b.empty()) return Eps::empty_set();
        const i64 L = lcm_i64(a.period_, b.period_);
        const i64 tprime = a.threshold_ + b.threshold_ + 2 * L;
        std::vector<i64> av = a.elements_below(tprime + L);
        std::vector<char> inb(static_cast<std::size_t>(tprime + L), 0);
        for (i64 j = 0; j < tprime + L; ++j) inb[static_cast<std::size_t>(j)] = b.contains(j) ? 1 : 0;
        std::vector<i64> exceptional;
        std::vector<i64> residues;
        auto member = [&](i64 j) {
            for (i64 x : av) {
                if (x > j) break;
                if (inb[static_cast<std::size_t>(j - x)]) return true;
            }
            return false;
        };
        for (i64 j = 0; j < tprime; ++j)
            if (member(j)) exceptional.push_back(j);
        for (i64 j = tprime; j < tprime + L; ++j)
            if (member(j)) residues.push_back(mod_norm(j, L));
        return Eps::make(tprime, L, std::move(residues), std::move(exceptional));
    }

private:
    template <typename Op>
    static Eps pointwise(const Eps& a, const Eps& b, Op op) {
        Eps e;
        e.period_ = lcm_i64(a.period_, b.period_);
        e.threshold_ = std::max(a.threshold_, b.threshold_);
        for (i64 j = 0; j < e.threshold_; ++j)
            if (op(a.contains(j), b.contains(j))) e.exceptional_.push_back(j);
        for (i64 r = 0; r < e.period_; ++r)
            if (op(a.contains(e.threshold_ + r), b.contains(e.threshold_ + r)))
                e.residues_.push_back(mod_norm(e.threshold_ + r, e.period_));
        std::sort(e.residues_.begin(), e.residues_.end());
        e.canonicalize();
        return e;
    }

    void canonicalize() {
        if (residues_.empty()) {
            period_ = 1;
        } else {
            // Minimal period: smallest divisor d of period_ with residues
            // invariant under +d (mod period_).
            for (i64 d = 1; d <= period_; ++d) {
                if (period_ % d != 0) continue;
                bool ok = true;
                for (i64 r : residues_) {
                    if (!std::binary_search(residues_.begin(), residues_.end(),
                                            mod_norm(r + d, period_))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    if (d < period_) {
                        std::vector<i64> rs;
                        for (i64 r : residues_) rs.push_back(mod_norm(r, d));
                        std::sort(rs.begin(), rs.end());
                        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
                        residues_ = std::move(rs);
                        period_ = d;
                    }
                    break;
                }
            }
        }
        // Minimal threshold: drop trailing positions whose exceptional status
        // already matches the periodic rule.
        while (threshold_ > 0) {
            const i64 j = threshold_ - 1;
            const bool actual =
                std::binary_search(exceptional_.begin(), exceptional_.end(), j);
            const bool periodic =
                std::binary_search(residues_.begin(), residues_.end(), mod_norm(j, period_));
            if (actual != periodic) break;
            if (actual) exceptional_.pop_back();
            --threshold_;
        }
    }

    i64 threshold_;
    i64 period_;
    std::vector<i64> residues_;     // sorted, in [0, period)
    std::vector<i64> exceptional_;  // sorted, in [0, threshold)
};

}  // namespace graded
