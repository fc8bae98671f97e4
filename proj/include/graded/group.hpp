#pragma once

// Grading groups. Two backends behind one value type:
//   - finite groups as validated multiplication tables, elements = indices
//   - the additive integers, elements = their own values
// Degree order is canonical everywhere: finite groups by table index, the
// integers by (|v|, nonnegative first), i.e. 0, 1, -1, 2, -2, ...

#include <algorithm>
#include <string>
#include <vector>

#include "graded/common.hpp"

namespace graded {

enum class SubsetClass { empty_set, subgroup, monoid_not_subgroup, not_monoid };

inline const char* to_string(SubsetClass c) {
    switch (c) {
        case SubsetClass::empty_set: return "empty";
        case SubsetClass::subgroup: return "subgroup";
        case SubsetClass::monoid_not_subgroup: return "monoid_not_subgroup";
        case SubsetClass::not_monoid: return "not_monoid";
    }
    return "?";
}

class Group {
public:
    static Group integers() {
        Group g;
        g.name_ = "Z";
        g.integers_ = true;
        return g;
    }

    static Group cyclic(i64 n) {
        if (n <= 0) throw input_error("cyclic group order must be positive");
        std::vector<std::string> labels;
        std::vector<std::vector<i64>> table(static_cast<std::size_t>(n),
                                            std::vector<i64>(static_cast<std::size_t>(n)));
        for (i64 i = 0; i < n; ++i) {
            labels.push_back(std::to_string(i));
            for (i64 j = 0; j < n; ++j) table[i][j] = mod_norm(i + j, n);
        }
        return from_table("Z" + std::to_string(n), std::move(labels), std::move(table));
    }

    // Dihedral group of order 2m: rotations a^i, reflections a^i b, with
    // b a b = a^{-1}. Indices 0..m-1 are a^i, m..2m-1 are a^{i-m} b.
    static Group dihedral(i64 m) {
        if (m < 1) throw input_error("dihedral parameter must be >= 1");
        const i64 n = 2 * m;
        std::vector<std::string> labels(static_cast<std::size_t>(n));
        for (i64 i = 0; i < m; ++i) {
            labels[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
            labels[m + i] = i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
        }
        std::vector<std::vector<i64>> table(static_cast<std::size_t>(n),
                                            std::vector<i64>(static_cast<std::size_t>(n)));
        auto enc = [m](i64 i, i64 j) { return mod_norm(i, m) + (j ? m : 0); };
        for (i64 x = 0; x < n; ++x) {
            const i64 i = x % m, j = x / m;
            for (i64 y = 0; y < n; ++y) {
                const i64 k = y % m, l = y / m;
                // (a^i b^j)(a^k b^l) = a^{i + k} b^l when j = 0,
                //                      a^{i - k} b^{1+l} when j = 1.
                table[x][y] = j == 0 ? enc(i + k, l) : enc(i - k, 1 - l);
            }
        }
        return from_table("D" + std::to_string(n), std::move(labels), std::move(table));
    }

    static Group trivial() { return cyclic(1); }

    static Group from_table(std::string name, std::vector<std::string> labels,
                            std::vector<std::vector<i64>> table) {
        Group g;
        g.name_ = std::move(name);
        g.labels_ = std::move(labels);
        g.table_ = std::move(table);
        g.validate();
        return g;
    }

    static Group direct_product(const Group& a, const Group& b) {
        if (!a.is_finite() || !b.is_finite())
            throw input_error("direct_product needs finite factors");
        const i64 na = a.order(), nb = b.order(), n = na * nb;
        std::vector<std::string> labels(static_cast<std::size_t>(n));
        std::vector<std::vector<i64>> table(static_cast<std::size_t>(n),
                                            std::vector<i64>(static_cast<std::size_t>(n)));
        auto enc = [nb](i64 i, i64 j) { return i * nb + j; };
        for (i64 i = 0; i < na; ++i)
            for (i64 j = 0; j < nb; ++j) {
                labels[enc(i, j)] = "(" + a.label(i) + "," + b.label(j) + ")";
                for (i64 k = 0; k < na; ++k)
                    for (i64 l = 0; l < nb; ++l)
                        table[enc(i, j)][enc(k, l)] = enc(a.op(i, k), b.op(j, l));
            }
        return from_table(a.name() + "x" + b.name(), std::move(labels), std::move(table));
    }

    bool is_integers() const { return integers_; }
    bool is_finite() const { return !integers_; }

    i64 order() const {
        if (integers_) throw input_error("order() on the integers");
        return static_cast<i64>(labels_.size());
    }

    i64 id() const { return integers_ ? 0 : id_; }

    i64 op(i64 a, i64 b) const {
        if (integers_) return a + b;
        check_elem(a);
        check_elem(b);
        return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    i64 inv(i64 a) const {
        if (integers_) return -a;
        check_elem(a);
        return inv_[static_cast<std::size_t>(a)];
    }

    i64 pow(i64 g, i64 k) const {
        if (integers_) return g * k;
        i64 base = k < 0 ? inv(g) : g;
        i64 e = k < 0 ? -k : k;
        i64 acc = id();
        while (e > 0) {
            acc = op(acc, base);
            --e;
        }
        return acc;
    }

    bool is_abelian() const {
        if (integers_) return true;
        for (i64 a = 0; a < order(); ++a)
            for (i64 b = a + 1; b < order(); ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }

    const std::string& name() const { return name_; }

    std::string label(i64 g) const {
        if (integers_) return std::to_string(g);
        check_elem(g);
        return labels_[static_cast<std::size_t>(g)];
    }

    i64 element_of_label(const std::string& s) const {
        if (integers_) {
            try {
                std::size_t pos = 0;
                i64 v = std::stoll(s, &pos);
                if (pos != s.size()) throw input_error("bad integer degree '" + s + "'");
                return v;
            } catch (const std::logic_error&) {
                throw input_error("bad integer degree '" + s + "'");
            }
        }
        for (i64 g = 0; g < order(); ++g)
            if (labels_[static_cast<std::size_t>(g)] == s) return g;
        throw input_error("unknown group element label '" + s + "'");
    }

    std::vector<i64> elements() const {
        if (integers_) throw input_error("elements() on the integers");
        std::vector<i64> out(static_cast<std::size_t>(order()));
        for (i64 g = 0; g < order(); ++g) out[static_cast<std::size_t>(g)] = g;
        return out;
    }

    bool valid_elem(i64 g) const {
        return integers_ || (g >= 0 && g < static_cast<i64>(labels_.size()));
    }

    bool degree_less(i64 a, i64 b) const {
        if (!integers_) return a < b;
        const i64 ma = a < 0 ? -a : a, mb = b < 0 ? -b : b;
        if (ma != mb) return ma < mb;
        return a > b;  // same magnitude: nonnegative first
    }

    std::vector<i64> sorted_degrees(std::vector<i64> degs) const {
        std::sort(degs.begin(), degs.end(),
                  [this](i64 a, i64 b) { return degree_less(a, b); });
        degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
        return degs;
    }

    // Classification of a finite degree set under the group operation.
    SubsetClass classify_subset(const std::vector<i64>& subset) const {
        if (subset.empty()) return SubsetClass::empty_set;
        auto in = [&](i64 g) {
            return std::find(subset.begin(), subset.end(), g) != subset.end();
        };
        bool monoid = in(id());
        for (std::size_t i = 0; i < subset.size() && monoid; ++i)
            for (std::size_t j = 0; j < subset.size() && monoid; ++j)
                if (!in(op(subset[i], subset[j]))) monoid = false;
        if (!monoid) return SubsetClass::not_monoid;
        for (i64 g : subset)
            if (!in(inv(g))) return SubsetClass::monoid_not_subgroup;
        return SubsetClass::subgroup;
    }

    // Finite groups only: closure of a subset under the operation (which in a
    // finite group already yields a subgroup when the set is nonempty).
    std::vector<i64> subgroup_closure(std::vector<i64> seed) const {
        if (integers_) throw input_error("subgroup_closure on the integers");
        std::vector<char> in(static_cast<std::size_t>(order()), 0);
        in[static_cast<std::size_t>(id())] = 1;
        std::vector<i64> members = {id()};
        for (i64 g : seed) {
            check_elem(g);
            if (!in[static_cast<std::size_t>(g)]) {
                in[static_cast<std::size_t>(g)] = 1;
                members.push_back(g);
            }
        }
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = 0; j < members.size(); ++j) {
                    const i64 p = op(members[i], members[j]);
                    if (!in[static_cast<std::size_t>(p)]) {
                        in[static_cast<std::size_t>(p)] = 1;
                        members.push_back(p);
                        grew = true;
                    }
                }
        }
        std::sort(members.begin(), members.end());
        return members;
    }

    // Quotient by a normal subgroup, given as an element list. projection (if
    // non-null) receives the element -> coset index map.
    Group quotient(const std::vector<i64>& normal, std::vector<i64>* projection) const {
        if (integers_) throw input_error("quotient on the integers");
        std::vector<i64> n_sorted = normal;
        std::sort(n_sorted.begin(), n_sorted.end());
        n_sorted.erase(std::unique(n_sorted.begin(), n_sorted.end()), n_sorted.end());
        if (classify_subset(n_sorted) != SubsetClass::subgroup)
            throw input_error("quotient: not a subgroup");
        auto in_n = [&](i64 g) {
            return std::binary_search(n_sorted.begin(), n_sorted.end(), g);
        };
        for (i64 g = 0; g < order(); ++g)
            for (i64 x : n_sorted)
                if (!in_n(op(op(g, x), inv(g))))
                    throw input_error("quotient: subgroup is not normal");
        std::vector<i64> coset_of(static_cast<std::size_t>(order()), -1);
        std::vector<i64> reps;
        for (i64 g = 0; g < order(); ++g) {
            if (coset_of[static_cast<std::size_t>(g)] != -1) continue;
            const i64 c = static_cast<i64>(reps.size());
            reps.push_back(g);
            for (i64 x : n_sorted) coset_of[static_cast<std::size_t>(op(g, x))] = c;
        }
        const i64 q = static_cast<i64>(reps.size());
        std::vector<std::string> labels(static_cast<std::size_t>(q));
        std::vector<std::vector<i64>> table(static_cast<std::size_t>(q),
                                            std::vector<i64>(static_cast<std::size_t>(q)));
        for (i64 i = 0; i < q; ++i) {
            labels[static_cast<std::size_t>(i)] = "[" + label(reps[static_cast<std::size_t>(i)]) + "]";
            for (i64 j = 0; j < q; ++j)
                table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    coset_of[static_cast<std::size_t>(op(reps[static_cast<std::size_t>(i)],
                                                         reps[static_cast<std::size_t>(j)]))];
        }
        if (projection) *projection = coset_of;
        return from_table(name_ + "/N" + std::to_string(n_sorted.size()), std::move(labels),
                          std::move(table));
    }

    friend bool operator==(const Group& a, const Group& b) {
        return a.integers_ == b.integers_ && a.table_ == b.table_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

private:
    Group() = default;

    void check_elem(i64 g) const {
        if (!valid_elem(g)) throw input_error("group element out of range");
    }

    void validate() {
        const std::size_t n = labels_.size();
        Limits lim;
        if (n == 0) throw input_error("group: empty element list");
        if (n > lim.group_order_cap) throw input_error("group: order above cap");
        if (table_.size() != n) throw input_error("group: table size mismatch");
        for (const auto& row : table_) {
            if (row.size() != n) throw input_error("group: table row size mismatch");
            for (i64 v : row)
                if (v < 0 || v >= static_cast<i64>(n))
                    throw input_error("group: table entry out of range");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (labels_[i].empty()) throw input_error("group: empty label");
            for (std::size_t j = i + 1; j < n; ++j)
                if (labels_[i] == labels_[j])
                    throw input_error("group: duplicate label '" + labels_[i] + "'");
        }
        id_ = -1;
        for (std::size_t e = 0; e < n; ++e) {
            bool ok = true;
            for (std::size_t g = 0; g < n && ok; ++g)
                ok = table_[e][g] == static_cast<i64>(g) && table_[g][e] == static_cast<i64>(g);
            if (ok) {
                id_ = static_cast<i64>(e);
                break;
            }
        }
        if (id_ < 0) throw input_error("group: no identity element");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const i64 ab_c = table_[static_cast<std::size_t>(table_[a][b])][c];
                    const i64 a_bc = table_[a][static_cast<std::size_t>(table_[b][c])];
                    if (ab_c != a_bc) throw input_error("group: operation not associative");
                }
        inv_.assign(n, -1);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                if (table_[a][b] == id_ && table_[b][a] == id_) {
                    inv_[a] = static_cast<i64>(b);
                    break;
                }
            if (inv_[a] < 0) throw input_error("group: element without inverse");
        }
    }

    std::string name_;
    bool integers_ = false;
    std::vector<std::string> labels_;
    std::vector<std::vector<i64>> table_;
    std::vector<i64> inv_;
    i64 id_ = 0;
};

}  // namespace graded
