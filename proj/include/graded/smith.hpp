#pragma once

// Smith normal form over the integers, tracking only the column transform.
// Used to present quotients Z^k / L (L = row span of a relation matrix) as
// direct sums of cyclic groups with explicit coordinate maps.

#include <cstdlib>
#include <vector>

#include "graded/common.hpp"

namespace graded {

struct SmithForm {
    // invariant factors d_1 | d_2 | ... (one per column; 0 when the relation
    // lattice does not have full rank in that direction)
    std::vector<i64> diag;
    // unimodular k x k column transform and its inverse: with row vectors,
    // x * V reduced mod diag is the class of x in Z^k / rowspan(A), and row i
    // of Vinv lifts the i-th cyclic generator back to Z^k.
    std::vector<std::vector<i64>> V, Vinv;
};

inline SmithForm smith_form(std::vector<std::vector<i64>> A, std::size_t k) {
    const std::size_t m = A.size();
    for (const auto& row : A)
        if (row.size() != k) throw input_error("smith_form: ragged matrix");
    SmithForm sf;
    sf.V.assign(k, std::vector<i64>(k, 0));
    sf.Vinv.assign(k, std::vector<i64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) sf.V[i][i] = sf.Vinv[i][i] = 1;

    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : A) std::swap(row[i], row[j]);
        for (auto& row : sf.V) std::swap(row[i], row[j]);
        sf.Vinv[i].swap(sf.Vinv[j]);
    };
    auto col_add = [&](std::size_t src, std::size_t dst, i64 q) {
        // col_dst += q * col_src
        if (q == 0) return;
        for (auto& row : A) row[dst] += q * row[src];
        for (auto& row : sf.V) row[dst] += q * row[src];
        for (std::size_t c = 0; c < k; ++c) sf.Vinv[src][c] -= q * sf.Vinv[dst][c];
    };
    auto col_neg = [&](std::size_t i) {
        for (auto& row : A) row[i] = -row[i];
        for (auto& row : sf.V) row[i] = -row[i];
        for (std::size_t c = 0; c < k; ++c) sf.Vinv[i][c] = -sf.Vinv[i][c];
    };

    std::size_t t = 0;
    const std::size_t lim = std::min(m, k);
    while (t < lim) {
        // smallest nonzero pivot in the remaining block
        std::size_t pr = m, pc = k;
        for (std::size_t r = t; r < m; ++r)
            for (std::size_t c = t; c < k; ++c)
                if (A[r][c] != 0 &&
                    (pr == m || std::llabs(A[r][c]) < std::llabs(A[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == m) break;
        std::swap(A[t], A[pr]);
        col_swap(t, pc);

        bool clean = true;
        for (std::size_t r = t + 1; r < m; ++r) {
            const i64 q = A[r][t] / A[t][t];
            if (q != 0)
                for (std::size_t c = t; c < k; ++c) A[r][c] -= q * A[t][c];
            if (A[r][t] != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < k; ++c) {
            col_add(t, c, -(A[t][c] / A[t][t]));
            if (A[t][c] != 0) clean = false;
        }
        if (!clean) continue;  // remainders became new, smaller pivots

        // divisibility: pivot must divide every later entry
        bool again = false;
        for (std::size_t r = t + 1; r < m && !again; ++r)
            for (std::size_t c = t + 1; c < k && !again; ++c)
                if (A[r][c] % A[t][t] != 0) {
                    for (std::size_t cc = t; cc < k; ++cc) A[t][cc] += A[r][cc];
                    again = true;
                }
        if (again) continue;

        if (A[t][t] < 0) col_neg(t);
        ++t;
    }
    sf.diag.assign(k, 0);
    for (std::size_t i = 0; i < t; ++i) sf.diag[i] = A[i][i];
    return sf;
}

}  // namespace graded
