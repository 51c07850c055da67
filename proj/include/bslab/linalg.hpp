#pragma once

// Exact rank of sparse integer matrices by fraction-free Gaussian
// elimination.  Rows are sorted (column, coefficient) vectors over cpp_int;
// an elimination step replaces row_j by piv_coeff*row_j - row_j[c]*piv_row
// and then divides out the content (gcd) of the result, so entries stay
// reduced and all arithmetic is integral.  Pivot selection is deterministic
// minimal-fill: shortest row first, then the column of lowest occupancy.

#include <algorithm>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "bslab/numeric.hpp"

namespace bslab {

using SparseRow = std::vector<std::pair<int, Int>>; // sorted by column, nonzero coefficients

namespace detail {
inline void normalize_content(SparseRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    const bool flip = row.front().second < 0;
    if (g == 1 && !flip) return;
    if (flip) g = -g;
    for (auto& [c, v] : row) v /= g;
}

inline const Int* coeff_at(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const std::pair<int, Int>& a, int c) { return a.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// target = a*target - b*source, merged by column.
inline SparseRow combine(const SparseRow& target, const Int& a, const SparseRow& source, const Int& b) {
    SparseRow out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            out.emplace_back(target[i].first, a * target[i].second);
            ++i;
        } else if (i == target.size() || source[j].first < target[i].first) {
            out.emplace_back(source[j].first, -b * source[j].second);
            ++j;
        } else {
            Int v = a * target[i].second - b * source[j].second;
            if (v != 0) out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}
} // namespace detail

// Full reduced row echelon form over the rationals, in place.  Returns the
// pivot columns (the rank is their number).  Deterministic: scans columns
// left to right, picks the first row with a nonzero entry.
inline std::vector<int> rref(std::vector<std::vector<Rat>>& mat) {
    std::vector<int> pivots;
    if (mat.empty()) return pivots;
    const std::size_t ncols = mat[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < mat.size(); ++col) {
        std::size_t sel = row;
        while (sel < mat.size() && mat[sel][col] == 0) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[sel], mat[row]);
        const Rat lead = mat[row][col];
        for (std::size_t j = col; j < ncols; ++j) mat[row][j] /= lead;
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == row || mat[i][col] == 0) continue;
            const Rat f = mat[i][col];
            for (std::size_t j = col; j < ncols; ++j) mat[i][j] -= f * mat[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

// Exact rank over the rationals of the matrix whose rows are given.
inline int sparse_rank(std::vector<SparseRow> rows) {
    for (auto& r : rows) detail::normalize_content(r);

    std::map<int, int> col_count;
    auto add_row_cols = [&](const SparseRow& r, int delta) {
        for (const auto& [c, v] : r) col_count[c] += delta;
    };
    for (const auto& r : rows) add_row_cols(r, +1);

    std::vector<bool> active(rows.size(), true);
    int rank = 0;
    for (;;) {
        // Pivot row: fewest nonzeros, lowest index breaking ties.
        int pr = -1;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i].empty()) continue;
            if (rows[i].size() < best) {
                best = rows[i].size();
                pr = static_cast<int>(i);
            }
        }
        if (pr < 0) break;
        // Pivot column within the row: lowest occupancy, lowest index.
        int pc = rows[static_cast<std::size_t>(pr)].front().first;
        int occ = std::numeric_limits<int>::max();
        for (const auto& [c, v] : rows[static_cast<std::size_t>(pr)]) {
            const int k = col_count[c];
            if (k < occ) {
                occ = k;
                pc = c;
            }
        }
        ++rank;
        const SparseRow piv = rows[static_cast<std::size_t>(pr)];
        const Int pv = *detail::coeff_at(piv, pc);
        active[static_cast<std::size_t>(pr)] = false;
        add_row_cols(piv, -1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i].empty()) continue;
            const Int* x = detail::coeff_at(rows[i], pc);
            if (!x) continue;
            add_row_cols(rows[i], -1);
            rows[i] = detail::combine(rows[i], pv, piv, *x);
            detail::normalize_content(rows[i]);
            add_row_cols(rows[i], +1);
        }
    }
    return rank;
}

} // namespace bslab
