#pragma once

// Lattice points of leading exponents.  For a tableau of size n with
// leading-exponent counts alpha (entry i in column j), the point p has rows
//
//     p(k, j) = #(entries >= k in column j) = sum_{i=k}^{j} alpha[i][j],
//
// equivalently the recursion p(n) = (alpha_nn, 0, ..), p(r-1) = p(r) +
// (alpha_{r-1,n}, ..., alpha_{r-1,r-1}, 0, ..) in descending-j coordinates.
// Rendering rows 1..n truncated to their structural support (p(k,j) = 0 for
// j < k) gives a triangular pattern of row lengths n, n-1, ..., 1.
//
// Points of tableaux on smaller sizes embed into size n by zero-padding the
// new coordinates; the point of a block product is the sum of the embedded
// points of its parts, since column counts add.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bslab/errors.hpp"
#include "bslab/minors.hpp"
#include "bslab/tableau.hpp"

namespace bslab {

struct LatticePoint {
    int size = 0;
    std::vector<std::vector<int>> coords; // coords[k-1][j-1] = p(k, j)

    explicit LatticePoint(int size_ = 0)
        : size(size_), coords(static_cast<std::size_t>(size_), std::vector<int>(static_cast<std::size_t>(size_), 0)) {}

    int at(int k, int j) const { return coords[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)]; }
    int& at(int k, int j) { return coords[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)]; }

    // Identification key: rows k = 2..n restricted to their structural
    // support j = k..n; length n(n-1)/2.
    std::vector<int> key() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size) * (size - 1) / 2);
        for (int k = 2; k <= size; ++k)
            for (int j = size; j >= k; --j) out.push_back(at(k, j));
        return out;
    }

    bool operator==(const LatticePoint& o) const { return size == o.size && key() == o.key(); }
    bool operator<(const LatticePoint& o) const {
        if (size != o.size) return size < o.size;
        return key() < o.key();
    }
};

inline LatticePoint point_of_alpha(const AlphaMatrix& a) {
    LatticePoint p(a.n);
    for (int k = 1; k <= a.n; ++k)
        for (int j = k; j <= a.n; ++j) {
            int s = 0;
            for (int i = k; i <= j; ++i) s += a.at(i, j);
            p.at(k, j) = s;
        }
    return p;
}

inline LatticePoint point_of_tableau(const Tableau& t) { return point_of_alpha(leading_exponent(t)); }

inline LatticePoint embed_point(const LatticePoint& p, int n) {
    if (n < p.size)
        throw embedding_error("cannot embed a size-" + std::to_string(p.size) + " point into size " +
                              std::to_string(n));
    LatticePoint out(n);
    for (int k = 1; k <= p.size; ++k)
        for (int j = k; j <= p.size; ++j) out.at(k, j) = p.at(k, j);
    return out;
}

inline LatticePoint sum_points(const std::vector<LatticePoint>& parts, int n) {
    LatticePoint acc(n);
    for (const auto& p : parts) {
        const LatticePoint e = embed_point(p, n);
        for (int k = 1; k <= n; ++k)
            for (int j = k; j <= n; ++j) acc.at(k, j) += e.at(k, j);
    }
    return acc;
}

struct GTPattern {
    std::vector<std::vector<int>> rows; // rows[r-1] = (p(r,n), ..., p(r,r)), length n-r+1

    bool operator==(const GTPattern& o) const { return rows == o.rows; }
};

inline GTPattern gt_pattern(const LatticePoint& p) {
    GTPattern g;
    for (int r = 1; r <= p.size; ++r) {
        std::vector<int> row;
        for (int j = p.size; j >= r; --j) row.push_back(p.at(r, j));
        g.rows.push_back(std::move(row));
    }
    return g;
}

// Independent conversion route for contra-tableaux: transpose the skew
// columns into left-justified rows (row rho reads column n+1-rho, empty
// columns giving empty rows), complement and reverse the entries
// (e -> n+1-e), then read the pattern rows as the shapes of the subtableaux
// with entries <= k.  Matches gt_pattern(point_of_tableau(t)) coordinate by
// coordinate; when the filled columns reach column n the transpose is a
// semistandard tableau and the result interlaces.
inline GTPattern gt_pattern_of_contra(const Tableau& t) {
    if (!is_contra(t)) throw invalid_section_error("tableau is not a contra-tableau");
    const int n = t.n();

    std::vector<std::vector<int>> ssyt; // rows, left-justified, weakly increasing
    for (int c = n; c >= 1; --c) {
        std::vector<int> col;
        for (const auto& r : t.rows)
            if (r.has_cell(c)) col.push_back(n + 1 - r.entry_at(c));
        std::reverse(col.begin(), col.end());
        ssyt.push_back(std::move(col));
    }

    GTPattern g;
    for (int r = 1; r <= n; ++r) {
        const int k = n - r + 1;
        std::vector<int> row(static_cast<std::size_t>(k), 0);
        for (std::size_t rho = 0; rho < ssyt.size() && rho < static_cast<std::size_t>(k); ++rho) {
            int cnt = 0;
            for (int e : ssyt[rho])
                if (e <= k) ++cnt;
            row[rho] = cnt;
        }
        g.rows.push_back(std::move(row));
    }
    return g;
}

// Adjacent rows (a_1..a_m) over (b_1..b_{m-1}) must satisfy
// a_i >= b_i >= a_{i+1}.
inline bool is_interlacing(const GTPattern& g) {
    for (std::size_t r = 0; r + 1 < g.rows.size(); ++r) {
        const auto& a = g.rows[r];
        const auto& b = g.rows[r + 1];
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!(a[i] >= b[i] && b[i] >= a[i + 1])) return false;
    }
    return true;
}

// Distinct leading exponents over the straight tableaux of shape (d·m, w).
inline std::set<AlphaMatrix> initial_exponents(const Shape& shape, int d) {
    shape.require_canonical("initial exponent enumeration");
    if (d < 0) throw shape_error("degree must be nonnegative");
    std::vector<int> m = shape.m;
    for (int& v : m) v *= d;
    const Shape scaled = build_shape(shape.word, m);
    std::set<AlphaMatrix> out;
    visit_fillings(scaled, FillKind::Straight, [&](const std::vector<RowFilling>& placed) {
        AlphaMatrix a(scaled.n);
        for (const auto& r : placed)
            for (int c = r.columns.lo; c <= r.columns.hi; ++c) ++a.at(r.entry_at(c), c);
        out.insert(std::move(a));
    });
    return out;
}

inline std::string render_gt(const GTPattern& g) {
    int width = 1;
    for (const auto& row : g.rows)
        for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    const int half = (width + 3) / 2;
    const int sep = 2 * half - width;
    std::string out;
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
        std::string line(static_cast<std::size_t>(r) * static_cast<std::size_t>(half), ' ');
        for (std::size_t i = 0; i < g.rows[r].size(); ++i) {
            std::string s = std::to_string(g.rows[r][i]);
            if (i > 0) line += std::string(static_cast<std::size_t>(sep), ' ');
            line += std::string(static_cast<std::size_t>(width - static_cast<int>(s.size())), ' ') + s;
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace bslab
