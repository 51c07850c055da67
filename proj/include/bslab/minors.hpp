#pragma once

// Flagged minors of the generic upper-triangular matrix and tableau
// polynomials (products of row minors).  [R:C] is the determinant of the
// submatrix with rows R and columns C; it vanishes identically unless the
// k-th smallest row index is at most the k-th smallest column index, a
// fact the determinant expansion reproduces on its own.
//
// The leading exponent of a tableau under the diagonal order is recorded
// as the matrix alpha, where alpha[i][j] counts occurrences of entry i in
// column j; the leading monomial is the product of x_i_j^alpha[i][j].

#include <algorithm>
#include <string>
#include <vector>

#include "bslab/errors.hpp"
#include "bslab/polynomial.hpp"
#include "bslab/tableau.hpp"

namespace bslab {

inline std::string ut_var_name(int i, int j) { return "x_" + std::to_string(i) + "_" + std::to_string(j); }

// Entry (i, j) of the generic upper-triangular matrix in the given context.
inline Poly ut_entry(const ContextPtr& ctx, int i, int j) {
    if (i > j) return Poly::zero(ctx);
    return Poly::variable(ctx, ut_var_name(i, j));
}

inline Poly minor_poly(const ContextPtr& ctx, std::vector<int> rows, std::vector<int> cols, int n) {
    if (rows.size() != cols.size()) throw invalid_minor_error("minor needs equally many rows and columns");
    if (rows.empty()) return Poly::constant(ctx, 1);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i] == rows[i + 1] || cols[i] == cols[i + 1])
            throw invalid_minor_error("minor row/column sets must not repeat indices");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] < 1 || rows[i] > n || cols[i] < 1 || cols[i] > n)
            throw invalid_minor_error("minor index out of range 1.." + std::to_string(n));
    std::vector<std::vector<Poly>> mat;
    for (int r : rows) {
        std::vector<Poly> row;
        for (int c : cols) row.push_back(ut_entry(ctx, r, c));
        mat.push_back(std::move(row));
    }
    return poly_det(mat);
}

inline Poly minor_poly(std::vector<int> rows, std::vector<int> cols, int n) {
    return minor_poly(upper_triangular_context(n), std::move(rows), std::move(cols), n);
}

// Product of the row minors [entries : columns], top row first.  Rows that
// violate the flag condition contribute zero factors, so the product of a
// fragment with a zero row is the zero polynomial.
inline Poly tableau_poly(const Tableau& t, const ContextPtr& ctx) {
    Poly acc = Poly::constant(ctx, 1);
    for (const auto& r : t.rows) {
        if (r.entries.empty()) continue;
        std::vector<int> cols;
        for (int c = r.columns.lo; c <= r.columns.hi; ++c) cols.push_back(c);
        acc *= minor_poly(ctx, r.entries, cols, t.n());
        if (acc.is_zero()) break;
    }
    return acc;
}

inline Poly tableau_poly(const Tableau& t) { return tableau_poly(t, upper_triangular_context(t.n())); }

// Counts of entry i in column j over all rows of a tableau.
struct AlphaMatrix {
    int n = 0;
    std::vector<std::vector<int>> counts; // counts[i-1][j-1]

    explicit AlphaMatrix(int n_ = 0)
        : n(n_), counts(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0)) {}

    int at(int i, int j) const { return counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
    int& at(int i, int j) { return counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

    int column_sum(int j) const {
        int s = 0;
        for (int i = 1; i <= n; ++i) s += at(i, j);
        return s;
    }

    AlphaMatrix& operator+=(const AlphaMatrix& o) {
        if (n != o.n) throw embedding_error("alpha matrices of different sizes");
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) at(i, j) += o.at(i, j);
        return *this;
    }

    bool operator==(const AlphaMatrix& o) const { return n == o.n && counts == o.counts; }
    bool operator<(const AlphaMatrix& o) const {
        if (n != o.n) return n < o.n;
        return counts < o.counts;
    }

    // Flat key for hashing and map lookups.
    std::vector<int> key() const {
        std::vector<int> k;
        k.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (const auto& row : counts) k.insert(k.end(), row.begin(), row.end());
        return k;
    }
};

inline AlphaMatrix leading_exponent(const Tableau& t) {
    AlphaMatrix a(t.n());
    for (const auto& r : t.rows)
        for (int c = r.columns.lo; c <= r.columns.hi; ++c) ++a.at(r.entry_at(c), c);
    return a;
}

// Exponent vector of the monomial prod x_i_j^alpha[i][j] in the
// upper-triangular context of matching rank.
inline Exponent exponent_of_alpha(const AlphaMatrix& a, const ContextPtr& ctx) {
    Exponent e(static_cast<std::size_t>(ctx->size()), 0);
    for (int i = 1; i <= a.n; ++i)
        for (int j = i; j <= a.n; ++j) {
            const int v = a.at(i, j);
            if (v != 0) e[static_cast<std::size_t>(ctx->index(ut_var_name(i, j)))] = v;
        }
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j < i; ++j)
            if (a.at(i, j) != 0) throw invalid_entry_error("alpha matrix has a strictly-lower-triangular entry");
    return e;
}

inline AlphaMatrix alpha_of_exponent(const Exponent& e, const ContextPtr& ctx, int n) {
    AlphaMatrix a(n);
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        const std::string& name = ctx->names[v];
        // parse "x_i_j"
        const auto p1 = name.find('_');
        const auto p2 = name.find('_', p1 + 1);
        const int i = std::stoi(name.substr(p1 + 1, p2 - p1 - 1));
        const int j = std::stoi(name.substr(p2 + 1));
        a.at(i, j) = e[v];
    }
    return a;
}

} // namespace bslab
