#pragma once

// Row-standard tableaux on interval row layouts.
//
// A row assigns strictly increasing entries to its columns; a row is
// "flagged" when the k-th smallest entry is at most the k-th smallest
// column, which for interval rows means entry <= column cellwise.  Flagged
// rows are exactly the nonzero row minors, so the basis machinery only ever
// constructs flagged fillings; the relaxed factory exists because the
// straightness predicate is meaningful for arbitrary fragments.
//
// Straightness (rows indexed top-to-bottom): whenever entry(i,k) >
// entry(j,k) for rows i < j sharing column k, row i must contain column k-1
// with entry(i,k-1) >= entry(j,k).  On skew layouts (rows right-justified
// at a common last column, lengths weakly increasing downward) straightness
// coincides with the contra condition: columns weakly increase downward.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bslab/errors.hpp"
#include "bslab/shape.hpp"

namespace bslab {

struct RowFilling {
    ColumnInterval columns;
    std::vector<int> entries; // entries[i] sits in column columns.lo + i

    bool has_cell(int c) const { return columns.contains(c); }
    int entry_at(int c) const { return entries[static_cast<std::size_t>(c - columns.lo)]; }

    bool operator==(const RowFilling& o) const { return columns == o.columns && entries == o.entries; }
};

inline bool is_flagged(const RowFilling& r) {
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        if (r.entries[i] > r.columns.lo + static_cast<int>(i)) return false;
    return true;
}

struct RowStandardized {
    int sign = 1;
    std::optional<RowFilling> row; // nullopt: repeated entry, the row is zero
};

// Sort raw entries into a row-standard filling, tracking the sign of the
// permutation; a repeated entry yields the zero marker.
inline RowStandardized row_standardize(const ColumnInterval& columns, std::vector<int> raw, int n) {
    if (static_cast<int>(raw.size()) != columns.size())
        throw invalid_entry_error("row has " + std::to_string(raw.size()) + " entries for " +
                                  std::to_string(columns.size()) + " cells");
    for (int e : raw)
        if (e < 1 || e > n)
            throw invalid_entry_error("entry " + std::to_string(e) + " out of range 1.." + std::to_string(n));
    int sign = 1;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
        for (std::size_t j = 0; j + 1 < raw.size() - i; ++j)
            if (raw[j] > raw[j + 1]) {
                std::swap(raw[j], raw[j + 1]);
                sign = -sign;
            }
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
        if (raw[i] == raw[i + 1]) return RowStandardized{1, std::nullopt};
    return RowStandardized{sign, RowFilling{columns, std::move(raw)}};
}

struct Tableau {
    std::shared_ptr<const Shape> shape;
    std::vector<RowFilling> rows; // aligned with shape->rows, top-to-bottom

    int n() const { return shape->n; }
    int row_count() const { return static_cast<int>(rows.size()); }

    bool operator==(const Tableau& o) const { return *shape == *o.shape && rows == o.rows; }
};

inline std::shared_ptr<const Shape> share(const Shape& s) { return std::make_shared<const Shape>(s); }

namespace detail {
inline Tableau make_tableau(std::shared_ptr<const Shape> shape, const std::vector<std::vector<int>>& entries,
                            bool require_flagged) {
    if (static_cast<int>(entries.size()) != shape->row_count())
        throw shape_error("tableau has " + std::to_string(entries.size()) + " rows for a shape with " +
                          std::to_string(shape->row_count()));
    Tableau t;
    t.shape = std::move(shape);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const ColumnInterval& iv = t.shape->rows[i].columns;
        std::vector<int> row = entries[i];
        if (static_cast<int>(row.size()) != iv.size())
            throw invalid_entry_error("row " + std::to_string(i + 1) + " has wrong cell count");
        for (int e : row)
            if (e < 1 || e > t.shape->n)
                throw invalid_entry_error("entry " + std::to_string(e) + " out of range 1.." +
                                          std::to_string(t.shape->n));
        for (std::size_t k = 0; k + 1 < row.size(); ++k)
            if (row[k] >= row[k + 1])
                throw invalid_entry_error("row " + std::to_string(i + 1) + " is not strictly increasing");
        RowFilling rf{iv, std::move(row)};
        if (require_flagged && !is_flagged(rf))
            throw invalid_entry_error("row " + std::to_string(i + 1) + " violates the flag condition (zero row)");
        t.rows.push_back(std::move(rf));
    }
    return t;
}
} // namespace detail

// Standard constructor: rejects zero rows (flag violations), so every
// tableau built this way has a nonzero polynomial.
inline Tableau make_tableau(const Shape& shape, const std::vector<std::vector<int>>& entries) {
    return detail::make_tableau(share(shape), entries, true);
}

// Relaxed constructor for predicate testing on fragments whose rows may be
// zero as sections.
inline Tableau make_unflagged_tableau(const Shape& shape, const std::vector<std::vector<int>>& entries) {
    return detail::make_tableau(share(shape), entries, false);
}

inline bool is_flagged(const Tableau& t) {
    for (const auto& r : t.rows)
        if (!is_flagged(r)) return false;
    return true;
}

namespace detail {
// Straightness of row r against a single earlier row i.
inline bool straight_pair(const RowFilling& above, const RowFilling& below) {
    const int lo = std::max(above.columns.lo, below.columns.lo);
    const int hi = std::min(above.columns.hi, below.columns.hi);
    for (int k = lo; k <= hi; ++k) {
        const int a = above.entry_at(k), b = below.entry_at(k);
        if (a > b) {
            if (!above.has_cell(k - 1) || above.entry_at(k - 1) < b) return false;
        }
    }
    return true;
}

inline bool contra_pair(const RowFilling& above, const RowFilling& below) {
    const int lo = std::max(above.columns.lo, below.columns.lo);
    const int hi = std::min(above.columns.hi, below.columns.hi);
    for (int k = lo; k <= hi; ++k)
        if (above.entry_at(k) > below.entry_at(k)) return false;
    return true;
}
} // namespace detail

inline bool is_straight(const Tableau& t) {
    for (std::size_t j = 1; j < t.rows.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!detail::straight_pair(t.rows[i], t.rows[j])) return false;
    return true;
}

// Skew layout: nonempty rows right-justified at one common last column with
// lengths weakly increasing top-to-bottom.
inline bool is_skew_layout(const Shape& s) {
    int hi = 0, prev_len = 0;
    for (const auto& r : s.rows) {
        if (r.columns.empty()) continue;
        if (hi == 0) hi = r.columns.hi;
        if (r.columns.hi != hi) return false;
        if (r.columns.size() < prev_len) return false;
        prev_len = r.columns.size();
    }
    return true;
}

inline bool is_contra(const Tableau& t) {
    if (!is_skew_layout(*t.shape))
        throw not_skew_error("contra-tableaux require a skew row layout");
    for (std::size_t j = 1; j < t.rows.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!detail::contra_pair(t.rows[i], t.rows[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration.  Depth-first over rows top-to-bottom with per-row candidate
// fillings in ascending lexicographic order, so the output order is
// lexicographic by concatenated row entries.  Straight/contra violations are
// pairwise conditions on placed rows only, hence valid pruning points.

enum class FillKind { RowStandard, Straight, Contra };

namespace detail {
inline void row_candidates(const ColumnInterval& iv, int n, std::vector<std::vector<int>>& out) {
    out.clear();
    const int len = iv.size();
    if (len == 0) {
        out.push_back({});
        return;
    }
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int idx, int minval) {
        if (idx == len) {
            out.push_back(cur);
            return;
        }
        const int cap = std::min(iv.lo + idx, n); // flag condition, entries <= n
        for (int e = minval; e <= cap; ++e) {
            cur.push_back(e);
            rec(idx + 1, e + 1);
            cur.pop_back();
        }
    };
    rec(0, 1);
}
} // namespace detail

// Visitor form: `visit` receives the placed rows of each complete filling.
inline void visit_fillings(const Shape& shape, FillKind kind,
                           const std::function<void(const std::vector<RowFilling>&)>& visit) {
    if (kind == FillKind::Contra && !is_skew_layout(shape))
        throw not_skew_error("contra enumeration requires a skew row layout");

    const int rc = shape.row_count();
    std::vector<std::vector<std::vector<int>>> cands(static_cast<std::size_t>(rc));
    for (int i = 0; i < rc; ++i)
        detail::row_candidates(shape.rows[static_cast<std::size_t>(i)].columns, shape.n,
                               cands[static_cast<std::size_t>(i)]);

    std::vector<RowFilling> placed;
    placed.reserve(static_cast<std::size_t>(rc));
    std::function<void(int)> rec = [&](int r) {
        if (r == rc) {
            visit(placed);
            return;
        }
        const ColumnInterval& iv = shape.rows[static_cast<std::size_t>(r)].columns;
        for (const auto& entries : cands[static_cast<std::size_t>(r)]) {
            RowFilling rf{iv, entries};
            bool ok = true;
            if (kind == FillKind::Straight) {
                for (const auto& prev : placed)
                    if (!detail::straight_pair(prev, rf)) {
                        ok = false;
                        break;
                    }
            } else if (kind == FillKind::Contra) {
                for (const auto& prev : placed)
                    if (!detail::contra_pair(prev, rf)) {
                        ok = false;
                        break;
                    }
            }
            if (!ok) continue;
            placed.push_back(std::move(rf));
            rec(r + 1);
            placed.pop_back();
        }
    };
    rec(0);
}

inline std::vector<Tableau> enumerate_fillings(const Shape& shape, FillKind kind) {
    auto sh = share(shape);
    std::vector<Tableau> out;
    visit_fillings(shape, kind, [&](const std::vector<RowFilling>& placed) {
        Tableau t;
        t.shape = sh;
        t.rows = placed;
        out.push_back(std::move(t));
    });
    return out;
}

inline std::size_t count_fillings(const Shape& shape, FillKind kind) {
    std::size_t count = 0;
    visit_fillings(shape, kind, [&](const std::vector<RowFilling>&) { ++count; });
    return count;
}

inline std::vector<Tableau> enumerate_row_standard(const Shape& shape) {
    return enumerate_fillings(shape, FillKind::RowStandard);
}
inline std::vector<Tableau> enumerate_straight(const Shape& shape) {
    return enumerate_fillings(shape, FillKind::Straight);
}
inline std::vector<Tableau> enumerate_contra(const Shape& shape) {
    return enumerate_fillings(shape, FillKind::Contra);
}

// ---------------------------------------------------------------------------
// Block structure: factor a tableau on a canonical shape into its per-block
// parts, and rebuild a tableau from parts on one common multiplicity.

inline std::vector<Tableau> block_factor(const Tableau& t) {
    const Shape& s = *t.shape;
    s.require_canonical("block factorization");
    const auto mjs = s.blocks();
    std::vector<Tableau> parts;
    for (int j = 1; j <= s.n - 1; ++j) {
        Shape part_shape = shape_of_multiplicity(s.n, mjs[static_cast<std::size_t>(j - 1)]);
        Tableau part;
        part.shape = share(part_shape);
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            if (s.rows[i].block == j) part.rows.push_back(t.rows[i]);
        parts.push_back(std::move(part));
    }
    return parts;
}

inline Tableau block_product(const std::vector<Tableau>& parts) {
    if (parts.empty()) throw block_mismatch_error("no parts to multiply");
    const int n = parts.front().n();
    if (static_cast<int>(parts.size()) != n - 1)
        throw block_mismatch_error("expected " + std::to_string(n - 1) + " parts, got " +
                                   std::to_string(parts.size()));
    const int l = n * (n - 1) / 2;
    std::vector<int> m(static_cast<std::size_t>(l), 0);
    for (int j = 1; j <= n - 1; ++j) {
        const Tableau& part = parts[static_cast<std::size_t>(j - 1)];
        const Shape& ps = *part.shape;
        if (ps.n != n) throw block_mismatch_error("parts have mixed ranks");
        ps.require_canonical("block product");
        for (int a = 1; a <= l; ++a) {
            const int v = ps.m[static_cast<std::size_t>(a - 1)];
            if (v == 0) continue;
            if (block_of_position(a, n) != j)
                throw block_mismatch_error("part " + std::to_string(j) + " is supported outside block " +
                                           std::to_string(j));
            m[static_cast<std::size_t>(a - 1)] += v;
        }
    }
    Shape full = shape_of_multiplicity(n, m);
    Tableau out;
    out.shape = share(full);
    for (int j = n - 1; j >= 1; --j)
        for (const auto& r : parts[static_cast<std::size_t>(j - 1)].rows) out.rows.push_back(r);
    if (out.row_count() != full.row_count()) throw block_mismatch_error("parts do not fill the product shape");
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        if (!(out.rows[i].columns == out.shape->rows[i].columns))
            throw block_mismatch_error("part rows misaligned with the product shape");
    return out;
}

// Canonical filling of block j: every row filled with its own column set.
inline Tableau canonical_block_fill(const Shape& shape, int j) {
    shape.require_canonical("canonical block filling");
    const auto mjs = shape.blocks();
    Shape part_shape = shape_of_multiplicity(shape.n, mjs[static_cast<std::size_t>(j - 1)]);
    Tableau t;
    t.shape = share(part_shape);
    for (const auto& r : part_shape.rows) {
        std::vector<int> entries;
        for (int c = r.columns.lo; c <= r.columns.hi; ++c) entries.push_back(c);
        t.rows.push_back(RowFilling{r.columns, std::move(entries)});
    }
    return t;
}

// Embed a contra-tableau on the top-block shape of `shape` by filling every
// lower block canonically.  Entries of the canonical rows equal their column
// indices, the cellwise maximum over flagged fillings, so the result is
// always straight.
inline Tableau lift_flag_section(const Tableau& t, const Shape& shape) {
    shape.require_canonical("flag section lift");
    const auto mjs = shape.blocks();
    Shape top_shape = shape_of_multiplicity(shape.n, mjs[static_cast<std::size_t>(shape.n - 2)]);
    if (!(*t.shape == top_shape))
        throw invalid_section_error("section does not live on the top-block shape of the target");
    if (!is_contra(t)) throw invalid_section_error("section is not a contra-tableau");

    std::vector<Tableau> parts;
    for (int j = 1; j <= shape.n - 2; ++j) parts.push_back(canonical_block_fill(shape, j));
    Tableau top = t;
    top.shape = share(top_shape);
    parts.push_back(std::move(top));
    Tableau lifted = block_product(parts);
    if (!(*lifted.shape == shape)) throw invalid_section_error("lift landed on an unexpected shape");
    return lifted;
}

// ---------------------------------------------------------------------------

// Layout-faithful rendering: one line per row, entries in their column
// positions, spaces for absent cells.  Every cell is padded to the width of
// the widest entry so columns stay aligned.
inline std::string render_tableau(const Tableau& t) {
    int width = 1;
    for (const auto& r : t.rows)
        for (int e : r.entries) width = std::max(width, static_cast<int>(std::to_string(e).size()));
    std::string out;
    for (const auto& r : t.rows) {
        std::string line;
        for (int c = 1; c <= t.n(); ++c) {
            if (r.has_cell(c)) {
                std::string s = std::to_string(r.entry_at(c));
                line += std::string(static_cast<std::size_t>(width - static_cast<int>(s.size())), ' ') + s;
            } else {
                line += std::string(static_cast<std::size_t>(width), ' ');
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace bslab
