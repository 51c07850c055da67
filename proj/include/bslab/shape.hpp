#pragma once

// Row layouts of tableaux attached to a word and a multiplicity vector m.
// The tableau shape for (word, m) has |m| rows drawn top-to-bottom as
//
//     C^(l) x m_l,  C^(l-1) x m_{l-1},  ...,  C^(1) x m_1,
//
// i.e. the first product factor is the bottom row.  Rows of canonical-word
// shapes are intervals (row-convexity), stored as (lo, hi).
//
// For the canonical word, m decomposes as m = m(1) + ... + m(n-1) with m(j)
// supported on block j; block n-1 read as a Young diagram (row sizes sorted
// descending) gives the dominant weight of the flag-variety sections that
// embed into this shape's span.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "bslab/errors.hpp"
#include "bslab/word.hpp"

namespace bslab {

struct ColumnInterval {
    int lo = 1, hi = 0; // empty when lo > hi

    int size() const { return hi >= lo ? hi - lo + 1 : 0; }
    bool empty() const { return size() == 0; }
    bool contains(int c) const { return c >= lo && c <= hi; }
    bool operator==(const ColumnInterval& o) const {
        return (empty() && o.empty()) || (lo == o.lo && hi == o.hi);
    }
};

struct ShapeRow {
    ColumnInterval columns;
    int block = 0;  // block index j of the source position, 0 when ad hoc
    int source = 0; // word position a (1-based), 0 when ad hoc
    int repeat = 0; // which of the m_a copies (1-based), 0 when ad hoc

    bool operator==(const ShapeRow& o) const { return columns == o.columns; }
};

struct Shape {
    int n = 0;
    Word word;              // empty letters when the shape is ad hoc
    std::vector<int> m;     // aligned with word.letters; empty for ad hoc
    std::vector<ShapeRow> rows; // top-to-bottom
    bool canonical = false; // word is the canonical longest word

    int row_count() const { return static_cast<int>(rows.size()); }

    bool operator==(const Shape& o) const { return n == o.n && rows == o.rows; }

    // The m(j) decomposition; canonical-word shapes only.
    std::vector<std::vector<int>> blocks() const {
        require_canonical("block decomposition");
        std::vector<std::vector<int>> out;
        for (int j = 1; j <= n - 1; ++j) {
            std::vector<int> mj(m.size(), 0);
            for (int a = block_offset(j) + 1; a <= block_offset(j + 1); ++a)
                mj[static_cast<std::size_t>(a - 1)] = m[static_cast<std::size_t>(a - 1)];
            out.push_back(std::move(mj));
        }
        return out;
    }

    // Dominant weight read from block n-1 as a Young diagram: the multiset
    // of that block's row sizes, sorted descending.
    std::vector<int> flag_weight() const {
        require_canonical("flag weight");
        std::vector<int> parts;
        for (const auto& r : rows)
            if (r.block == n - 1) parts.push_back(r.columns.size());
        std::sort(parts.rbegin(), parts.rend());
        return parts;
    }

    void require_canonical(const std::string& what) const {
        if (!canonical)
            throw unsupported_word_error(what + " requires the canonical word shape");
    }
};

inline Shape build_shape(const Word& word, const std::vector<int>& m) {
    if (static_cast<int>(m.size()) != word.length())
        throw shape_error("multiplicity has " + std::to_string(m.size()) + " entries for a word of length " +
                          std::to_string(word.length()));
    for (int v : m)
        if (v < 0) throw shape_error("negative multiplicity");

    const ColumnSetList cs = column_sets(word);
    if (!is_row_convex(cs))
        throw shape_error("column sets of this word are not intervals; no row layout exists");

    Shape s;
    s.n = word.n;
    s.word = word;
    s.m = m;
    s.canonical = (word == longest_word(word.n));
    for (int a = word.length(); a >= 1; --a) {
        const auto& set = cs.sets[static_cast<std::size_t>(a - 1)];
        ColumnInterval iv{set.front(), set.back()};
        const int block = s.canonical ? block_of_position(a, s.n) : 0;
        for (int b = m[static_cast<std::size_t>(a - 1)]; b >= 1; --b)
            s.rows.push_back(ShapeRow{iv, block, a, b});
    }
    return s;
}

inline Shape shape_of_multiplicity(int n, const std::vector<int>& m) {
    return build_shape(longest_word(n), m);
}

// Ad hoc layout from explicit row intervals (top-to-bottom); used for
// fillings that are fragments of larger tableaux rather than full shapes.
inline Shape shape_from_rows(int n, const std::vector<ColumnInterval>& rows) {
    if (n < 2) throw invalid_rank_error("shape rank must be at least 2");
    Shape s;
    s.n = n;
    for (const auto& iv : rows) {
        if (!iv.empty() && (iv.lo < 1 || iv.hi > n))
            throw shape_error("row interval exceeds column range 1.." + std::to_string(n));
        s.rows.push_back(ShapeRow{iv, 0, 0, 0});
    }
    return s;
}

// The per-block multiplicity vectors m(1), ..., m(n-1).
inline std::vector<std::vector<int>> decompose_multiplicity(const Shape& shape) { return shape.blocks(); }

// Young-diagram style rendering: one text row per shape row, 'X' for cells,
// spaces for the empty cells left of the row interval.
inline std::string render_shape(const Shape& s) {
    std::string out;
    for (const auto& r : s.rows) {
        std::string line(static_cast<std::size_t>(s.n), ' ');
        for (int c = r.columns.lo; c <= r.columns.hi; ++c) line[static_cast<std::size_t>(c - 1)] = 'X';
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace bslab
