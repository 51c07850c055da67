#pragma once

// Words in the simple reflections s_1..s_{n-1} of GL_n and their column
// sets.  The canonical word used throughout the library is
//
//     (1)(2,1)(3,2,1)...(n-1,...,1),
//
// of length n(n-1)/2; its product is the longest element w_0 (k -> n+1-k).
// The k-th column set is obtained by applying the product of the first k
// letters to the initial interval {1,...,i_k}:
//
//     C^(k) = s_{i_1} s_{i_2} ... s_{i_k} {1,...,i_k}.
//
// For the canonical word every C^(k) is an integer interval; block j of the
// word (letters j, j-1, ..., 1 at positions p_j+1 .. p_{j+1}, where
// p_j = j(j-1)/2) has column sets
//
//     C^(p_j + u) = {u+1, ..., j+1},   u = 1..j.
//
// For arbitrary words the sets need not be intervals (word (2,1) on n=3
// yields {1,3}).

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bslab/errors.hpp"

namespace bslab {

struct Word {
    int n = 0;                // rank: letters live in 1..n-1
    std::vector<int> letters; // positions 1..l map to letters[0..l-1]

    Word() = default;
    Word(int n_, std::vector<int> letters_) : n(n_), letters(std::move(letters_)) {
        if (n < 2) throw invalid_rank_error("word rank must be at least 2, got " + std::to_string(n));
        for (int a : letters)
            if (a < 1 || a > n - 1)
                throw invalid_word_error("word letter " + std::to_string(a) + " out of range 1.." +
                                         std::to_string(n - 1));
    }

    int length() const { return static_cast<int>(letters.size()); }

    bool operator==(const Word& o) const { return n == o.n && letters == o.letters; }
};

inline Word longest_word(int n) {
    if (n < 2) throw invalid_rank_error("rank must be at least 2, got " + std::to_string(n));
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j <= n - 1; ++j)
        for (int a = j; a >= 1; --a) letters.push_back(a);
    return Word(n, std::move(letters));
}

// Image array of the product s_{i_1}...s_{i_l}: perm[x-1] is the image of x.
inline std::vector<int> permutation_product(const Word& w) {
    std::vector<int> perm(static_cast<std::size_t>(w.n));
    std::iota(perm.begin(), perm.end(), 1);
    // Appending a letter multiplies on the right, which swaps two adjacent
    // slots of the image array.
    for (int a : w.letters) std::swap(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(a)]);
    return perm;
}

inline bool is_longest_element(const Word& w) {
    const std::vector<int> perm = permutation_product(w);
    for (int x = 1; x <= w.n; ++x)
        if (perm[static_cast<std::size_t>(x - 1)] != w.n + 1 - x) return false;
    return static_cast<int>(w.letters.size()) == w.n * (w.n - 1) / 2;
}

// Column sets of a word, kept as sorted integer vectors so that
// non-interval sets arising from non-canonical words are representable.
struct ColumnSetList {
    int n = 0;
    std::vector<std::vector<int>> sets; // sets[k-1] = C^(k), sorted ascending

    bool operator==(const ColumnSetList& o) const { return n == o.n && sets == o.sets; }
};

inline ColumnSetList column_sets(const Word& w) {
    ColumnSetList out;
    out.n = w.n;
    std::vector<int> perm(static_cast<std::size_t>(w.n));
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        const int a = w.letters[k];
        std::swap(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(a)]);
        std::vector<int> set(perm.begin(), perm.begin() + a);
        std::sort(set.begin(), set.end());
        out.sets.push_back(std::move(set));
    }
    return out;
}

// True when every set is a contiguous interval. Sets are sorted, so this is
// a span-versus-size comparison per set.
inline bool is_row_convex(const ColumnSetList& cs) {
    for (const auto& s : cs.sets) {
        if (s.empty()) continue;
        if (s.back() - s.front() + 1 != static_cast<int>(s.size())) return false;
    }
    return true;
}

// Offset of block j in the canonical word: letters of block j occupy
// positions block_offset(j)+1 .. block_offset(j+1).
inline int block_offset(int j) { return j * (j - 1) / 2; }

// Block index of position k (1-based) in the canonical word for rank n.
inline int block_of_position(int k, int n) {
    for (int j = 1; j <= n - 1; ++j)
        if (k <= block_offset(j + 1)) return j;
    throw shape_error("position " + std::to_string(k) + " beyond canonical word length");
}

} // namespace bslab
