#pragma once

// Multivariate polynomials with exact integer coefficients over a fixed,
// ordered variable context.  The monomial order everywhere is pure
// lexicographic in the declared variable order; for the upper-triangular
// context the declaration is row-major (x_1_1 > x_1_2 > ... > x_1_n >
// x_2_2 > ... > x_n_n), which is the diagonal term order: the leading term
// of a flagged minor is its main-diagonal product.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bslab/errors.hpp"
#include "bslab/numeric.hpp"

namespace bslab {

struct VarContext {
    std::vector<std::string> names;
    std::map<std::string, int> index_of;

    explicit VarContext(std::vector<std::string> names_) : names(std::move(names_)) {
        for (std::size_t i = 0; i < names.size(); ++i) index_of[names[i]] = static_cast<int>(i);
    }

    int size() const { return static_cast<int>(names.size()); }

    int index(const std::string& name) const {
        auto it = index_of.find(name);
        if (it == index_of.end()) throw evaluation_error("unknown variable " + name);
        return it->second;
    }

    bool operator==(const VarContext& o) const { return names == o.names; }
};

using ContextPtr = std::shared_ptr<const VarContext>;

// Generic matrix entries x_i_j for 1 <= i <= j <= n, row-major order.
inline ContextPtr upper_triangular_context(int n) {
    if (n < 2) throw invalid_rank_error("context rank must be at least 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
    return std::make_shared<const VarContext>(std::move(names));
}

using Exponent = std::vector<int>;

struct LexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

struct ExponentPolynomial {
    ContextPtr context;
    std::map<Exponent, Int, LexGreater> terms; // greatest exponent first, no zero coefficients

    ExponentPolynomial() = default;
    explicit ExponentPolynomial(ContextPtr ctx) : context(std::move(ctx)) {}

    bool is_zero() const { return terms.empty(); }

    static ExponentPolynomial zero(ContextPtr ctx) { return ExponentPolynomial(std::move(ctx)); }

    static ExponentPolynomial constant(ContextPtr ctx, Int c) {
        ExponentPolynomial p(std::move(ctx));
        if (c != 0) p.terms.emplace(Exponent(static_cast<std::size_t>(p.context->size()), 0), std::move(c));
        return p;
    }

    static ExponentPolynomial monomial(ContextPtr ctx, Exponent e, Int c) {
        ExponentPolynomial p(std::move(ctx));
        if (static_cast<int>(e.size()) != p.context->size())
            throw context_mismatch_error("exponent length does not match context");
        if (c != 0) p.terms.emplace(std::move(e), std::move(c));
        return p;
    }

    static ExponentPolynomial variable(ContextPtr ctx, const std::string& name) {
        Exponent e(static_cast<std::size_t>(ctx->size()), 0);
        e[static_cast<std::size_t>(ctx->index(name))] = 1;
        return monomial(std::move(ctx), std::move(e), 1);
    }

    void check_same(const ExponentPolynomial& o) const {
        if (context == o.context) return;
        if (!context || !o.context || !(*context == *o.context))
            throw context_mismatch_error("polynomials from different variable contexts");
    }

    ExponentPolynomial& operator+=(const ExponentPolynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms) {
            auto it = terms.find(e);
            if (it == terms.end()) {
                terms.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) terms.erase(it);
            }
        }
        return *this;
    }

    ExponentPolynomial& operator-=(const ExponentPolynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms) {
            auto it = terms.find(e);
            if (it == terms.end()) {
                terms.emplace(e, -c);
            } else {
                it->second -= c;
                if (it->second == 0) terms.erase(it);
            }
        }
        return *this;
    }

    friend ExponentPolynomial operator+(ExponentPolynomial a, const ExponentPolynomial& b) { return a += b; }
    friend ExponentPolynomial operator-(ExponentPolynomial a, const ExponentPolynomial& b) { return a -= b; }

    friend ExponentPolynomial operator*(const ExponentPolynomial& a, const ExponentPolynomial& b) {
        a.check_same(b);
        ExponentPolynomial out(a.context ? a.context : b.context);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                Exponent e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                auto it = out.terms.find(e);
                if (it == out.terms.end()) {
                    out.terms.emplace(std::move(e), ca * cb);
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) out.terms.erase(it);
                }
            }
        return out;
    }

    ExponentPolynomial& operator*=(const ExponentPolynomial& o) { return *this = *this * o; }

    ExponentPolynomial operator-() const {
        ExponentPolynomial out(context);
        for (const auto& [e, c] : terms) out.terms.emplace(e, -c);
        return out;
    }

    friend ExponentPolynomial operator*(const Int& c, const ExponentPolynomial& p) {
        ExponentPolynomial out(p.context);
        if (c == 0) return out;
        for (const auto& [e, k] : p.terms) out.terms.emplace(e, c * k);
        return out;
    }

    bool operator==(const ExponentPolynomial& o) const {
        check_same(o);
        return terms == o.terms;
    }

    // Leading term under the context's lex order.
    const std::pair<const Exponent, Int>& leading_term() const {
        if (terms.empty()) throw error("zero polynomial has no leading term");
        return *terms.begin();
    }

    Int evaluate(const std::map<std::string, Int>& point) const {
        std::vector<Int> values;
        values.reserve(static_cast<std::size_t>(context->size()));
        for (const auto& name : context->names) {
            auto it = point.find(name);
            if (it == point.end()) throw evaluation_error("evaluation point missing variable " + name);
            values.push_back(it->second);
        }
        Int acc = 0;
        for (const auto& [e, c] : terms) {
            Int term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term *= values[i];
            acc += term;
        }
        return acc;
    }

    std::string display() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms) {
            Int a = c;
            if (!first) {
                os << (a > 0 ? " + " : " - ");
                if (a < 0) a = -a;
            } else if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += context->names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                os << to_string(a);
            } else {
                if (a != 1) os << to_string(a) << "*";
                os << mono;
            }
        }
        return os.str();
    }
};

using Poly = ExponentPolynomial;

// Determinant of a square polynomial matrix by Laplace expansion along the
// first remaining column, skipping zero entries.  Matrix sizes here are at
// most n <= 8, and the upper-triangular zero pattern prunes most branches.
inline Poly poly_det(const std::vector<std::vector<Poly>>& mat) {
    const std::size_t k = mat.size();
    for (const auto& row : mat)
        if (row.size() != k) throw invalid_minor_error("determinant of a non-square matrix");
    if (k == 0) throw invalid_minor_error("determinant of an empty matrix");
    ContextPtr ctx = mat[0][0].context;
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    std::function<Poly(std::vector<std::size_t>&, std::size_t)> rec = [&](std::vector<std::size_t>& rs,
                                                                          std::size_t col) -> Poly {
        if (rs.size() == 1) return mat[rs[0]][col];
        Poly acc = Poly::zero(ctx);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const Poly& entry = mat[rs[i]][col];
            if (entry.is_zero()) continue;
            std::vector<std::size_t> rest;
            rest.reserve(rs.size() - 1);
            for (std::size_t j = 0; j < rs.size(); ++j)
                if (j != i) rest.push_back(rs[j]);
            Poly sub = rec(rest, col + 1);
            if (i % 2 == 0)
                acc += entry * sub;
            else
                acc -= entry * sub;
        }
        return acc;
    };
    return rec(rows, 0);
}

} // namespace bslab
