#pragma once

// Bases of the span of tableau polynomials on a fixed shape.
//
// The straight tableaux of a shape have pairwise distinct leading exponents
// under the diagonal order, which makes them linearly independent and makes
// subduction (repeated cancellation of the leading term against the unique
// straight tableau carrying it) an exact decision procedure for span
// membership.  verify_basis still computes the symbolic rank of the
// expanded coefficient matrix independently; when leading exponents fail to
// be distinct (never observed) the span check falls back to augmented-rank
// comparisons, so the report never rests on the injectivity assumption it
// is itself verifying.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bslab/errors.hpp"
#include "bslab/linalg.hpp"
#include "bslab/minors.hpp"
#include "bslab/numeric.hpp"
#include "bslab/shape.hpp"
#include "bslab/tableau.hpp"

namespace bslab {

inline Int dim_sections(const Shape& shape) { return Int(count_fillings(shape, FillKind::Straight)); }

inline std::vector<int> scale_multiplicity(const std::vector<int>& m, int d) {
    std::vector<int> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] * d;
    return out;
}

namespace detail {
// Column ids over the union of monomial supports, assigned in lex-descending
// order of first appearance; any fixed assignment works for rank purposes.
struct MonomialIndex {
    std::map<Exponent, int, LexGreater> ids;

    int id(const Exponent& e) {
        auto it = ids.find(e);
        if (it != ids.end()) return it->second;
        const int next = static_cast<int>(ids.size());
        ids.emplace(e, next);
        return next;
    }
};

inline SparseRow poly_row(const Poly& p, MonomialIndex& index) {
    SparseRow row;
    for (const auto& [e, c] : p.terms) row.emplace_back(index.id(e), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}
} // namespace detail

struct BasisOptions {
    bool precheck = false;   // exact evaluation pre-check may certify the rank
    std::uint64_t seed = 0xb51ab; // stream for the pre-check sample points
};

struct BasisReport {
    Shape shape;
    Int straight_count = 0;
    Int symbolic_rank = 0;
    bool span_verified = false;
    std::vector<Tableau> witness_failures; // row-standard tableaux outside the span
    bool precheck_certified = false;       // rank obtained from the evaluation route
};

namespace detail {
// Exact certificate: the evaluation matrix is the coefficient matrix times
// the monomial-value matrix, so its rank is a lower bound; full rank
// certifies independence.
inline bool precheck_full_rank(const std::vector<Poly>& polys, const ContextPtr& ctx, std::uint64_t seed) {
    if (polys.empty()) return true;
    const std::size_t samples = polys.size() + 3;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-20, 20);
    std::vector<std::map<std::string, Int>> points;
    for (std::size_t s = 0; s < samples; ++s) {
        std::map<std::string, Int> pt;
        for (const auto& name : ctx->names) pt[name] = dist(rng);
        points.push_back(std::move(pt));
    }
    std::vector<SparseRow> rows;
    for (const auto& p : polys) {
        SparseRow row;
        for (std::size_t s = 0; s < samples; ++s) {
            Int v = p.evaluate(points[s]);
            if (v != 0) row.emplace_back(static_cast<int>(s), std::move(v));
        }
        rows.push_back(std::move(row));
    }
    return sparse_rank(std::move(rows)) == static_cast<int>(polys.size());
}

struct SubductionBasis {
    const std::vector<Tableau>* straights = nullptr;
    ContextPtr ctx;
    std::map<std::vector<int>, int> by_alpha; // alpha key -> index into straights
    std::vector<std::optional<Poly>> cache;
    bool alpha_injective = true;

    void build(const std::vector<Tableau>& s, ContextPtr c) {
        straights = &s;
        ctx = std::move(c);
        cache.assign(s.size(), std::nullopt);
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto key = leading_exponent(s[i]).key();
            if (!by_alpha.emplace(std::move(key), static_cast<int>(i)).second) alpha_injective = false;
        }
    }

    const Poly& poly_of(int i) {
        auto& slot = cache[static_cast<std::size_t>(i)];
        if (!slot) slot = tableau_poly((*straights)[static_cast<std::size_t>(i)], ctx);
        return *slot;
    }

    // Reduce f to zero against the basis; returns the coefficients or
    // nullopt (with f's remainder nonzero) when f is outside the span.
    std::optional<std::map<int, Int>> subduct(Poly f, int n) {
        std::map<int, Int> coeffs;
        while (!f.is_zero()) {
            const auto& [e, c] = f.leading_term();
            const auto key = alpha_of_exponent(e, ctx, n).key();
            auto it = by_alpha.find(key);
            if (it == by_alpha.end()) return std::nullopt;
            const Poly& g = poly_of(it->second);
            const Int& lead = g.leading_term().second; // +1 for straight tableaux
            if (c % lead != 0) return std::nullopt;
            const Int q = c / lead;
            f -= q * g;
            coeffs[it->second] += q;
        }
        return coeffs;
    }
};
} // namespace detail

inline BasisReport verify_basis(const Shape& shape, const BasisOptions& opts = {}) {
    const ContextPtr ctx = upper_triangular_context(shape.n);
    BasisReport report;
    report.shape = shape;

    const std::vector<Tableau> straights = enumerate_straight(shape);
    report.straight_count = static_cast<long>(straights.size());

    std::vector<Poly> polys;
    polys.reserve(straights.size());
    for (const auto& t : straights) polys.push_back(tableau_poly(t, ctx));

    if (opts.precheck && detail::precheck_full_rank(polys, ctx, opts.seed)) {
        report.symbolic_rank = report.straight_count;
        report.precheck_certified = true;
    } else {
        detail::MonomialIndex index;
        std::vector<SparseRow> rows;
        for (const auto& p : polys) rows.push_back(detail::poly_row(p, index));
        report.symbolic_rank = sparse_rank(std::move(rows));
    }

    detail::SubductionBasis basis;
    basis.build(straights, ctx);

    report.span_verified = true;
    if (basis.alpha_injective) {
        visit_fillings(shape, FillKind::RowStandard, [&](const std::vector<RowFilling>& placed) {
            Tableau t;
            t.shape = straights.empty() ? share(shape) : straights.front().shape;
            t.rows = placed;
            Poly f = tableau_poly(t, ctx);
            if (!basis.subduct(std::move(f), shape.n)) {
                report.span_verified = false;
                report.witness_failures.push_back(std::move(t));
            }
        });
    } else {
        // Fallback without the injectivity shortcut: augmented rank.
        detail::MonomialIndex index;
        std::vector<SparseRow> base_rows;
        for (const auto& p : polys) base_rows.push_back(detail::poly_row(p, index));
        const int base_rank = sparse_rank(base_rows);
        visit_fillings(shape, FillKind::RowStandard, [&](const std::vector<RowFilling>& placed) {
            Tableau t;
            t.shape = straights.empty() ? share(shape) : straights.front().shape;
            t.rows = placed;
            std::vector<SparseRow> rows = base_rows;
            rows.push_back(detail::poly_row(tableau_poly(t, ctx), index));
            if (sparse_rank(std::move(rows)) != base_rank) {
                report.span_verified = false;
                report.witness_failures.push_back(std::move(t));
            }
        });
    }
    return report;
}

struct StraightenResult {
    std::vector<std::pair<Tableau, Rat>> coefficients; // enumeration order, nonzero only
};

// Express a row-standard tableau in the straight basis of its shape and
// re-verify the expansion symbolically before returning it.
inline StraightenResult straighten(const Tableau& t) {
    const Shape& shape = *t.shape;
    const ContextPtr ctx = upper_triangular_context(shape.n);
    const std::vector<Tableau> straights = enumerate_straight(shape);

    detail::SubductionBasis basis;
    basis.build(straights, ctx);
    if (!basis.alpha_injective)
        throw basis_failure_error("straight leading exponents are not distinct on this shape");

    const Poly target = tableau_poly(t, ctx);
    auto coeffs = basis.subduct(target, shape.n);
    if (!coeffs) throw basis_failure_error("tableau polynomial is outside the straight span");

    Poly rebuilt = Poly::zero(ctx);
    for (const auto& [idx, c] : *coeffs) rebuilt += c * tableau_poly(straights[static_cast<std::size_t>(idx)], ctx);
    if (!(rebuilt == target)) throw basis_failure_error("straightening re-verification failed");

    StraightenResult out;
    for (const auto& [idx, c] : *coeffs)
        out.coefficients.emplace_back(straights[static_cast<std::size_t>(idx)], Rat(c));
    return out;
}

struct GradedDimensionTable {
    Shape shape;              // degree-1 shape (multiplicity m)
    std::vector<Int> entries; // entries[d] = dim at multiplicity d*m, d = 0..dmax
    RatPoly interpolated;     // fits entries 0..dmax-1; entry dmax is held out
};

inline GradedDimensionTable hilbert_table(const Shape& shape, int dmax) {
    shape.require_canonical("graded dimension table");
    if (dmax < 1) throw shape_error("dmax must be at least 1");
    GradedDimensionTable table;
    table.shape = shape;
    for (int d = 0; d <= dmax; ++d)
        table.entries.push_back(dim_sections(shape_of_multiplicity(shape.n, scale_multiplicity(shape.m, d))));
    table.interpolated = interpolate_with_holdout(table.entries);
    return table;
}

} // namespace bslab
