#pragma once

// JSON serialization for every public result type, using ordered objects so
// that identical requests produce byte-identical documents.  Integer values
// that may exceed machine range (dimensions, ranks, coefficients) are
// serialized as decimal strings.  Tableau documents round-trip: the schema
// emitted by json_of(Tableau) is the schema tableau_from_json accepts.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bslab/degeneration3.hpp"
#include "bslab/errors.hpp"
#include "bslab/lattice.hpp"
#include "bslab/numeric.hpp"
#include "bslab/polynomial.hpp"
#include "bslab/section_ring.hpp"
#include "bslab/shape.hpp"
#include "bslab/tableau.hpp"
#include "bslab/word.hpp"

namespace bslab {

using json = nlohmann::ordered_json;

inline json json_of(const Word& w) {
    return json{{"n", w.n}, {"letters", w.letters}};
}

inline json json_of(const ColumnSetList& cs) {
    return json{{"n", cs.n}, {"sets", cs.sets}};
}

inline json json_of(const RatPoly& p, const std::string& var) {
    json coeffs = json::array();
    for (const Rat& c : p.coeffs) coeffs.push_back(to_string(c));
    return json{{"variable", var}, {"coefficients", coeffs}, {"display", p.display(var)}};
}

inline json json_of(const Shape& s) {
    json rows = json::array();
    for (const ShapeRow& r : s.rows) {
        json row{{"lo", r.columns.lo}, {"hi", r.columns.hi}};
        if (r.source > 0) {
            row["block"] = r.block;
            row["source"] = r.source;
            row["repeat"] = r.repeat;
        }
        rows.push_back(std::move(row));
    }
    json out{{"n", s.n}};
    if (s.canonical) {
        out["word"] = s.word.letters;
        out["m"] = s.m;
    }
    out["rows"] = std::move(rows);
    if (s.canonical) {
        out["blocks"] = s.blocks();
        out["flag_weight"] = s.flag_weight();
    }
    return out;
}

inline json json_of(const Tableau& t) {
    const Shape& s = *t.shape;
    json out{{"n", s.n}};
    if (s.canonical) {
        out["word"] = s.word.letters;
        out["m"] = s.m;
    } else {
        json intervals = json::array();
        for (const ShapeRow& r : s.rows) intervals.push_back(json::array({r.columns.lo, r.columns.hi}));
        out["intervals"] = std::move(intervals);
    }
    json rows = json::array();
    for (const RowFilling& r : t.rows) {
        json cells = json::array();
        for (int c = r.columns.lo; c <= r.columns.hi; ++c)
            cells.push_back(json{{"column", c}, {"entry", r.entry_at(c)}});
        rows.push_back(std::move(cells));
    }
    out["rows"] = std::move(rows);
    return out;
}

// Accepts {"n", either "word"+"m", "m" alone (canonical word), or
// "intervals" for ad hoc shapes, and the filling as either "rows" (arrays
// of {column, entry} cells, the emitted form) or "entries" (plain arrays of
// entries per row)}.  Rows are listed top to bottom, cells left to right.
inline Tableau tableau_from_json(const json& j) {
    if (!j.is_object()) throw shape_error("tableau document must be a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw shape_error("tableau document needs an integer field n");
    const int n = j.at("n").get<int>();

    Shape shape;
    if (j.contains("intervals")) {
        std::vector<ColumnInterval> ivs;
        for (const auto& iv : j.at("intervals")) {
            if (!iv.is_array() || iv.size() != 2)
                throw shape_error("each interval must be a [lo, hi] pair");
            ivs.push_back(ColumnInterval{iv.at(0).get<int>(), iv.at(1).get<int>()});
        }
        shape = shape_from_rows(n, ivs);
    } else if (j.contains("m")) {
        const std::vector<int> m = j.at("m").get<std::vector<int>>();
        if (j.contains("word")) {
            const Word w(n, j.at("word").get<std::vector<int>>());
            shape = build_shape(w, m);
        } else {
            shape = shape_of_multiplicity(n, m);
        }
    } else {
        throw shape_error("tableau document needs either m (with optional word) or intervals");
    }

    std::vector<std::vector<int>> entries;
    if (j.contains("rows")) {
        if (static_cast<int>(j.at("rows").size()) != shape.row_count())
            throw shape_error("row count does not match the shape");
        for (std::size_t i = 0; i < j.at("rows").size(); ++i) {
            const auto& cells = j.at("rows").at(i);
            const ColumnInterval iv = shape.rows[i].columns;
            if (static_cast<int>(cells.size()) != iv.size())
                throw shape_error("row " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                                  " cells for " + std::to_string(iv.size()) + " columns");
            std::vector<int> row(static_cast<std::size_t>(iv.size()), 0);
            for (const auto& cell : cells) {
                if (!cell.is_object() || !cell.contains("column") || !cell.contains("entry"))
                    throw shape_error("each cell must be a {column, entry} object");
                const int c = cell.at("column").get<int>();
                if (!iv.contains(c)) throw shape_error("cell column " + std::to_string(c) + " is outside its row");
                row[static_cast<std::size_t>(c - iv.lo)] = cell.at("entry").get<int>();
            }
            entries.push_back(std::move(row));
        }
    } else if (j.contains("entries")) {
        entries = j.at("entries").get<std::vector<std::vector<int>>>();
    } else {
        throw shape_error("tableau document needs a rows or entries array");
    }
    return make_tableau(shape, entries);
}

inline json json_of(const Poly& p) {
    json vars = json::array();
    for (const auto& name : p.context->names) vars.push_back(name);
    json terms = json::array();
    for (const auto& [e, c] : p.terms) terms.push_back(json{{"exponents", e}, {"coeff", to_string(c)}});
    return json{{"variables", std::move(vars)}, {"terms", std::move(terms)}, {"display", p.display()}};
}

inline json json_of(const BasisReport& r) {
    json witnesses = json::array();
    for (const Tableau& t : r.witness_failures) witnesses.push_back(json_of(t));
    return json{{"shape", json_of(r.shape)},
                {"straight_count", to_string(r.straight_count)},
                {"symbolic_rank", to_string(r.symbolic_rank)},
                {"span_verified", r.span_verified},
                {"precheck_certified", r.precheck_certified},
                {"witness_failures", std::move(witnesses)}};
}

inline json json_of(const GradedDimensionTable& t) {
    json entries = json::array();
    for (const Int& v : t.entries) entries.push_back(to_string(v));
    return json{{"shape", json_of(t.shape)},
                {"entries", std::move(entries)},
                {"interpolated", json_of(t.interpolated, "d")}};
}

inline json json_of(const StraightenResult& r) {
    json terms = json::array();
    for (const auto& [t, c] : r.coefficients)
        terms.push_back(json{{"coefficient", to_string(c)}, {"tableau", json_of(t)}});
    return json{{"terms", std::move(terms)}};
}

inline json json_of(const LatticePoint& p) {
    json rows = json::array();
    for (int k = 1; k <= p.size; ++k) {
        json row = json::array();
        for (int j = p.size; j >= 1; --j) row.push_back(p.at(k, j));
        rows.push_back(std::move(row));
    }
    return json{{"size", p.size}, {"rows", std::move(rows)}};
}

inline json json_of(const GTPattern& g) {
    return json{{"rows", g.rows}};
}

inline json json_of(const CheckResult& c) {
    json out{{"name", c.name}};
    if (c.degree >= 0) out["degree"] = c.degree;
    out["expected"] = c.expected;
    out["computed"] = c.computed;
    out["pass"] = c.pass;
    return out;
}

inline json json_of(const Example3Report& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back(json_of(c));
    return json{{"dmax", r.dmax}, {"all_pass", r.all_pass}, {"checks", std::move(checks)}};
}

inline json json_of(const FiberTable& t) {
    json out{{"family", t.family}, {"tau", to_string(t.tau)}, {"entries", t.entries}};
    out["series_numerator"] = t.series_numerator ? json_of(*t.series_numerator, "t") : json(nullptr);
    return out;
}

inline json json_of(const ComponentCounts& c) {
    return json{{"D3", c.D3}, {"G", c.G}, {"K2", c.K2}};
}

inline json json_of(const HullStats& h) {
    return json{{"points", h.points}, {"hull_dim", h.hull_dim}, {"vertices", h.vertices}, {"facets", h.facets}};
}

} // namespace bslab
