#pragma once

// Exact arithmetic primitives shared across the library: arbitrary-precision
// integers and rationals, binomial coefficients, dense univariate polynomials
// with rational coefficients, and exact Newton interpolation on the integer
// sample points 0, 1, 2, ...
//
// Everything here is deterministic and exact; no floating point is used
// anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bslab/errors.hpp"

namespace bslab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(v);
    if (boost::multiprecision::denominator(v) != 1)
        os << "/" << boost::multiprecision::denominator(v);
    return os.str();
}

// Dense univariate polynomial with rational coefficients, ascending order.
// coeffs.back() is nonzero unless the polynomial is zero (empty coeffs).
struct RatPoly {
    std::vector<Rat> coeffs;

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool operator==(const RatPoly& o) const { return coeffs == o.coeffs; }

    // Degree-descending display, e.g. "5/2*d^3 + 11/2*d^2 + 4*d + 1".
    std::string display(const std::string& var) const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long k = degree(); k >= 0; --k) {
            Rat c = coeffs[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (!first) {
                os << (c > 0 ? " + " : " - ");
                if (c < 0) c = -c;
            } else if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
            const bool unit = (c == 1 && k > 0);
            if (!unit) os << to_string(c);
            if (k > 0) {
                if (!unit) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }
};

// Minimal-degree exact interpolation of values at x = 0..values.size()-1
// via Newton forward differences. Throws non_polynomial_growth_error when
// the values cannot be matched (never happens for genuinely polynomial
// sequences; reachable only through the check below).
inline RatPoly interpolate_at_naturals(const std::vector<Int>& values) {
    if (values.empty()) throw non_polynomial_growth_error("no sample values to interpolate");
    // Forward difference table: diffs[j] = Delta^j values[0].
    std::vector<std::vector<Int>> table;
    table.push_back(values);
    while (table.back().size() > 1) {
        const auto& prev = table.back();
        std::vector<Int> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
        table.push_back(std::move(next));
    }
    // p(x) = sum_j Delta^j v_0 * C(x, j); expand C(x, j) iteratively.
    RatPoly result;
    std::vector<Rat> basis{1}; // C(x, 0)
    for (std::size_t j = 0; j < table.size(); ++j) {
        const Int& d = table[j][0];
        if (d != 0) {
            if (result.coeffs.size() < basis.size()) result.coeffs.resize(basis.size(), 0);
            for (std::size_t i = 0; i < basis.size(); ++i) result.coeffs[i] += Rat(d) * basis[i];
        }
        // basis *= (x - j) / (j + 1)
        std::vector<Rat> next(basis.size() + 1, 0);
        const Rat jj = static_cast<long>(j);
        const Rat inv = Rat(1, static_cast<long>(j) + 1);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i] * inv;
            next[i] -= basis[i] * jj * inv;
        }
        basis = std::move(next);
    }
    result.trim();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (result.eval(static_cast<long>(i)) != Rat(values[i]))
            throw non_polynomial_growth_error("interpolation failed to reproduce its samples");
    }
    return result;
}

// Interpolate through values[0..values.size()-2] and require the final value
// to lie on the same polynomial (held-out consistency check).
inline RatPoly interpolate_with_holdout(const std::vector<Int>& values) {
    if (values.size() < 2)
        throw non_polynomial_growth_error("need at least two sample values for a held-out check");
    std::vector<Int> fit(values.begin(), values.end() - 1);
    RatPoly p = interpolate_at_naturals(fit);
    const long held = static_cast<long>(values.size()) - 1;
    if (p.eval(held) != Rat(values.back()))
        throw non_polynomial_growth_error(
            "held-out sample at degree " + std::to_string(held) + " does not match the interpolant");
    return p;
}

} // namespace bslab
