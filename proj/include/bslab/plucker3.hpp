#pragma once

// Symbolic coordinates of the three-dimensional configuration model for
// GL_3: triples of 3x3 matrices (p1, p2, p3) running over the closures of
// three parabolic subgroups, with zero patterns
//
//     p1, p3:  a31 = a32 = 0   (rows 1-2 generic, (3,3) generic)
//     p2:      b21 = b31 = 0   (row 1 generic, columns 2-3 of rows 2-3).
//
// The eight coordinates are flag minors, with Laplace cofactor signs on the
// point coordinates so the incidence identities below are sign-free:
//
//     s_i  = (-1)^(i+1) [i : 1] of p1,           i = 1, 2
//     r_ij = [{i,j} : {1,2}] of p1*p2,           ij = 23, 13, 12
//     q_i  = (-1)^(i+1) [i : 1] of p1*p2*p3,     i = 1, 2, 3
//
// They satisfy the incidence identities
//
//     s1*r23 + s2*r13 = 0,
//     q1*r23 + q2*r13 + q3*r12 = 0,
//
// both of which expand to the zero polynomial in this context.

#include <string>
#include <vector>

#include "bslab/polynomial.hpp"

namespace bslab {

inline ContextPtr parabolic3_context() {
    std::vector<std::string> names;
    auto add = [&](char letter, std::initializer_list<std::pair<int, int>> cells) {
        for (auto [i, j] : cells)
            names.push_back(std::string(1, letter) + "_" + std::to_string(i) + "_" + std::to_string(j));
    };
    add('a', {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 3}});
    add('b', {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
    add('c', {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 3}});
    return std::make_shared<const VarContext>(std::move(names));
}

using PolyMatrix = std::vector<std::vector<Poly>>;

namespace detail {
inline PolyMatrix parabolic_matrix(const ContextPtr& ctx, char letter) {
    PolyMatrix m(3, std::vector<Poly>(3, Poly::zero(ctx)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const std::string name = std::string(1, letter) + "_" + std::to_string(i) + "_" + std::to_string(j);
            if (ctx->index_of.count(name)) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                Poly::variable(ctx, name);
        }
    return m;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size();
    PolyMatrix out(n, std::vector<Poly>(n, Poly::zero(a[0][0].context)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

inline Poly matrix_minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    PolyMatrix sub;
    for (int r : rows) {
        std::vector<Poly> row;
        for (int c : cols) row.push_back(m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]);
        sub.push_back(std::move(row));
    }
    return poly_det(sub);
}
} // namespace detail

struct PluckerCoords3 {
    ContextPtr context;
    Poly s1, s2;
    Poly r23, r13, r12;
    Poly q1, q2, q3;
};

inline PluckerCoords3 plucker_coords_3d() {
    ContextPtr ctx = parabolic3_context();
    const PolyMatrix p1 = detail::parabolic_matrix(ctx, 'a');
    const PolyMatrix p2 = detail::parabolic_matrix(ctx, 'b');
    const PolyMatrix p3 = detail::parabolic_matrix(ctx, 'c');
    const PolyMatrix p12 = detail::mat_mul(p1, p2);
    const PolyMatrix p123 = detail::mat_mul(p12, p3);

    PluckerCoords3 out;
    out.context = ctx;
    out.s1 = detail::matrix_minor(p1, {1}, {1});
    out.s2 = -detail::matrix_minor(p1, {2}, {1});
    out.r23 = detail::matrix_minor(p12, {2, 3}, {1, 2});
    out.r13 = detail::matrix_minor(p12, {1, 3}, {1, 2});
    out.r12 = detail::matrix_minor(p12, {1, 2}, {1, 2});
    out.q1 = detail::matrix_minor(p123, {1}, {1});
    out.q2 = -detail::matrix_minor(p123, {2}, {1});
    out.q3 = detail::matrix_minor(p123, {3}, {1});
    return out;
}

// The incidence identity between the line coordinates and the plane
// coordinates; identically zero.
inline Poly incidence_relation_sr(const PluckerCoords3& p) { return p.s1 * p.r23 + p.s2 * p.r13; }

// The incidence identity between the second point and the plane; zero.
inline Poly incidence_relation_qr(const PluckerCoords3& p) {
    return p.q1 * p.r23 + p.q2 * p.r13 + p.q3 * p.r12;
}

} // namespace bslab
