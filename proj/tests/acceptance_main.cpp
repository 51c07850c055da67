// Acceptance gate: the seven headline checks of the library, each timed and
// reported as a single PASS or FAIL line.  Every comparison is exact; a FAIL
// line carries the first mismatch.  Exit status 0 only if all seven pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bslab/bslab.hpp"

using namespace bslab;

namespace {

// Sets `problem` and bails out of the criterion body on the first failure.
#define EXPECT(cond, message)     \
    do {                          \
        if (!(cond)) {            \
            problem = (message);  \
            return;               \
        }                         \
    } while (0)

struct Gate {
    int failures = 0;

    void criterion(int number, const char* description, const std::function<void(std::string&)>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            body(problem);
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty()) {
            std::printf("PASS criterion-%d %s (%.2fs)\n", number, description, secs);
        } else {
            std::printf("FAIL criterion-%d %s (%.2fs): %s\n", number, description, secs, problem.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

// Advances a k-subset of {1..n} in lexicographic order; false after the last.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

int main() {
    Gate gate;

    gate.criterion(1, "graded straight-tableau counts and interpolated dimension polynomial",
                   [](std::string& problem) {
        const Shape unit = shape_of_multiplicity(3, {1, 1, 1});
        const GradedDimensionTable table = hilbert_table(unit, 5);
        const long long expected[] = {1, 13, 51, 130, 265, 471};
        EXPECT(table.entries.size() == 6, "expected six graded entries");
        for (int d = 0; d <= 5; ++d)
            EXPECT(table.entries[static_cast<std::size_t>(d)] == Int(expected[d]),
                   "count at d=" + std::to_string(d) + " is " +
                       to_string(table.entries[static_cast<std::size_t>(d)]));
        EXPECT(table.interpolated.display("d") == "5/2*d^3 + 11/2*d^2 + 4*d + 1",
               "polynomial is " + table.interpolated.display("d"));
        for (int d = 0; d <= 5; ++d)
            EXPECT(table.interpolated.eval(Rat(d)) == Rat(Int(5 * d * d * d + 11 * d * d + 8 * d + 2), Int(2)),
                   "closed form mismatch at d=" + std::to_string(d));
    });

    gate.criterion(2, "symbolic basis rank, span, and distinct leading exponents at degrees 1 and 2",
                   [](std::string& problem) {
        const Shape unit = shape_of_multiplicity(3, {1, 1, 1});
        const long long expected[] = {13, 51};
        for (int d = 1; d <= 2; ++d) {
            const Shape scaled = shape_of_multiplicity(3, scale_multiplicity({1, 1, 1}, d));
            const BasisReport report = verify_basis(scaled);
            EXPECT(report.straight_count == Int(expected[d - 1]),
                   "straight count at d=" + std::to_string(d) + " is " + to_string(report.straight_count));
            EXPECT(report.symbolic_rank == report.straight_count,
                   "symbolic rank at d=" + std::to_string(d) + " is " + to_string(report.symbolic_rank));
            EXPECT(report.span_verified, "span not verified at d=" + std::to_string(d));
            EXPECT(report.witness_failures.empty(), "witness failures at d=" + std::to_string(d));
            const std::set<AlphaMatrix> leading = initial_exponents(unit, d);
            EXPECT(static_cast<long long>(leading.size()) == expected[d - 1],
                   "distinct leading exponents at d=" + std::to_string(d) + ": " +
                       std::to_string(leading.size()));
        }
    });

    gate.criterion(3, "flat family: generic fiber dimensions equal both special-fiber congruence counts",
                   [](std::string& problem) {
        const int expected[] = {1, 13, 51, 130, 265};
        const TriGradedPresentation flat = degeneration_family(1, Rat(1));
        const TriGradedPresentation fam1 = degeneration_family(1, Rat(0));
        const TriGradedPresentation fam2 = degeneration_family(2, Rat(0));
        for (int d = 0; d <= 4; ++d) {
            const int fiber = fiber_dimension(flat, d);
            EXPECT(fiber == expected[d],
                   "fiber dimension at d=" + std::to_string(d) + " is " + std::to_string(fiber));
            const int c1 = congruence_count(fam1, d);
            EXPECT(c1 == expected[d],
                   "family-1 congruence count at d=" + std::to_string(d) + " is " + std::to_string(c1));
            const int c2 = congruence_count(fam2, d);
            EXPECT(c2 == expected[d],
                   "family-2 congruence count at d=" + std::to_string(d) + " is " + std::to_string(c2));
        }
    });

    gate.criterion(4, "component counts, inclusion-exclusion closed forms, and series numerators",
                   [](std::string& problem) {
        std::vector<Int> d3_values, g_values, fiber2_values;
        const TriGradedPresentation fam2 = degeneration_family(2, Rat(0));
        for (int d = 0; d <= 4; ++d) {
            const ComponentCounts c = component_counts(d);
            EXPECT(Int(c.D3) == d3_closed_form(d),
                   "D3 count at d=" + std::to_string(d) + " is " + std::to_string(c.D3));
            EXPECT(Int(c.G) == g_closed_form(d),
                   "G count at d=" + std::to_string(d) + " is " + std::to_string(c.G));
            EXPECT(Int(c.K2) == k2_closed_form(d),
                   "K2 count at d=" + std::to_string(d) + " is " + std::to_string(c.K2));
            EXPECT(Int(c.D3) + Int(c.G) - hilbert_value_3d(d) == k2_closed_form(d),
                   "inclusion-exclusion mismatch at d=" + std::to_string(d));
            d3_values.push_back(Int(c.D3));
            g_values.push_back(Int(c.G));
            fiber2_values.push_back(Int(congruence_count(fam2, d)));
        }
        const std::string d3_series = ehrhart_series_numerator(d3_values, 4).display("t");
        EXPECT(d3_series == "3*t^2 + 8*t + 1", "D3 series numerator is " + d3_series);
        const std::string g_series = ehrhart_series_numerator(g_values, 4).display("t");
        EXPECT(g_series == "2*t + 1", "G series numerator is " + g_series);
        const std::string fiber2_series = ehrhart_series_numerator(fiber2_values, 4).display("t");
        EXPECT(fiber2_series == "5*t^2 + 9*t + 1", "family-2 fiber series numerator is " + fiber2_series);
    });

    gate.criterion(5, "triangular patterns of the block factors, their displayed sum, and additivity",
                   [](std::string& problem) {
        const Tableau part1 = make_tableau(shape_of_multiplicity(2, {1}), {{1}});
        const Tableau part2 = make_tableau(shape_of_multiplicity(3, {0, 2, 1}), {{2}, {1, 3}, {2, 3}});
        const Tableau part3 = make_tableau(shape_of_multiplicity(4, {0, 0, 0, 1, 1, 3}),
                                           {{1}, {1}, {2}, {1, 2}, {1, 3, 4}});
        const GTPattern g1 = gt_pattern(point_of_tableau(part1));
        const GTPattern g2 = gt_pattern(point_of_tableau(part2));
        const GTPattern g3 = gt_pattern(point_of_tableau(part3));
        EXPECT(g1.rows == (std::vector<std::vector<int>>{{1, 0}, {0}}), "first pattern mismatch");
        EXPECT(g2.rows == (std::vector<std::vector<int>>{{3, 2, 0}, {3, 1}, {2}}), "second pattern mismatch");
        EXPECT(g3.rows == (std::vector<std::vector<int>>{{5, 2, 1, 0}, {3, 1, 0}, {1, 1}, {1}}),
               "third pattern mismatch");

        const LatticePoint sum = sum_points(
            {point_of_tableau(part1), point_of_tableau(part2), point_of_tableau(part3)}, 4);
        const GTPattern gsum = gt_pattern(sum);
        EXPECT(gsum.rows == (std::vector<std::vector<int>>{{5, 5, 4, 0}, {3, 4, 1}, {1, 3}, {1}}),
               "pattern sum mismatch");
        EXPECT(render_gt(gsum) == "5   5   4   0\n  3   4   1\n    1   3\n      1\n",
               "rendered sum mismatch:\n" + render_gt(gsum));

        const Tableau product =
            make_tableau(shape_of_multiplicity(4, {1, 2, 1, 1, 1, 3}),
                         {{1}, {1}, {2}, {1, 2}, {1, 3, 4}, {2}, {1, 3}, {2, 3}, {1}});
        EXPECT(point_of_tableau(product) == sum, "product point differs from the sum of its parts");

        for (int m1 = 0; m1 <= 2; ++m1)
            for (int m2 = 0; m2 <= 2; ++m2)
                for (int m3 = 0; m3 <= 2; ++m3) {
                    const Shape shape = shape_of_multiplicity(3, {m1, m2, m3});
                    for (const Tableau& t : enumerate_row_standard(shape)) {
                        std::vector<LatticePoint> parts;
                        for (const Tableau& part : block_factor(t))
                            parts.push_back(point_of_tableau(part));
                        EXPECT(point_of_tableau(t) == sum_points(parts, 3),
                               "additivity failed on shape (" + std::to_string(m1) + "," +
                                   std::to_string(m2) + "," + std::to_string(m3) + ")");
                    }
                }
    });

    gate.criterion(6, "closed-form incidence coordinates and vanishing relations",
                   [](std::string& problem) {
        const PluckerCoords3 p = plucker_coords_3d();
        EXPECT(p.r23.display() == "a_2_1*a_3_3*b_1_1*b_3_2", "r23 is " + p.r23.display());
        EXPECT(p.q3.display() == "a_3_3*b_3_2*c_2_1", "q3 is " + p.q3.display());
        const Poly sr = incidence_relation_sr(p);
        EXPECT(sr.is_zero(), "line-plane relation is " + sr.display());
        const Poly qr = incidence_relation_qr(p);
        EXPECT(qr.is_zero(), "point-plane relation is " + qr.display());
    });

    gate.criterion(7, "property suites: leading terms, interval column sets, contra, straightening",
                   [](std::string& problem) {
        // Every flagged minor leads with its diagonal monomial, coefficient 1;
        // every non-flagged one vanishes identically.
        for (int n = 2; n <= 6; ++n) {
            const ContextPtr ctx = upper_triangular_context(n);
            for (int k = 1; k <= std::min(4, n); ++k) {
                std::vector<int> rows(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
                do {
                    std::vector<int> cols(static_cast<std::size_t>(k));
                    for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
                    do {
                        bool flagged = true;
                        for (int i = 0; i < k; ++i)
                            flagged = flagged && rows[static_cast<std::size_t>(i)] <= cols[static_cast<std::size_t>(i)];
                        const Poly minor = minor_poly(rows, cols, n);
                        if (!flagged) {
                            EXPECT(minor.is_zero(), "non-flagged minor did not vanish (n=" + std::to_string(n) + ")");
                            continue;
                        }
                        Poly diag = Poly::constant(ctx, 1);
                        for (int i = 0; i < k; ++i)
                            diag = diag * ut_entry(ctx, rows[static_cast<std::size_t>(i)],
                                                   cols[static_cast<std::size_t>(i)]);
                        EXPECT(!minor.is_zero(), "flagged minor vanished (n=" + std::to_string(n) + ")");
                        EXPECT(minor.leading_term().first == diag.leading_term().first &&
                                   minor.leading_term().second == 1,
                               "leading term is not the diagonal monomial (n=" + std::to_string(n) + ")");
                    } while (next_combination(cols, n));
                } while (next_combination(rows, n));
            }
        }

        // Column sets of the canonical word are the closed-form intervals.
        for (int n = 2; n <= 8; ++n) {
            const ColumnSetList cs = column_sets(longest_word(n));
            EXPECT(is_row_convex(cs), "column sets not row-convex at n=" + std::to_string(n));
            for (int j = 1; j <= n - 1; ++j)
                for (int u = 1; u <= j; ++u) {
                    std::vector<int> expected;
                    for (int v = u + 1; v <= j + 1; ++v) expected.push_back(v);
                    EXPECT(cs.sets[static_cast<std::size_t>(block_offset(j) + u - 1)] == expected,
                           "column set closed form fails at n=" + std::to_string(n) +
                               " position " + std::to_string(block_offset(j) + u));
                }
        }

        // On single-block shapes, straight and contra coincide filling by filling.
        for (int n = 2; n <= 4; ++n) {
            const int l = n * (n - 1) / 2;
            for (int j = 1; j <= n - 1; ++j) {
                std::vector<int> odo(static_cast<std::size_t>(j), 0);
                while (true) {
                    std::vector<int> m(static_cast<std::size_t>(l), 0);
                    for (int u = 1; u <= j; ++u)
                        m[static_cast<std::size_t>(block_offset(j) + u - 1)] = odo[static_cast<std::size_t>(u - 1)];
                    const Shape shape = shape_of_multiplicity(n, m);
                    for (const Tableau& t : enumerate_row_standard(shape))
                        EXPECT(is_straight(t) == is_contra(t),
                               "straight/contra disagree on a block shape (n=" + std::to_string(n) + ")");
                    std::size_t pos = 0;
                    while (pos < odo.size() && odo[pos] == 2) odo[pos++] = 0;
                    if (pos == odo.size()) break;
                    ++odo[pos];
                }
            }
        }

        // Straightening re-verifies symbolically: parts straight, integer
        // coefficients, and the expansion reproduces the original product.
        const Shape unit = shape_of_multiplicity(3, {1, 1, 1});
        const ContextPtr ctx = upper_triangular_context(3);
        for (const Tableau& t : enumerate_row_standard(unit)) {
            const StraightenResult result = straighten(t);
            Poly sum = Poly::zero(ctx);
            for (const auto& [s, c] : result.coefficients) {
                EXPECT(is_straight(s), "straightening emitted a non-straight term");
                EXPECT(boost::multiprecision::denominator(c) == 1,
                       "straightening emitted a non-integer coefficient");
                sum += boost::multiprecision::numerator(c) * tableau_poly(s, ctx);
            }
            EXPECT(sum == tableau_poly(t, ctx), "straightened expansion differs from the product");
        }
    });

    if (gate.failures == 0) {
        std::printf("all 7 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", gate.failures);
    return 1;
}
