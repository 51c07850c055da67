// Command-line surface over the library: column sets, tableau enumeration,
// section-space dimensions and bases, straightening, lattice points, and the
// 3-dimensional degeneration example.  Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bslab/bslab.hpp"

namespace {

std::vector<int> parse_csv_ints(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw bslab::error(what + " must be a comma-separated integer list, got '" + text + "'");
        }
    }
    if (out.empty()) throw bslab::error(what + " must not be empty");
    return out;
}

struct CommonOpts {
    std::string format = "ascii";
    std::string output;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--format", opts.format, "output format: ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}))
        ->capture_default_str();
    sub->add_option("--output", opts.output, "write output to this file instead of stdout");
    sub->add_option("--seed", opts.seed, "seed for the evaluation pre-check (default: BSLAB_SEED or built-in)")
        ->each([&opts](const std::string&) { opts.seed_given = true; });
}

std::uint64_t effective_seed(const CommonOpts& opts) {
    if (opts.seed_given) return opts.seed;
    if (const char* env = std::getenv("BSLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw bslab::error(std::string("BSLAB_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    return bslab::BasisOptions{}.seed;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(opts.output, std::ios::binary);
    if (!os) throw bslab::error("cannot open output file " + opts.output);
    os << text;
}

std::string dump(const bslab::json& j) { return j.dump(2) + "\n"; }

bslab::Word make_word(int n, const std::string& word_csv) {
    if (word_csv.empty()) return bslab::longest_word(n);
    return bslab::Word(n, parse_csv_ints(word_csv, "--word"));
}

bslab::Shape make_shape(int n, const std::string& word_csv, const std::string& m_csv, int scale) {
    const bslab::Word w = make_word(n, word_csv);
    std::vector<int> m = parse_csv_ints(m_csv, "--m");
    for (int& v : m) v *= scale;
    return bslab::build_shape(w, m);
}

std::string set_to_string(const std::vector<int>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(set[i]);
    }
    return out + "}";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tableau combinatorics, section-space bases, and the 3-dimensional degeneration example"};
    app.require_subcommand(1);

    int n = 0, d = 1, dmax = 0;
    std::string word_csv, m_csv, tableau_json;
    bool want_straight = false, want_row_standard = false, precheck = false;

    CommonOpts common;

    CLI::App* cmd_column_sets = app.add_subcommand("column-sets", "column sets of a word");
    cmd_column_sets->add_option("--n", n, "rank")->required();
    cmd_column_sets->add_option("--word", word_csv, "word letters, comma-separated (default: canonical longest word)");
    add_common(cmd_column_sets, common);

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "enumerate tableaux of a shape");
    cmd_enumerate->add_option("--n", n, "rank")->required();
    cmd_enumerate->add_option("--m", m_csv, "multiplicities, comma-separated")->required();
    cmd_enumerate->add_option("--word", word_csv, "word letters (default: canonical longest word)");
    CLI::Option* opt_straight = cmd_enumerate->add_flag("--straight", want_straight, "only straight tableaux");
    cmd_enumerate->add_flag("--row-standard", want_row_standard, "all row-standard tableaux (default)")
        ->excludes(opt_straight);
    add_common(cmd_enumerate, common);

    CLI::App* cmd_dim = app.add_subcommand("dim", "dimension of the section space of a shape");
    cmd_dim->add_option("--n", n, "rank")->required();
    cmd_dim->add_option("--m", m_csv, "multiplicities, comma-separated")->required();
    cmd_dim->add_option("--word", word_csv, "word letters (default: canonical longest word)");
    cmd_dim->add_option("--d", d, "scale factor applied to the multiplicities")->capture_default_str();
    add_common(cmd_dim, common);

    CLI::App* cmd_hilbert = app.add_subcommand("hilbert", "graded dimension table with interpolated polynomial");
    cmd_hilbert->add_option("--n", n, "rank")->required();
    cmd_hilbert->add_option("--m", m_csv, "multiplicities, comma-separated")->required();
    cmd_hilbert->add_option("--word", word_csv, "word letters (default: canonical longest word)");
    cmd_hilbert->add_option("--dmax", dmax, "largest degree; the last entry is held out of the fit")->required();
    add_common(cmd_hilbert, common);

    CLI::App* cmd_straighten = app.add_subcommand("straighten", "express a row-standard tableau in the straight basis");
    cmd_straighten->add_option("--tableau", tableau_json, "tableau as JSON (see docs/formats.md)")->required();
    add_common(cmd_straighten, common);

    CLI::App* cmd_points = app.add_subcommand("points", "lattice points and triangular patterns");
    cmd_points->add_option("--tableau", tableau_json, "tableau as JSON: its point and pattern");
    cmd_points->add_option("--n", n, "rank (with --m: initial exponent points)");
    cmd_points->add_option("--m", m_csv, "multiplicities, comma-separated");
    cmd_points->add_option("--word", word_csv, "word letters (default: canonical longest word)");
    cmd_points->add_option("--d", d, "degree scale for the initial exponents")->capture_default_str();
    add_common(cmd_points, common);

    CLI::App* cmd_verify = app.add_subcommand("verify-example3", "run every check of the 3-dimensional example");
    dmax = 4;
    cmd_verify->add_option("--dmax", dmax, "largest degree to verify")->capture_default_str();
    add_common(cmd_verify, common);

    CLI::App* cmd_basis = app.add_subcommand("basis-report", "rank and span verification of the straight basis");
    cmd_basis->add_option("--n", n, "rank")->required();
    cmd_basis->add_option("--m", m_csv, "multiplicities, comma-separated")->required();
    cmd_basis->add_option("--word", word_csv, "word letters (default: canonical longest word)");
    cmd_basis->add_option("--d", d, "scale factor applied to the multiplicities")->capture_default_str();
    cmd_basis->add_flag("--precheck", precheck, "try the exact evaluation pre-check before symbolic rank");
    add_common(cmd_basis, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_column_sets->parsed()) {
            const bslab::ColumnSetList cs = bslab::column_sets(make_word(n, word_csv));
            if (common.format == "json") {
                emit(common, dump(bslab::json_of(cs)));
            } else {
                std::string out;
                for (std::size_t k = 0; k < cs.sets.size(); ++k)
                    out += "C(" + std::to_string(k + 1) + ") = " + set_to_string(cs.sets[k]) + "\n";
                emit(common, out);
            }
            return 0;
        }

        if (cmd_enumerate->parsed()) {
            const bslab::Shape shape = make_shape(n, word_csv, m_csv, 1);
            const bslab::FillKind kind =
                want_straight ? bslab::FillKind::Straight : bslab::FillKind::RowStandard;
            const std::vector<bslab::Tableau> all = bslab::enumerate_fillings(shape, kind);
            if (common.format == "json") {
                bslab::json tableaux = bslab::json::array();
                for (const auto& t : all) tableaux.push_back(bslab::json_of(t));
                emit(common, dump(bslab::json{{"count", all.size()}, {"tableaux", std::move(tableaux)}}));
            } else {
                std::string out = "count " + std::to_string(all.size()) + "\n";
                for (const auto& t : all) {
                    out += "\n";
                    out += bslab::render_tableau(t);
                }
                emit(common, out);
            }
            return 0;
        }

        if (cmd_dim->parsed()) {
            const bslab::Shape shape = make_shape(n, word_csv, m_csv, d);
            const bslab::Int dim = bslab::dim_sections(shape);
            if (common.format == "json")
                emit(common, dump(bslab::json{{"dim", bslab::to_string(dim)}}));
            else
                emit(common, bslab::to_string(dim) + "\n");
            return 0;
        }

        if (cmd_hilbert->parsed()) {
            const bslab::Shape shape = make_shape(n, word_csv, m_csv, 1);
            const bslab::GradedDimensionTable table = bslab::hilbert_table(shape, dmax);
            if (common.format == "json") {
                emit(common, dump(bslab::json_of(table)));
            } else {
                std::string out;
                for (std::size_t dd = 0; dd < table.entries.size(); ++dd)
                    out += "d " + std::to_string(dd) + ": " + bslab::to_string(table.entries[dd]) + "\n";
                out += "HP(d) = " + table.interpolated.display("d") + "\n";
                emit(common, out);
            }
            return 0;
        }

        if (cmd_straighten->parsed()) {
            bslab::json doc;
            try {
                doc = bslab::json::parse(tableau_json);
            } catch (const bslab::json::exception& e) {
                std::cerr << "malformed tableau JSON: " << e.what() << "\n";
                return 2;
            }
            const bslab::Tableau t = bslab::tableau_from_json(doc);
            const bslab::StraightenResult result = bslab::straighten(t);
            if (common.format == "json") {
                emit(common, dump(bslab::json_of(result)));
            } else {
                std::string out;
                for (const auto& [s, c] : result.coefficients) {
                    out += bslab::to_string(c) + " *\n";
                    out += bslab::render_tableau(s);
                    out += "\n";
                }
                emit(common, out);
            }
            return 0;
        }

        if (cmd_points->parsed()) {
            if (!tableau_json.empty()) {
                bslab::json doc;
                try {
                    doc = bslab::json::parse(tableau_json);
                } catch (const bslab::json::exception& e) {
                    std::cerr << "malformed tableau JSON: " << e.what() << "\n";
                    return 2;
                }
                const bslab::Tableau t = bslab::tableau_from_json(doc);
                const bslab::LatticePoint p = bslab::point_of_tableau(t);
                const bslab::GTPattern g = bslab::gt_pattern(p);
                if (common.format == "json")
                    emit(common, dump(bslab::json{{"point", bslab::json_of(p)}, {"pattern", bslab::json_of(g)}}));
                else
                    emit(common, bslab::render_gt(g));
                return 0;
            }
            if (m_csv.empty()) throw bslab::error("points needs either --tableau or --n with --m");
            const bslab::Shape shape = make_shape(n, word_csv, m_csv, 1);
            const auto exponents = bslab::initial_exponents(shape, d);
            if (common.format == "json") {
                bslab::json points = bslab::json::array();
                for (const auto& a : exponents) points.push_back(bslab::json_of(bslab::point_of_alpha(a)));
                emit(common, dump(bslab::json{{"count", exponents.size()}, {"points", std::move(points)}}));
            } else {
                std::string out = "count " + std::to_string(exponents.size()) + "\n";
                for (const auto& a : exponents) {
                    out += "\n";
                    out += bslab::render_gt(bslab::gt_pattern(bslab::point_of_alpha(a)));
                }
                emit(common, out);
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            const bslab::Example3Report report = bslab::verify_example3(dmax);
            if (common.format == "json") {
                emit(common, dump(bslab::json_of(report)));
            } else {
                std::string out;
                for (const auto& c : report.checks) {
                    out += c.pass ? "PASS " : "FAIL ";
                    out += c.name;
                    if (c.degree >= 0) out += " d=" + std::to_string(c.degree);
                    out += " expected=" + c.expected + " computed=" + c.computed + "\n";
                }
                out += report.all_pass ? "all checks passed\n" : "";
                if (!report.all_pass) {
                    bslab::json failing = bslab::json::array();
                    for (const auto& c : report.checks)
                        if (!c.pass) failing.push_back(bslab::json_of(c));
                    out += failing.dump(2) + "\n";
                }
                emit(common, out);
            }
            return report.all_pass ? 0 : 1;
        }

        if (cmd_basis->parsed()) {
            const bslab::Shape shape = make_shape(n, word_csv, m_csv, d);
            bslab::BasisOptions opts;
            opts.precheck = precheck;
            opts.seed = effective_seed(common);
            const bslab::BasisReport report = bslab::verify_basis(shape, opts);
            const bool ok = report.span_verified && report.symbolic_rank == report.straight_count;
            if (common.format == "json") {
                emit(common, dump(bslab::json_of(report)));
            } else {
                std::string out;
                out += "straight_count " + bslab::to_string(report.straight_count) + "\n";
                out += "symbolic_rank " + bslab::to_string(report.symbolic_rank) + "\n";
                out += std::string("span_verified ") + (report.span_verified ? "true" : "false") + "\n";
                out += std::string("precheck_certified ") + (report.precheck_certified ? "true" : "false") + "\n";
                if (!report.witness_failures.empty())
                    out += "witness_failures " + std::to_string(report.witness_failures.size()) + "\n";
                emit(common, out);
            }
            return ok ? 0 : 1;
        }

        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const bslab::basis_failure_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const bslab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bslab::json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 2;
    }
}
