// End-to-end checks of the command-line tool: exact output bytes, exit
// codes, JSON schemas, determinism across runs, and document round trips.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "bslab/json_io.hpp"

using namespace bslab;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += std::string(BSLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

} // namespace

TEST_CASE("column sets print one interval per position", "[cli]") {
    const RunResult r = run_cli("column-sets --n 4");
    CHECK(r.code == 0);
    CHECK(r.out == "C(1) = {2}\n"
                   "C(2) = {2,3}\n"
                   "C(3) = {3}\n"
                   "C(4) = {2,3,4}\n"
                   "C(5) = {3,4}\n"
                   "C(6) = {4}\n");
}

TEST_CASE("dimension queries print a bare number", "[cli]") {
    CHECK(run_cli("dim --n 3 --m 1,1,1").out == "13\n");
    CHECK(run_cli("dim --n 3 --m 1,1,1 --d 2").out == "51\n");
    CHECK(run_cli("dim --n 3 --m 0,0,0").out == "1\n");
}

TEST_CASE("graded table output with the interpolated polynomial", "[cli]") {
    const RunResult r = run_cli("hilbert --n 3 --m 1,1,1 --dmax 5");
    CHECK(r.code == 0);
    CHECK(r.out == "d 0: 1\n"
                   "d 1: 13\n"
                   "d 2: 51\n"
                   "d 3: 130\n"
                   "d 4: 265\n"
                   "d 5: 471\n"
                   "HP(d) = 5/2*d^3 + 11/2*d^2 + 4*d + 1\n");

    const RunResult j = run_cli("hilbert --n 3 --m 1,1,1 --dmax 5 --format json");
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc.at("entries") == json::array({"1", "13", "51", "130", "265", "471"}));
    CHECK(doc.at("interpolated").at("display") == "5/2*d^3 + 11/2*d^2 + 4*d + 1");
}

TEST_CASE("enumeration reports counts in both formats", "[cli]") {
    const RunResult ascii = run_cli("enumerate --n 3 --m 1,1,1 --straight");
    CHECK(ascii.code == 0);
    CHECK(ascii.out.rfind("count 13\n", 0) == 0);

    const RunResult j = run_cli("enumerate --n 3 --m 1,1,1 --straight --format json");
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc.at("count") == 13);
    CHECK(doc.at("tableaux").size() == 13);

    const RunResult all = run_cli("enumerate --n 3 --m 1,1,1 --format json");
    CHECK(json::parse(all.out).at("count") == 18);
}

TEST_CASE("straightening through the command line", "[cli]") {
    const std::string doc = R"({"n":3,"m":[1,1,0],"entries":[[2,3],[1]]})";
    const RunResult r = run_cli("straighten --format json --tableau " + quoted(doc));
    REQUIRE(r.code == 0);
    const json out = json::parse(r.out);
    REQUIRE(out.at("terms").size() == 1);
    CHECK(out.at("terms").at(0).at("coefficient") == "1");
    const json& rows = out.at("terms").at(0).at("tableau").at("rows");
    REQUIRE(rows.size() == 2);
    CHECK(rows.at(0) == json::array({json{{"column", 2}, {"entry", 1}}, json{{"column", 3}, {"entry", 3}}}));
    CHECK(rows.at(1) == json::array({json{{"column", 2}, {"entry", 2}}}));
}

TEST_CASE("malformed documents and bad flags exit with code two", "[cli]") {
    CHECK(run_cli("straighten --tableau " + quoted("{oops")).code == 2);
    CHECK(run_cli("straighten --tableau " + quoted(R"({"n":3})")).code == 2);
    CHECK(run_cli("dim --n 3 --m 1,1").code == 2);
    CHECK(run_cli("dim --n 3 --m 1,x,1").code == 2);
    CHECK(run_cli("dim --no-such-flag").code == 2);
    CHECK(run_cli("no-such-subcommand").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("enumerate --n 3 --m 1,1,1 --straight --row-standard").code == 2);
}

TEST_CASE("help exits cleanly", "[cli]") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("dim --help").code == 0);
}

TEST_CASE("points of a tableau document", "[cli]") {
    const Tableau t =
        make_tableau(shape_of_multiplicity(3, {0, 2, 1}), {{2}, {1, 3}, {2, 3}});
    const std::string doc = json_of(t).dump();
    const RunResult r = run_cli("points --format json --tableau " + quoted(doc));
    REQUIRE(r.code == 0);
    const json out = json::parse(r.out);
    CHECK(out.at("pattern") == json_of(gt_pattern(point_of_tableau(t))));
    CHECK(out.at("point") == json_of(point_of_tableau(t)));

    const RunResult counted = run_cli("points --n 3 --m 1,1,1 --d 2 --format json");
    REQUIRE(counted.code == 0);
    CHECK(json::parse(counted.out).at("count") == 51);
}

TEST_CASE("full example verification exits zero when every check passes", "[cli]") {
    const RunResult r = run_cli("verify-example3 --dmax 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed\n") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const RunResult j = run_cli("verify-example3 --dmax 1 --format json");
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("checks").size() == 16);
}

TEST_CASE("basis reports agree between formats and honor the seed", "[cli]") {
    const RunResult ascii = run_cli("basis-report --n 3 --m 1,1,1");
    CHECK(ascii.code == 0);
    CHECK(ascii.out == "straight_count 13\n"
                       "symbolic_rank 13\n"
                       "span_verified true\n"
                       "precheck_certified false\n");

    const RunResult with_env =
        run_cli("basis-report --n 3 --m 1,0,0 --precheck --format json", "BSLAB_SEED=123");
    REQUIRE(with_env.code == 0);
    const json doc = json::parse(with_env.out);
    CHECK(doc.at("straight_count") == "2");
    CHECK(doc.at("symbolic_rank") == "2");
    CHECK(doc.at("span_verified") == true);

    const RunResult bad_env = run_cli("basis-report --n 3 --m 1,0,0 --precheck", "BSLAB_SEED=xyz");
    CHECK(bad_env.code == 2);
}

TEST_CASE("identical invocations produce byte-identical output", "[cli]") {
    const std::string cmds[] = {
        "hilbert --n 3 --m 1,1,1 --dmax 3 --format json",
        "points --n 3 --m 1,1,1 --d 2 --format json",
        "enumerate --n 3 --m 1,1,1 --straight --format json",
        "verify-example3 --dmax 1 --format json",
    };
    for (const std::string& cmd : cmds) {
        const RunResult a = run_cli(cmd);
        const RunResult b = run_cli(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("output lands in a file when requested", "[cli]") {
    const std::string path = "cli_output_check.json";
    std::remove(path.c_str());
    const RunResult direct = run_cli("dim --n 3 --m 1,1,1 --format json");
    const RunResult filed = run_cli("dim --n 3 --m 1,1,1 --format json --output " + path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("tableau documents round-trip through their JSON form", "[cli][json]") {
    const Shape canonical = shape_of_multiplicity(3, {1, 1, 1});
    for (const Tableau& t : enumerate_row_standard(canonical)) {
        const Tableau back = tableau_from_json(json_of(t));
        CHECK(back == t);
    }

    const Shape ad_hoc = shape_from_rows(3, {ColumnInterval{2, 2}, ColumnInterval{2, 3}});
    const Tableau t = make_tableau(ad_hoc, {{1}, {1, 3}});
    const Tableau back = tableau_from_json(json_of(t));
    CHECK(back == t);

    // The compact entries form parses to the same tableau as the cell form.
    const json compact{{"n", 3}, {"intervals", json::array({json::array({2, 2}), json::array({2, 3})})},
                       {"entries", json::array({json::array({1}), json::array({1, 3})})}};
    CHECK(tableau_from_json(compact) == t);
}

TEST_CASE("tableau parsing reports schema violations", "[cli][json]") {
    CHECK_THROWS_AS(tableau_from_json(json::array()), shape_error);
    CHECK_THROWS_AS(tableau_from_json(json{{"n", 3}}), shape_error);
    CHECK_THROWS_AS(tableau_from_json(json{{"n", 3}, {"m", json::array({1, 1, 1})}}), shape_error);
    const json wrong_cells{{"n", 3},
                           {"m", json::array({1, 0, 0})},
                           {"rows", json::array({json::array({json{{"column", 3}, {"entry", 1}}})})}};
    CHECK_THROWS_AS(tableau_from_json(wrong_cells), shape_error);
}
