#include "subres/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

using namespace subres;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("subres command text output", "[cli]") {
    auto r = run_cli({"subres", "-m", "4", "-n", "3", "-d", "2", "--alpha", "1", "--beta", "0"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("q=[-3, -2, -1]") != std::string::npos);
    CHECK(r.out.find("monomial  = 6*x^2 - 4*x + 1") != std::string::npos);

    auto r2 = run_cli({"subres", "-m", "2", "-n", "2", "-d", "1", "--alpha", "3", "--beta", "1",
                       "--oracle"});
    REQUIRE(r2.exit_code == 0);
    CHECK(r2.out.find("monomial  = 4*x - 8") != std::string::npos);
    CHECK(r2.out.find("oracle    : match") != std::string::npos);
}

TEST_CASE("subres command json schema and round trip", "[cli]") {
    auto r = run_cli({"subres", "-m", "4", "-n", "3", "-d", "2", "--alpha", "1", "--beta", "0",
                      "--oracle", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["m"] == 4);
    CHECK(j["n"] == 3);
    CHECK(j["d"] == 2);
    CHECK(j["characteristic"] == 0);
    CHECK(j["alpha"] == "1");
    CHECK(j["beta"] == "0");
    CHECK(j["bernstein"]["sign"] == -1);
    CHECK(j["bernstein"]["power_alpha_minus_beta"] == 2);
    CHECK(j["bernstein"]["q"] == std::vector<std::string>{"-3", "-2", "-1"});
    CHECK(j["monomial"] == std::vector<std::string>{"1", "-4", "6"});
    CHECK(j["oracle_match"] == true);

    // emitted values parse back to the library values bit-exactly
    auto q = qj_closed(4, 3, 2);
    for (std::size_t i = 0; i < q.size(); ++i)
        CHECK(parse_integer(j["bernstein"]["q"][i].get<std::string>()) == q[i]);
    for (const auto& c : j["monomial"])
        CHECK(to_string(parse_rational(c.get<std::string>())) == c.get<std::string>());
}

TEST_CASE("subres order zero gives the Poisson constant", "[cli]") {
    auto r = run_cli({"subres", "-m", "3", "-n", "3", "-d", "0", "--alpha", "2", "--beta", "0",
                      "--format", "json"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["monomial"] == std::vector<std::string>{"512"});
}

TEST_CASE("subres with prime characteristic", "[cli]") {
    auto r = run_cli({"subres", "-m", "4", "-n", "3", "-d", "2", "--alpha", "1", "--beta", "0",
                      "--char", "5", "--oracle", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["characteristic"] == 5);
    CHECK(j["oracle_match"] == true);
    CHECK(j["monomial"] == std::vector<std::string>{"1", "1", "1"}); // 6,-4,1 mod 5
    // rational alpha reduces through the inverse: 1/2 = 3 mod 5
    auto r2 = run_cli({"subres", "-m", "2", "-n", "2", "-d", "1", "--alpha", "1/2", "--beta", "0",
                       "--char", "5", "--format", "json"});
    REQUIRE(r2.exit_code == 0);
    CHECK(nlohmann::json::parse(r2.out)["alpha"] == "3");
    // non-invertible denominator is a usage error
    auto bad = run_cli({"subres", "-m", "2", "-n", "2", "-d", "1", "--alpha", "1/5", "--beta",
                        "0", "--char", "5"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run_cli({"subres", "-m", "2", "-n", "2", "-d", "2", "--alpha", "1", "--beta", "0"})
              .exit_code == 2); // d >= min(m,n)
    CHECK(run_cli({"subres", "-m", "2", "-n", "2", "-d", "1", "--alpha", "x", "--beta", "0"})
              .exit_code == 2); // unparsable rational
    CHECK(run_cli({"nonsense"}).exit_code == 2);
    CHECK(run_cli({"subres"}).exit_code == 2); // missing required options
    CHECK(run_cli({"qcoeffs", "-m", "3", "-n", "3", "-d", "3"}).exit_code == 2);
    CHECK(run_cli({"psres", "-m", "4", "-n", "3", "-d", "0"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
}

TEST_CASE("help exits cleanly", "[cli]") {
    auto r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("subres") != std::string::npos);
}

TEST_CASE("qcoeffs compares minors with the closed form", "[cli]") {
    auto r = run_cli({"qcoeffs", "-m", "4", "-n", "3", "-d", "2", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["minors"] == j["closed_form"]);
    CHECK(j["match"] == true);
    // matrices serialize as row-major arrays-of-arrays of decimal strings
    std::vector<std::vector<std::string>> hankel{{"0", "1", "2"}, {"1", "2", "1"}};
    CHECK(j["hankel"] == hankel);
    CHECK(j["c"] == 2);
}

TEST_CASE("psres reports the factor and the degree-drop note", "[cli]") {
    auto r = run_cli({"psres", "-m", "6", "-n", "8", "-d", "2"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("factor  = 13860") != std::string::npos);
    CHECK(r.out.find("degree < d for every characteristic p < 12") != std::string::npos);

    auto j = nlohmann::json::parse(
        run_cli({"psres", "-m", "6", "-n", "8", "-d", "2", "--format", "json"}).out);
    CHECK(j["factor"] == "13860");
    CHECK(j["degree_drops_for_all_smaller_primes"] == true);
    CHECK(j["prime_bound"] == 12);

    // with nodes supplied the full value appears: 6 * 1^2 = 6
    auto jv = nlohmann::json::parse(run_cli({"psres", "-m", "4", "-n", "3", "-d", "2", "--alpha",
                                             "1", "--beta", "0", "--format", "json"})
                                        .out);
    CHECK(jv["value"] == "6");
}

TEST_CASE("charp-table reproduces the degree analysis", "[cli]") {
    auto r = run_cli({"charp-table", "-m", "11", "-n", "9", "-d", "8"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("p=5    degree=6") != std::string::npos);

    auto j = nlohmann::json::parse(
        run_cli({"charp-table", "-m", "6", "-n", "8", "-d", "2", "--format", "json"}).out);
    std::vector<std::pair<std::string, int>> expected{
        {"2", -1}, {"3", -1}, {"5", 1}, {"7", -1}, {"11", 0}};
    REQUIRE(j["rows"].size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(j["rows"][i]["p"] == expected[i].first);
        CHECK(j["rows"][i]["degree"] == expected[i].second);
    }
}

TEST_CASE("identity subcommand", "[cli]") {
    auto r1 = run_cli({"identity", "ostrowski", "--l", "4", "--a", "1,2"});
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("PASS") != std::string::npos);
    CHECK(r1.out.find("lhs = 10") != std::string::npos);

    auto rj = run_cli({"identity", "ostrowski", "--l", "4", "--a", "1,2", "--format", "json"});
    auto jo = nlohmann::json::parse(rj.out);
    std::vector<std::vector<std::string>> mat{{"4", "1"}, {"6", "4"}};
    CHECK(jo["matrix"] == mat);
    CHECK(jo["pass"] == true);

    auto r2 = run_cli({"identity", "pfaff-saalschutz", "--k", "1", "--x", "2", "--y", "3", "--z",
                       "4", "--format", "json"});
    CHECK(r2.exit_code == 0);
    auto j = nlohmann::json::parse(r2.out);
    CHECK(j["lhs"] == "-1/2");
    CHECK(j["rhs"] == "-1/2");
    CHECK(j["pass"] == true);

    // pole is a usage error, reported with the offending factor
    auto r3 = run_cli({"identity", "pfaff-saalschutz", "--k", "1", "--x", "2", "--y", "3", "--z",
                       "5"});
    CHECK(r3.exit_code == 2);
    CHECK(r3.err.find("(1+x+y-z-k)_1") != std::string::npos);

    auto r4 = run_cli({"identity", "binomial-kernel", "-m", "4", "-n", "3", "-d", "2", "--i", "3"});
    CHECK(r4.exit_code == 0);
    CHECK(r4.out.find("4/3") != std::string::npos);

    CHECK(run_cli({"identity", "unknown-kind"}).exit_code == 2);
}

TEST_CASE("verify is deterministic and seed-sensitive", "[cli]") {
    auto a = run_cli({"verify", "--max", "3", "--seed", "7"});
    auto b = run_cli({"verify", "--max", "3", "--seed", "7"});
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("verify: 15/15 sweeps passed (max=3, seed=7)") != std::string::npos);

    auto c = run_cli({"verify", "--max", "3", "--seed", "7", "--jobs", "4"});
    CHECK(c.exit_code == 0);
    CHECK(c.out == a.out); // worker pool must not change the report

    auto j = nlohmann::json::parse(
        run_cli({"verify", "--max", "3", "--seed", "7", "--format", "json"}).out);
    CHECK(j["pass"] == true);
    CHECK(j["sweeps"].size() == 15);
}

TEST_CASE("log diagnostics go to stderr only", "[cli]") {
    setenv("SUBRES_LOG", "info", 1);
    auto r = run_cli({"verify", "--max", "2", "--seed", "1"});
    unsetenv("SUBRES_LOG");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("[verify]") != std::string::npos);
    auto quiet = run_cli({"verify", "--max", "2", "--seed", "1"});
    CHECK(quiet.err.empty());
    CHECK(quiet.out == r.out);
}

TEST_CASE("failing reports exit with 1", "[cli]") {
    // a fabricated failing report drives the same printing path the
    // subcommands use
    VerificationReport rep;
    rep.subject = "fabricated";
    rep.pass = false;
    std::ostringstream out;
    cli::detail::print_report_text(out, rep);
    CHECK(out.str().find("FAIL") != std::string::npos);
}
