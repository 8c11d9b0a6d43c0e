// In-process CLI coverage: each subcommand driven through run_cli with
// captured streams, exit-code conventions, divisor expression parsing, and
// catalog resolution via flag and environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sarkisov/cli.hpp"
#include "sarkisov/reports.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace sarkisov;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("divisor expression grammar") {
    CHECK(parse_divisor("4H-1E") == DivisorClass{4, -1});
    CHECK(parse_divisor("H-E") == DivisorClass{1, -1});
    CHECK(parse_divisor("24H-7E") == DivisorClass{24, -7});
    CHECK(parse_divisor("-E") == DivisorClass{0, -1});
    CHECK(parse_divisor("+3E") == DivisorClass{0, 3});
    CHECK(parse_divisor(" 2H + 3E ") == DivisorClass{2, 3});
    CHECK(parse_divisor("E+H") == DivisorClass{1, 1});
    CHECK(parse_divisor("0H+0E") == DivisorClass{0, 0});
    CHECK_THROWS_AS(parse_divisor("4H-1F"), Error);
    CHECK_THROWS_AS(parse_divisor("4H4H"), Error);
    CHECK_THROWS_AS(parse_divisor(""), Error);
    CHECK_THROWS_AS(parse_divisor("4"), Error);
}

TEST_CASE("classify text output for (8,5)") {
    const auto r = run({"classify", "-d", "8", "-g", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("E1-E1") != std::string::npos);
    CHECK(r.out.find("partner d=8 g=5") != std::string::npos);
    CHECK(r.out.find("flopping curves: 10") != std::string::npos);
}

TEST_CASE("classify json output parses and carries the schema version") {
    const auto r = run({"classify", "-d", "8", "-g", "5", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["verdict"] == "E1_E1");
    CHECK(j["weak_fano"]["minus_k_cubed"] == "8");
}

TEST_CASE("classify exit codes") {
    // Conclusive negative result still exits 0.
    const auto not_fano = run({"classify", "-d", "9", "-g", "5"});
    CHECK(not_fano.code == 0);
    CHECK(not_fano.out.find("NOT_WEAK_FANO") != std::string::npos);

    // Inconclusive exits 2.
    const auto undecided = run({"classify", "-d", "8", "-g", "5", "--no-k3-hypothesis"});
    CHECK(undecided.code == 2);
    CHECK(undecided.out.find("INCONCLUSIVE") != std::string::npos);

    // Out-of-domain degree is a usage error.
    const auto bad = run({"classify", "-d", "4", "-g", "0"});
    CHECK(bad.code == 1);
    CHECK(!bad.err.empty());
}

TEST_CASE("classify rejects unknown ambient and format") {
    CHECK(run({"classify", "-d", "8", "-g", "5", "--ambient", "P4"}).code == 1);
    CHECK(run({"classify", "-d", "8", "-g", "5", "--format", "csv"}).code == 1);
    CHECK(run({"classify", "-d", "8", "-g", "5", "--format", "yaml"}).code == 1);
}

TEST_CASE("k3 subcommand") {
    const auto r = run({"k3", "-d", "8", "-g", "5", "-k", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("nef: yes") != std::string::npos);
    CHECK(r.out.find("free: yes") != std::string::npos);

    const auto not_nef = run({"k3", "-d", "8", "-g", "5", "-k", "3"});
    CHECK(not_nef.code == 0);
    CHECK(not_nef.out.find("nef: no") != std::string::npos);
    CHECK(not_nef.out.find("nk^2 - dk + g - 1 < 0") != std::string::npos);
}

TEST_CASE("secants subcommand") {
    const auto r = run({"secants", "-d", "8", "-g", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("10") != std::string::npos);
    CHECK(run({"secants", "-d", "4", "-g", "0"}).code == 1);
}

TEST_CASE("triple subcommand") {
    const auto r = run({"triple", "4H-1E", "4H-1E", "4H-1E", "-d", "8", "-g", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("8") != std::string::npos);

    const auto mixed = run({"triple", "24H-7E", "24H-7E", "24H-7E", "-d", "8", "-g", "5"});
    CHECK(mixed.code == 0);
    CHECK(mixed.out.find("-680") != std::string::npos);

    const auto bad = run({"triple", "4H-1F", "4H-1E", "4H-1E", "-d", "8", "-g", "5"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("parse_error") != std::string::npos);
}

TEST_CASE("scan subcommand emits the golden csv row") {
    const auto r = run({"scan", "--d-min", "8", "--d-max", "8", "--g-min", "5",
                        "--g-max", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find(scan_csv_header()) != std::string::npos);
    CHECK(r.out.find("8,5,8,10,SMALL_CERTIFIED,E1_E1,8,5,10,") != std::string::npos);
}

TEST_CASE("catalog flag and environment variable") {
    const std::string path = std::string(SARKISOV_DATA_DIR) + "/catalog.txt";
    const auto via_flag =
        run({"classify", "-d", "8", "-g", "5", "--catalog", path});
    CHECK(via_flag.code == 0);
    CHECK(via_flag.out.find("E1-E1") != std::string::npos);

    ::setenv("SARKISOV_CATALOG", path.c_str(), 1);
    const auto via_env = run({"classify", "-d", "8", "-g", "5"});
    ::unsetenv("SARKISOV_CATALOG");
    CHECK(via_env.code == 0);
    CHECK(via_env.out.find("E1-E1") != std::string::npos);

    const auto missing =
        run({"classify", "-d", "8", "-g", "5", "--catalog", "/nonexistent/cat.txt"});
    CHECK(missing.code == 1);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"classify"}).code == 1);                      // missing -d/-g
    CHECK(run({"scan", "--d-min", "5"}).code == 1);          // missing range ends
    CHECK(run({"triple", "H", "E", "-d", "8", "-g", "5"}).code == 1); // two of three
}

TEST_CASE("help exits zero") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classify") != std::string::npos);
    CHECK(r.out.find("scan") != std::string::npos);
}
