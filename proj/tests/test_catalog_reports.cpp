// Catalog parsing/validation and the rendering layer: JSON schema and
// round-trips, the fixed CSV header, scan determinism, and parallel-scan
// byte-identity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sarkisov/reports.hpp"

#include <sstream>
#include <string>

using namespace sarkisov;

namespace {

BlowupSetup p3_setup(long long d, long long g) {
    return {find_ambient(builtin_catalog(), "P3"), d, g};
}

} // namespace

TEST_CASE("builtin catalog shape") {
    const auto catalog = builtin_catalog();
    REQUIRE(catalog.size() == 18);
    CHECK(catalog[0].label == "P3");
    CHECK(catalog[0].index == 4);
    CHECK(catalog[0].anticanonical_degree == 64);
    CHECK(catalog[0].fundamental_cube() == 1);
    CHECK(catalog[1].label == "Q3");
    CHECK(catalog[1].fundamental_cube() == 2);
    CHECK(find_ambient(catalog, "V5").anticanonical_degree == 40);
    CHECK(find_ambient(catalog, "X22").index == 1);
    CHECK_THROWS_AS(find_ambient(catalog, "P4"), Error);
}

TEST_CASE("ambient validation") {
    CHECK_THROWS_AS(validate_ambient({"bad", 0, 8}), Error);
    CHECK_THROWS_AS(validate_ambient({"bad", 5, 125}), Error);
    CHECK_THROWS_AS(validate_ambient({"bad", 2, -8}), Error);
    CHECK_THROWS_AS(validate_ambient({"bad", 3, 55}), Error); // 27 does not divide 55
    CHECK_THROWS_AS(validate_ambient({"", 4, 64}), Error);
    CHECK_NOTHROW(validate_ambient({"ok", 3, 54}));
}

TEST_CASE("catalog parsing") {
    std::istringstream in("# comment\n"
                          "P3 4 64\n"
                          "\n"
                          "Q3 3 54  # trailing comment\n");
    const auto catalog = parse_catalog(in, "test");
    REQUIRE(catalog.size() == 2);
    CHECK(catalog[0].label == "P3");
    CHECK(catalog[1].index == 3);
}

TEST_CASE("catalog parsing reports the offending line") {
    std::istringstream missing("P3 4 64\nQ3 3\n");
    CHECK_THROWS_WITH_AS(parse_catalog(missing, "cat"),
                         doctest::Contains("cat:2"), Error);
    std::istringstream dup("P3 4 64\nP3 4 64\n");
    CHECK_THROWS_WITH_AS(parse_catalog(dup, "cat"), doctest::Contains("duplicate"), Error);
    std::istringstream bad_div("Y 3 55\n");
    CHECK_THROWS_WITH_AS(parse_catalog(bad_div, "cat"), doctest::Contains("cat:1"), Error);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_catalog(empty, "cat"), Error);
    std::istringstream trailing("P3 4 64 extra\n");
    CHECK_THROWS_AS(parse_catalog(trailing, "cat"), Error);
}

TEST_CASE("sample catalog file loads and matches the builtin table") {
    const auto from_file = load_catalog(std::string(SARKISOV_DATA_DIR) + "/catalog.txt");
    const auto builtin = builtin_catalog();
    REQUIRE(from_file.size() == builtin.size());
    for (std::size_t i = 0; i < builtin.size(); ++i) {
        CHECK(from_file[i].label == builtin[i].label);
        CHECK(from_file[i].index == builtin[i].index);
        CHECK(from_file[i].anticanonical_degree == builtin[i].anticanonical_degree);
    }
}

TEST_CASE("classification JSON carries the expected fields") {
    const auto c = classify(p3_setup(8, 5), builtin_catalog());
    const auto j = classification_json(c);
    CHECK(j["schema_version"] == 1);
    CHECK(j["setup"]["ambient"] == "P3");
    CHECK(j["setup"]["degree"] == "8");
    CHECK(j["weak_fano"]["minus_k_cubed"] == "8");
    CHECK(j["weak_fano"]["quadrisecants"] == "10");
    CHECK(j["smallness"]["contracted_class"] == "3H-1E");
    CHECK(j["smallness"]["certificate"] == "SMALL_CERTIFIED");
    CHECK(j["flop"]["defect"] == "640");
    CHECK(j["flop"]["defect_over_r3"] == "10");
    CHECK(j["exclusions"].size() == 5);
    CHECK(j["partners"].size() == 1);
    CHECK(j["partners"][0]["exceptional_class"] == "24H-7E");
    CHECK(j["partners"][0]["alpha"] == "6");
    CHECK(j["partners"][0]["beta"] == "-1");
    CHECK(j["verdict"] == "E1_E1");
    CHECK(j["bounds"]["partner_box"] == "64");
}

TEST_CASE("classification JSON round-trips byte-identically") {
    const auto c = classify(p3_setup(8, 5), builtin_catalog());
    const auto dumped = classification_json(c).dump(2);
    const auto reparsed = ordered_json::parse(dumped).dump(2);
    CHECK(dumped == reparsed);
}

TEST_CASE("text report contains the headline facts") {
    const auto c = classify(p3_setup(8, 5), builtin_catalog());
    const auto text = render_classification_text(c);
    CHECK(text.find("E1-E1") != std::string::npos);
    CHECK(text.find("partner d=8 g=5") != std::string::npos);
    CHECK(text.find("flopping curves: 10") != std::string::npos);
    CHECK(text.find("SMALL_CERTIFIED") != std::string::npos);
}

TEST_CASE("csv header is fixed") {
    CHECK(scan_csv_header() ==
          "d,g,minus_K_cubed,quadrisecants,smallness,verdict,partner_d,partner_g,"
          "defect_over_r3,hypotheses");
}

TEST_CASE("scan csv over 5..12 x 0..12") {
    ScanRequest request;
    request.d_min = 5;
    request.d_max = 12;
    request.g_min = 0;
    request.g_max = 12;
    request.format = OutputFormat::csv;
    const auto csv = run_scan(request, builtin_catalog());

    // Header plus one row per cell, lexicographic in (d, g).
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == scan_csv_header());
    std::size_t rows = 0;
    bool saw_85 = false;
    std::string first_row, row_95;
    while (std::getline(lines, line)) {
        if (rows == 0) {
            first_row = line;
        }
        if (line.rfind("8,5,", 0) == 0) {
            saw_85 = true;
            CHECK(line.rfind("8,5,8,10,SMALL_CERTIFIED,E1_E1,8,5,10,", 0) == 0);
        }
        if (line.rfind("9,5,", 0) == 0) {
            row_95 = line;
        }
        ++rows;
    }
    CHECK(rows == 8 * 13);
    CHECK(saw_85);
    CHECK(first_row.rfind("5,0,", 0) == 0);
    CHECK(row_95.find("NOT_WEAK_FANO") != std::string::npos);
}

TEST_CASE("scan output is byte-identical across runs and job counts") {
    ScanRequest request;
    request.d_min = 5;
    request.d_max = 10;
    request.g_min = 0;
    request.g_max = 8;
    request.format = OutputFormat::csv;
    const auto serial_a = run_scan(request, builtin_catalog());
    const auto serial_b = run_scan(request, builtin_catalog());
    CHECK(serial_a == serial_b);
    request.jobs = 4;
    const auto parallel = run_scan(request, builtin_catalog());
    CHECK(serial_a == parallel);
}

TEST_CASE("scan validates its ranges") {
    ScanRequest request;
    request.d_min = 4;
    request.d_max = 6;
    request.g_min = 0;
    request.g_max = 0;
    CHECK_THROWS_AS(run_scan(request, builtin_catalog()), Error);
    request.d_min = 7;
    CHECK_THROWS_AS(run_scan(request, builtin_catalog()), Error); // d_min > d_max
    request.d_max = 8;
    request.g_min = 3;
    request.g_max = 2;
    CHECK_THROWS_AS(run_scan(request, builtin_catalog()), Error);
    request.g_max = 3;
    request.jobs = 0;
    CHECK_THROWS_AS(run_scan(request, builtin_catalog()), Error);
}

TEST_CASE("scan json carries schema version and rows") {
    ScanRequest request;
    request.d_min = 8;
    request.d_max = 8;
    request.g_min = 5;
    request.g_max = 5;
    request.format = OutputFormat::json;
    const auto text = run_scan(request, builtin_catalog());
    const auto j = ordered_json::parse(text);
    CHECK(j["schema_version"] == 1);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["verdict"] == "E1_E1");
    CHECK(j["rows"][0]["partner_d"] == "8");
}

TEST_CASE("format parsing") {
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(parse_format("yaml"), Error);
}
