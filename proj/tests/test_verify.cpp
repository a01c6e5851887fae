#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "taubound/verify.hpp"

using namespace taubound;

TEST_SUITE("verify") {

TEST_CASE("default config holds the five reference polynomials") {
    const VerifyConfig cfg = default_config();
    REQUIRE(cfg.polys.size() == 5);
    CHECK(cfg.polys[0].delta() == -1);
    CHECK(cfg.polys[4].delta() == 91);
    CHECK(cfg.grid == std::vector<std::uint64_t>{100, 1000, 10'000, 100'000, 1'000'000});
    CHECK(default_config(10'000).grid ==
          std::vector<std::uint64_t>{100, 1000, 10'000});
    CHECK(default_config(50).grid == std::vector<std::uint64_t>{50});
}

TEST_CASE("config parsing") {
    std::istringstream good(
        "# comment\n"
        "poly 0,1\n"
        "poly 5, 27  # inline comment\n"
        "\n"
        "grid 1000 10 100\n");
    const VerifyConfig cfg = parse_config(good);
    REQUIRE(cfg.polys.size() == 2);
    CHECK(cfg.polys[1].delta() == -2);
    CHECK(cfg.grid == std::vector<std::uint64_t>{10, 100, 1000});  // sorted, deduped

    std::istringstream bad_keyword("polynomial 0,1\ngrid 10\n");
    CHECK_THROWS_AS(parse_config(bad_keyword), ConfigError);
    std::istringstream bad_pair("poly 0 1\ngrid 10\n");
    CHECK_THROWS_AS(parse_config(bad_pair), ConfigError);
    std::istringstream invalid_poly("poly 1,1\ngrid 10\n");  // delta = 0
    CHECK_THROWS_AS(parse_config(invalid_poly), ConfigError);
    std::istringstream no_grid("poly 0,1\n");
    CHECK_THROWS_AS(parse_config(no_grid), ConfigError);
    std::istringstream no_poly("grid 10\n");
    CHECK_THROWS_AS(parse_config(no_poly), ConfigError);
    std::istringstream zero_grid("poly 0,1\ngrid 0\n");
    CHECK_THROWS_AS(parse_config(zero_grid), ConfigError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("verify_theorem2 on a small grid") {
    VerifyConfig cfg;
    cfg.polys.emplace_back(0, 1);
    cfg.grid = {10, 100};
    cfg.epsilon = 1e-5;
    const auto reports = verify_theorem2(cfg);
    REQUIRE(reports.size() == 1);
    const VerificationReport& rep = reports[0];
    CHECK(rep.delta == -1);
    CHECK(rep.holds);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].exact_sum == 32);
    CHECK(rep.rows[1].exact_sum == 536);
    for (const auto& row : rep.rows) {
        CHECK(row.margin > 0);
        CHECK(row.margin == row.bound.total - static_cast<double>(row.exact_sum));
        CHECK(row.ratio_to_main_term > 0);
    }
}

TEST_CASE("verify_corollary1 digest") {
    const Corollary1Report rep = verify_corollary1(1000);
    CHECK(rep.holds);
    CHECK(rep.exhaustive_limit == 1000);
    CHECK(rep.worst_n == 1);
    CHECK(rep.worst_margin == doctest::Approx(2.4061).epsilon(1e-3));
    REQUIRE(rep.rows.size() >= 3);
    CHECK(rep.rows[0].n == 1);
    CHECK(rep.rows[0].exact_sum == 2);
    CHECK(rep.rows[0].bound == doctest::Approx(4.4061).epsilon(1e-6));
    CHECK(rep.rows[1].n == 10);
    CHECK(rep.rows[1].exact_sum == 32);
    CHECK_THROWS_AS(verify_corollary1(0), ConfigError);
}

TEST_CASE("l_value_table matches the published column") {
    const auto rows = l_value_table(1e-6);
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        CHECK(r.matches);
        CHECK(std::abs(r.l.value - r.reference) <= 1.1e-3);
        CHECK(r.modulus == 4 * std::abs(r.delta));
    }
    CHECK(rows[0].reference == 0.7854);
    CHECK(rows[4].reference == 1.6887);
}

TEST_CASE("theorem1 ratios stay within the envelope and tighten") {
    const QuadraticPoly f(0, 1);
    const auto rows = theorem1_ratios(f, {100, 1000, 10'000});
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.within);
        CHECK(row.ratio > 0);
    }
    // closer to 1 at larger N
    CHECK(std::abs(rows[2].ratio - 1.0) < std::abs(rows[0].ratio - 1.0));
    CHECK_THROWS_AS(theorem1_ratios(f, {1}), ConfigError);
}

TEST_CASE("JSON round trip is lossless") {
    VerifyConfig cfg;
    cfg.polys.emplace_back(5, -10);
    cfg.polys.emplace_back(0, 1);
    cfg.grid = {10, 50, 200};
    const auto reports = verify_theorem2(cfg);
    const std::string text = reports_to_json(reports);
    const auto parsed = reports_from_json(text);
    CHECK(parsed == reports);
    // and a second serialization is byte-identical
    CHECK(reports_to_json(parsed) == text);
}

TEST_CASE("CSV layout") {
    VerifyConfig cfg;
    cfg.polys.emplace_back(0, 1);
    cfg.grid = {10, 100};
    const auto reports = verify_theorem2(cfg);
    const std::string csv = reports_to_csv(reports);
    std::istringstream lines(csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "poly_b,poly_c,delta,N,exact_sum,bound_total,main_term,margin,ratio");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 8);
    }
    CHECK(rows == 2);
    CHECK(csv.find("0,1,-1,10,32,") != std::string::npos);

    const std::string cor_csv = corollary1_to_csv(verify_corollary1(100));
    CHECK(cor_csv.rfind("poly_b,poly_c,delta,N,", 0) == 0);
    CHECK(cor_csv.find("0,1,-1,1,2,") != std::string::npos);
}

TEST_CASE("corollary JSON includes the verdict") {
    const std::string text = corollary1_to_json(verify_corollary1(100));
    CHECK(text.find("\"verdict\": \"holds\"") != std::string::npos);
    CHECK(text.find("\"exhaustive_limit\": 100") != std::string::npos);
}

}  // TEST_SUITE
