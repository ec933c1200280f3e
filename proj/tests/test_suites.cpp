#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mbergman/report.hpp"
#include "mbergman/suites.hpp"

using namespace mbergman;
using suites::RunConfig;
using suites::Suite;

namespace {
RunConfig small_config() {
    RunConfig config;
    config.alphas = {0.0, 1.0};
    config.betas = {0.0, 1.5};
    config.ps = {2.0};
    config.n_r = 32;
    config.n_theta = 32;
    config.seed = 20240719;
    return config;
}
}  // namespace

TEST_CASE("CSV rows round-trip losslessly") {
    CheckReport report;
    report.check_id = "sample_check";
    report.param("alpha", 0.30000000000000004).param("n", 12).param("mode", "series");
    report.lhs = 1.0 / 3.0;
    report.rhs = 0.33333333333333337;
    report.finalize(1e-12);
    report.provenance = "round-trip fixture";
    report.runtime_ms = 17;

    const auto row = to_csv_row(report);
    const auto back = report_from_csv_row(row);
    CHECK(back.check_id == report.check_id);
    CHECK(back.params == report.params);
    CHECK(back.lhs == report.lhs);  // 17 significant digits are exact
    CHECK(back.rhs == report.rhs);
    CHECK(back.margin == report.margin);
    CHECK(back.outcome == report.outcome);
    CHECK(back.provenance == report.provenance);
    CHECK(back.runtime_ms == report.runtime_ms);

    CheckReport info;
    info.check_id = "zeros";
    info.outcome = Outcome::Info;
    CHECK(report_from_csv_row(to_csv_row(info)).outcome == Outcome::Info);
}

TEST_CASE("csv header is pinned") {
    CHECK(csv_header() == "check_id,params,lhs,rhs,margin,pass,provenance,runtime_ms");
}

TEST_CASE("exit status ignores informational reports") {
    CheckReport pass, fail, info;
    pass.outcome = Outcome::Pass;
    fail.outcome = Outcome::Fail;
    info.outcome = Outcome::Info;
    CHECK(suites::exit_status({pass, pass}) == 0);
    CHECK(suites::exit_status({pass, fail}) == 1);
    CHECK(suites::exit_status({pass, info}) == 0);
    CHECK(suites::exit_status({}) == 0);
}

TEST_CASE("suite names round-trip and reject junk") {
    for (Suite suite : {Suite::Basis, Suite::Kernel, Suite::Inequalities, Suite::Operators,
                        Suite::Toeplitz, Suite::Asymptotics, Suite::Zeros, Suite::All})
        CHECK(suites::suite_from_name(suites::suite_name(suite)) == suite);
    CHECK_THROWS_AS(suites::suite_from_name("bases"), std::invalid_argument);
}

TEST_CASE("config validation rejects out-of-domain grids before computing") {
    auto config = small_config();
    config.alphas.push_back(-1.5);
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = small_config();
    config.ps = {0.0};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = small_config();
    config.n_r = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    CHECK_THROWS_AS(suites::run_suite(config, Suite::Basis), std::invalid_argument);
}

TEST_CASE("basis suite passes and is deterministic") {
    const auto config = small_config();
    auto first = suites::run_suite(config, Suite::Basis);
    auto second = suites::run_suite(config, Suite::Basis);
    REQUIRE(!first.empty());
    CHECK(suites::exit_status(first) == 0);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        first[i].runtime_ms = 0;
        second[i].runtime_ms = 0;
        CHECK(to_csv_row(first[i]) == to_csv_row(second[i]));
    }
    // canonical order
    for (std::size_t i = 1; i < first.size(); ++i)
        CHECK(first[i - 1].check_id <= first[i].check_id);
}

TEST_CASE("emit_reports writes header-only CSV for empty input") {
    const std::string path = "/tmp/mbergman_empty_test.csv";
    suites::emit_reports({}, path, "");
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == csv_header());
    CHECK_FALSE(std::getline(in, line));
    std::remove(path.c_str());
}

TEST_CASE("emit_reports CSV round-trips a suite run") {
    auto config = small_config();
    auto reports = suites::run_suite(config, Suite::Zeros);
    for (auto& report : reports) report.runtime_ms = 0;
    const std::string path = "/tmp/mbergman_zeros_test.csv";
    suites::emit_reports(reports, path, "");
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    std::size_t row = 0;
    while (std::getline(in, line)) {
        const auto back = report_from_csv_row(line);
        REQUIRE(row < reports.size());
        CHECK(to_csv_row(back) == to_csv_row(reports[row]));
        CHECK(back.outcome == Outcome::Info);  // zeros suite is informational
        ++row;
    }
    CHECK(row == reports.size());
    CHECK(suites::exit_status(reports) == 0);
    std::remove(path.c_str());
}

TEST_CASE("svg rendering is self-contained") {
    const auto svg = suites::render_svg_line_plot(
        "demo", "r", "rho", {{0.5, 1.0}, {0.6, 0.9}, {0.9, 0.4}});
    CHECK(svg.find("<svg xmlns=") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("tolerance overrides flip a check") {
    auto config = small_config();
    auto baseline = suites::run_suite(config, Suite::Basis);
    // an absurdly strict override on the mass check must fail it
    config.tol_overrides["basis_mass"] = 0.0;
    auto strict = suites::run_suite(config, Suite::Basis);
    bool saw_fail = false;
    for (const auto& report : strict)
        if (report.check_id == "basis_mass") saw_fail = saw_fail || !report.passed();
    CHECK(saw_fail);
    CHECK(suites::exit_status(baseline) == 0);
    CHECK(suites::exit_status(strict) == 1);
}
