#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "riesz/sweep.hpp"
#include "riesz/verify.hpp"

using namespace riesz;

TEST_CASE("fit_exponent recovers exact and noisy power laws") {
    std::vector<std::pair<double, double>> exact;
    for (int n : {64, 128, 256, 512, 1024}) exact.emplace_back(n, std::pow(n, -1.0 / 3.0));
    const auto fit = fit_exponent(exact);
    CHECK(fit.slope == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(fit.std_error <= 1e-12);

    // deterministic "noise" 1 + 0.01 sin(k)
    std::vector<std::pair<double, double>> noisy;
    int k = 0;
    for (int n : {64, 128, 256, 512, 1024, 2048})
        noisy.emplace_back(n, 3.7 * std::pow(n, -0.25) * (1.0 + 0.01 * std::sin(++k)));
    CHECK(std::abs(fit_exponent(noisy).slope + 0.25) <= 0.02);

    std::vector<std::pair<double, double>> short_list{{64, 1.0}, {128, 0.5}, {256, 0.25}};
    CHECK_THROWS_AS(fit_exponent(short_list), std::invalid_argument);
    std::vector<std::pair<double, double>> bad{{64, 1.0}, {128, 0.5}, {256, -0.25}, {512, 0.1}};
    CHECK_THROWS_AS(fit_exponent(bad), std::invalid_argument);
}

TEST_CASE("sweep config round-trips through JSON") {
    const std::string text = R"({
        "d": 2, "s": "log", "N_list": [8, 12, 16, 24], "epsilon": 0.2,
        "restarts": 2, "seed": 5, "centers_budget": 64,
        "outputs": {"csv_path": "", "json_path": "", "cache_dir": ""}
    })";
    const SweepConfig cfg = sweep_config_from_json(text);
    CHECK(cfg.d == 2);
    CHECK(cfg.s.is_log);
    CHECK(cfg.N_list.size() == 4);
    CHECK(cfg.epsilon == 0.2);
    CHECK(cfg.centers_budget == 64);

    const SweepConfig numeric = sweep_config_from_json(R"({"d":3,"s":1.5,"N_list":[4,6],"epsilon":0.1})");
    CHECK_FALSE(numeric.s.is_log);
    CHECK(numeric.s.value == 1.5);
}

TEST_CASE("a small sweep produces rows, fits, CSV and JSON") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "riesz_sweep_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    SweepConfig cfg;
    cfg.d = 2;
    cfg.s = SLabel::riesz(1.0);
    cfg.N_list = {8, 12, 16, 24};
    cfg.epsilon = 0.2;
    cfg.restarts = 2;
    cfg.seed = 3;
    cfg.centers_budget = 128;
    cfg.outputs.csv_path = (dir / "rows.csv").string();
    cfg.outputs.json_path = (dir / "result.json").string();
    cfg.outputs.cache_dir = (dir / "cache").string();

    const SweepResult result = run_sweep(cfg);
    REQUIRE(result.rows.size() == 4);
    CHECK(result.fits.present);
    for (const auto& row : result.rows) {
        CHECK(row.sobolev_D > 0.0);
        CHECK(row.cap_D > 0.0);
        CHECK(row.cap_D <= 1.0);
        CHECK(row.scaled_separation > 0.0);
    }

    // CSV: header plus one line per N, numbers re-readable at full precision
    std::ifstream csv(cfg.outputs.csv_path);
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line == kSweepCsvHeader);
    int rows = 0;
    while (std::getline(csv, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 4);

    // JSON mirrors the result field names
    std::ifstream jf(cfg.outputs.json_path);
    std::stringstream buf;
    buf << jf.rdbuf();
    const auto j = nlohmann::json::parse(buf.str());
    REQUIRE(j.contains("rows"));
    REQUIRE(j.contains("fits"));
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][0].contains("sobolev_D"));
    CHECK(j["fits"].contains("sobolev_slope"));
    CHECK(j["fits"].contains("gap_coeff"));
    CHECK(j["rows"][2]["N"] == 16);
    CHECK(j["rows"][2]["energy"].get<double>() ==
          doctest::Approx(result.rows[2].energy).epsilon(1e-15));

    // warm cache: identical rows on a re-run
    const SweepResult again = run_sweep(cfg);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        CHECK(again.rows[i].energy == result.rows[i].energy);
        CHECK(again.rows[i].gap == result.rows[i].gap);
        CHECK(again.rows[i].sobolev_D == result.rows[i].sobolev_D);
        CHECK(again.rows[i].cap_D == result.rows[i].cap_D);
    }
    fs::remove_all(dir);
}

TEST_CASE("sweep validates its config") {
    SweepConfig cfg;
    cfg.d = 2;
    cfg.s = SLabel::riesz(1.0);
    cfg.N_list = {16, 8};
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg.N_list = {8, 16};
    cfg.epsilon = -1.0;
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("fast verify suite passes end to end") {
    const auto checks = run_verify(VerifyLevel::fast);
    CHECK(checks.size() >= 20);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.value);
        CHECK(c.passed);
    }
    const std::string json = verify_report_json(checks);
    const auto parsed = nlohmann::json::parse(json);
    CHECK(parsed["all_passed"].get<bool>());
    CHECK(parsed["checks"].size() == checks.size());
}

TEST_CASE("verify is deterministic across worker counts") {
    const auto one = run_verify(VerifyLevel::fast, 1);
    const auto two = run_verify(VerifyLevel::fast, 2);
    REQUIRE(one.size() == two.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].name == two[i].name);
        CHECK(one[i].value == two[i].value);
        CHECK(one[i].passed == two[i].passed);
    }
}
