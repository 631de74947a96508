#include "symnorm/suites.hpp"

#include <doctest.h>

using namespace symnorm;

namespace {

VerifyConfig small_config() {
    VerifyConfig cfg;
    cfg.g_kmax = 3;
    cfg.g_rmax = 2;
    cfg.g_nmax = 3;
    cfg.h_kmax = 2;
    cfg.h_rmax = 2;
    cfg.h_nmax = 3;
    cfg.zk_kmax = 5;
    cfg.matrix_trials = 3;
    cfg.gamma_rmax = 2;
    cfg.gamma_nmax = 3;
    cfg.gamma_order = 4;
    cfg.schur_ostrowski_samples = 20;
    return cfg;
}

} // namespace

TEST_SUITE_BEGIN("suites");

TEST_CASE("all verification suites pass on a small config") {
    const auto results = run_verify_suites(small_config());
    CHECK(!results.empty());
    for (const CheckResult& c : results) {
        INFO(c.suite, " / ", c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("suite selection") {
    const auto only_routes = run_verify_suites(small_config(), {"routes"});
    for (const CheckResult& c : only_routes) CHECK(c.suite == "routes");
    CHECK(!only_routes.empty());
}

TEST_CASE("reports are byte-identical for identical config and seed") {
    const VerifyConfig cfg = small_config();
    const auto r1 = run_verify_suites(cfg, {"matrix"});
    const auto r2 = run_verify_suites(cfg, {"matrix"});
    CHECK(verify_report_json(cfg, r1) == verify_report_json(cfg, r2));
    CHECK(verify_report_csv(r1) == verify_report_csv(r2));

    std::vector<FuzzReport> f1, f2;
    TheoremOptions opt;
    f1.push_back(fuzz_theorem(TheoremFamily::T3_H, 2, 3, 50, 7, opt));
    f2.push_back(fuzz_theorem(TheoremFamily::T3_H, 2, 3, 50, 7, opt));
    CHECK(fuzz_report_json(f1, 7, opt) == fuzz_report_json(f2, 7, opt));

    // different seed changes the matrix suite inputs but not the outcome
    VerifyConfig other = cfg;
    other.seed = 99;
    for (const CheckResult& c : run_verify_suites(other, {"matrix"})) CHECK(c.pass);
}

TEST_CASE("json reports carry the schema tag") {
    const VerifyConfig cfg = small_config();
    const auto results = run_verify_suites(cfg, {"homomorphism"});
    const std::string json = verify_report_json(cfg, results);
    CHECK(json.find("\"schema\": \"1\"") != std::string::npos);
    CHECK(json.find("\"command\": \"verify\"") != std::string::npos);
}

TEST_CASE("explorer rows") {
    const auto rows = explore_schur(Family::H, 2, 2);
    CHECK(!rows.empty());
    // H_{k,1} = e_k expands to the single column s_{1^k}
    for (const SchurExploreRow& row : rows) {
        if (row.r != 1) continue;
        const bool is_column =
            row.lambda.parts == std::vector<int>(static_cast<std::size_t>(row.k), 1);
        CHECK(row.coeff == (is_column ? Rat(1) : Rat()));
    }
    const std::string json = explore_report_json(rows);
    CHECK(json.find("evidence, not proof") != std::string::npos);
    CHECK(explore_report_json(rows) == explore_report_json(rows));
    const std::string csv = explore_report_csv(rows);
    CHECK(csv.find("family,k,r,lambda,coeff,sign") == 0);
}

TEST_CASE("float17 renders 17 significant digits") {
    CHECK(float17(0.1) == "0.10000000000000001");
    CHECK(float17(1.0) == "1");
    CHECK(float17(-2.5e-9) == "-2.5000000000000001e-09");
}

TEST_SUITE_END();
