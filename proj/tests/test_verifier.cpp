#include "qlie/verifier.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qlie;

TEST_CASE("registry contents") {
  const auto& reg = registry();
  auto has = [&](const std::string& id) {
    for (const auto& e : reg)
      if (e.id == id) return true;
    return false;
  };
  for (const char* id :
       {"WDF-closed-forms", "L1.4", "C1.2-enum", "L1.1-dims", "realforms-su",
        "L1.6-so-decomp", "L1.6-VsVs", "PA.1-oracle", "PA.1-omega-prime", "PA.2-jacobiator",
        "CA.1-m-not-lie", "LA.1-grid", "LA.1-phi", "B-orthogonality", "R1.4-forms",
        "L3.2-p-derivations", "P3.3-der-m", "center-simple", "RA.1-sympair"})
    CHECK(has(id));
  CHECK(!has("T4.2-coverings"));  // out of scope
  for (const auto& e : reg) {
    CHECK(!e.anchor.empty());
    CHECK(!e.description.empty());
  }
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.checks = {"no-such-check"};
  CHECK_THROWS_AS(run_checks(cfg), ConfigError);

  RunConfig bad_sig;
  bad_sig.signatures = {{0, 2}};
  CHECK_THROWS_AS(run_checks(bad_sig), ConfigError);

  RunConfig bad_rank;
  bad_rank.rank_range = {2};
  CHECK_THROWS_AS(run_checks(bad_rank), ConfigError);
}

TEST_CASE("selected weight checks pass") {
  RunConfig cfg;
  cfg.signatures = {{1, 1}};
  cfg.rank_range = {3, 4};
  cfg.checks = {"WDF-closed-forms", "L1.4", "C1.2-enum", "L1.1-dims"};
  auto results = run_checks(cfg);
  REQUIRE(results.size() == 4);
  for (const auto& r : results) CHECK(r.status == CheckStatus::pass);
  CHECK(results[0].check_id == "WDF-closed-forms");
}

TEST_CASE("grid check records the non-Lie cells") {
  RunConfig cfg;
  cfg.signatures = {{1, 1}};
  cfg.checks = {"LA.1-grid"};
  auto results = run_checks(cfg);
  REQUIRE(results.size() == 1);
  CHECK(results[0].status == CheckStatus::pass);
  // 36 grid cells, 6 on the diagonal
  CHECK(results[0].witness.at("non_lie_cells").size() == 30);
}

TEST_CASE("reports are deterministic") {
  RunConfig cfg;
  cfg.signatures = {{1, 1}};
  cfg.rank_range = {3};
  cfg.seed = 7;
  cfg.checks = {"WDF-closed-forms", "realforms-su", "PA.1-oracle"};
  auto a = report_json(cfg, run_checks(cfg)).dump(2);
  auto b = report_json(cfg, run_checks(cfg)).dump(2);
  CHECK(a == b);
  CHECK(a.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("skipped checks are reported as skipped") {
  RunConfig cfg;
  cfg.signatures = {{1, 1}};
  cfg.rank_range = {3};  // L1.4 needs a rank above 3
  cfg.checks = {"L1.4"};
  auto results = run_checks(cfg);
  REQUIRE(results.size() == 1);
  CHECK(results[0].status == CheckStatus::skipped);
}
