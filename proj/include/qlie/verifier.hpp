#pragma once

/*
 * Named check registry binding each verified claim to an executable test,
 * plus the runner and the JSON report emitter. A run never aborts on a
 * failing check: failures are recorded with a witness and execution
 * continues. Reports are deterministic for a fixed configuration; wall
 * clock timings are kept out of the report unless explicitly requested.
 */

#include "qlie/json_io.hpp"
#include "qlie/spfactory.hpp"
#include "qlie/weights.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlie {

enum class CheckStatus { pass, fail, skipped };

const char* status_name(CheckStatus s);

struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string id, std::string anc, std::string stmt)
      : check_id(std::move(id)), anchor(std::move(anc)), statement(std::move(stmt)) {}

  std::string check_id;
  std::string anchor;     // label of the claim the check verifies
  std::string statement;
  CheckStatus status = CheckStatus::skipped;
  Json witness;           // mandatory on failure, informative otherwise
  long elapsed_ms = 0;
};

struct RunConfig {
  std::vector<Signature> signatures{{1, 1}, {2, 1}, {1, 2}};
  std::vector<Variant> variants{Variant::add_to_l, Variant::add_to_k};
  std::vector<int> rank_range{3, 4, 5, 6};
  std::vector<std::string> checks;  // empty or {"all"} selects everything
  std::uint64_t seed = 0;
  bool include_heavy = false;  // appends signature (2,2)
  bool emit_timings = false;   // include elapsed_ms in the report file
  std::string output_path;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegistryEntry {
  std::string id;
  std::string anchor;
  std::string description;
};

// Stable, documented list of available checks, in execution order.
const std::vector<RegistryEntry>& registry();

// Validates the configuration (unknown check ids and inadmissible
// signatures raise ConfigError before anything runs), then executes the
// selected checks in registry order.
std::vector<CheckResult> run_checks(const RunConfig& cfg);

Json report_json(const RunConfig& cfg, const std::vector<CheckResult>& results);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::fail) return false;
  return true;
}

}  // namespace qlie
