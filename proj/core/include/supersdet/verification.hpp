#pragma once

// Named identity checks grouped into suites, as run by `supersdet verify`.

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace supersdet {

enum class CheckStatus {
  Pass,
  Fail,
  /// The computation is consistent but differs from the commonly displayed
  /// form; detail says how. Does not fail the suite.
  Known,
};

std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  [[nodiscard]] bool passed() const;
};

/// grassmann, susy, series, zeta.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& suite);
/// One suite by name, or every suite for "all".
std::vector<SuiteReport> run_suites(const std::string& selection);

nlohmann::json to_json(const std::vector<SuiteReport>& reports);

}  // namespace supersdet
