#include "survkit/report_json.hpp"

namespace survkit {

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const IdentityCheck& check : report.checks) {
    nlohmann::json entry = {
        {"name", check.name},
        {"maxResidual", check.max_residual},
        {"tolerance", check.tolerance},
        {"passed", check.passed},
    };
    if (check.condition_holds.has_value()) {
      entry["conditionHolds"] = *check.condition_holds;
    }
    checks.push_back(std::move(entry));
  }
  return nlohmann::json{
      {"datasetSummary",
       {{"n", report.summary.n},
        {"m", report.summary.m},
        {"commonDiscontinuityBeforeLast", report.summary.common_discontinuity_before_last},
        {"lastTimeAllFailures", report.summary.last_time_all_failures}}},
      {"checks", std::move(checks)},
      {"kmTailInterval", {report.km_tail.first, report.km_tail.second}},
      {"allPassed", report.all_passed()},
  };
}

}  // namespace survkit
