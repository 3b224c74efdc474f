#pragma once

#include <json.hpp>

#include "survkit/identities.hpp"

namespace survkit {

// Stable JSON form of a verification report:
//   { "datasetSummary": { "n", "m", "commonDiscontinuityBeforeLast",
//                         "lastTimeAllFailures" },
//     "checks": [ { "name", "maxResidual", "tolerance", "passed",
//                   "conditionHolds"? } ],
//     "allPassed": bool }
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace survkit
