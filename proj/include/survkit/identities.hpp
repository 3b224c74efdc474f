#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "survkit/jump_table.hpp"

namespace survkit {

// Outcome of one finite-sample identity evaluated over the dataset grid.
// For conditional identities, condition_holds records which side of the
// biconditional applied and passed means the identity held exactly when its
// condition did and was violated when it had to be.
struct IdentityCheck {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::optional<bool> condition_holds;
};

struct DatasetSummary {
  std::int64_t n = 0;
  std::int64_t m = 0;
  bool common_discontinuity_before_last = false;
  bool last_time_all_failures = false;
};

struct VerificationReport {
  DatasetSummary summary;
  std::vector<IdentityCheck> checks;
  // range restriction for any Kaplan-Meier tail completion, [0, S_PL(X_(m))]
  std::pair<double, double> km_tail;

  bool all_passed() const;
};

// Runs the full identity battery on one dataset. Residuals are evaluated at
// t = 0, every unique time, and one point past X_(m); all functions involved
// are constant elsewhere. A NoConvergence from the self-consistent estimator
// is recorded as failed checks, not thrown.
VerificationReport verify_all(const JumpTable& jt, double tol = 1e-12);

// [0, S_PL(X_(m))]: the interval within which any valid tail completion of
// the Kaplan-Meier estimator must lie; degenerate iff dN(X_(m)) = Y(X_(m)).
std::pair<double, double> km_tail_interval(const JumpTable& jt);

}  // namespace survkit
