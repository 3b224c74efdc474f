#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "survkit/sample.hpp"

namespace survkit {

// Counting-process skeleton of a sample: the m unique observed times with
// per-time counts and at-risk columns. Counts stay exact integers; only the
// final estimator products are floating.
//
//   times            X_(1) < ... < X_(m)
//   failures         dN(X_(k))
//   censorings       dC(X_(k))
//   at_risk          Y(X_(k))  = #{i : X_i >= X_(k)}
//   at_risk_dagger   Y†(X_(k)) = Y(X_(k)) - dN(X_(k))
//   at_risk_after    Y(X_(k)+) = Y(X_(k)) - dN(X_(k)) - dC(X_(k))
struct JumpTable {
  std::vector<double> times;
  std::vector<std::int64_t> failures;
  std::vector<std::int64_t> censorings;
  std::vector<std::int64_t> at_risk;
  std::vector<std::int64_t> at_risk_dagger;
  std::vector<std::int64_t> at_risk_after;
  std::int64_t n = 0;

  std::size_t m() const { return times.size(); }
  double last_time() const { return times.back(); }

  // Some time before X_(m) carries both a failure and a censoring.
  bool common_discontinuity_before_last() const;

  // dN(X_(m)) == Y(X_(m)): every observation at the last time is a failure.
  bool last_time_all_failures() const;
};

// Compiles a sample into its jump table. Ties are detected by exact equality
// of the stored time values.
JumpTable build_jump_table(const CensoredSample& sample);

}  // namespace survkit
