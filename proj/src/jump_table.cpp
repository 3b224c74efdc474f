#include "survkit/jump_table.hpp"

#include <algorithm>

namespace survkit {

bool JumpTable::common_discontinuity_before_last() const {
  for (std::size_t k = 0; k + 1 < m(); ++k) {
    if (failures[k] > 0 && censorings[k] > 0) return true;
  }
  return false;
}

bool JumpTable::last_time_all_failures() const {
  return failures.back() == at_risk.back();
}

JumpTable build_jump_table(const CensoredSample& sample) {
  std::vector<Observation> sorted = sample.observations();
  std::sort(sorted.begin(), sorted.end(),
            [](const Observation& a, const Observation& b) { return a.time < b.time; });

  JumpTable jt;
  jt.n = static_cast<std::int64_t>(sorted.size());

  std::int64_t at_risk = jt.n;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double t = sorted[i].time;
    std::int64_t dn = 0;
    std::int64_t dc = 0;
    while (i < sorted.size() && sorted[i].time == t) {
      if (sorted[i].status == 1) ++dn; else ++dc;
      ++i;
    }
    jt.times.push_back(t);
    jt.failures.push_back(dn);
    jt.censorings.push_back(dc);
    jt.at_risk.push_back(at_risk);
    jt.at_risk_dagger.push_back(at_risk - dn);
    at_risk -= dn + dc;
    jt.at_risk_after.push_back(at_risk);
  }
  return jt;
}

}  // namespace survkit
