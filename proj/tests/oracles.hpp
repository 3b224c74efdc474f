#pragma once

// Brute-force oracles computed straight from raw (time, status) pairs:
// plain indicator sums, literal products over scanned unique times, the
// per-observation fixed-point sweep, and the mass-passing redistribution
// algorithm. Deliberately independent of the library implementation; used
// to freeze expected values and cross-check estimator paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Raw = std::vector<std::pair<double, int>>;

inline std::vector<double> unique_times(const Raw& raw) {
  std::set<double> times;
  for (const auto& [t, d] : raw) times.insert(t);
  return std::vector<double>(times.begin(), times.end());
}

inline long at_risk(const Raw& raw, double t) {  // Y(t)
  long count = 0;
  for (const auto& [x, d] : raw) count += x >= t ? 1 : 0;
  return count;
}

inline long beyond(const Raw& raw, double t) {  // Y(t+)
  long count = 0;
  for (const auto& [x, d] : raw) count += x > t ? 1 : 0;
  return count;
}

inline long failures_at(const Raw& raw, double t) {  // dN(t)
  long count = 0;
  for (const auto& [x, d] : raw) count += (x == t && d == 1) ? 1 : 0;
  return count;
}

inline long censored_at(const Raw& raw, double t) {  // dC(t)
  long count = 0;
  for (const auto& [x, d] : raw) count += (x == t && d == 0) ? 1 : 0;
  return count;
}

inline long at_risk_dagger(const Raw& raw, double t) {  // Y(t) - dN(t)
  return at_risk(raw, t) - failures_at(raw, t);
}

inline double naive_at(const Raw& raw, double t) {
  return static_cast<double>(beyond(raw, t)) / static_cast<double>(raw.size());
}

inline double pl_failure_at(const Raw& raw, double t) {
  double product = 1.0;
  for (double u : unique_times(raw)) {
    if (u > t) break;
    const double dn = static_cast<double>(failures_at(raw, u));
    const double y = static_cast<double>(at_risk(raw, u));
    if (dn == 0.0 && y == 0.0) continue;  // 0/0 = 0
    product *= 1.0 - dn / y;
  }
  return product;
}

inline double censor_dagger_at(const Raw& raw, double t) {
  double product = 1.0;
  for (double u : unique_times(raw)) {
    if (u > t) break;
    const double dc = static_cast<double>(censored_at(raw, u));
    const double ydag = static_cast<double>(at_risk_dagger(raw, u));
    if (dc == 0.0 && ydag == 0.0) continue;
    product *= 1.0 - dc / ydag;
  }
  return product;
}

inline double censor_dagger_left(const Raw& raw, double t) {  // K(t-)
  double product = 1.0;
  for (double u : unique_times(raw)) {
    if (u >= t) break;
    const double dc = static_cast<double>(censored_at(raw, u));
    const double ydag = static_cast<double>(at_risk_dagger(raw, u));
    if (dc == 0.0 && ydag == 0.0) continue;
    product *= 1.0 - dc / ydag;
  }
  return product;
}

inline double censor_naive_at(const Raw& raw, double t) {
  double product = 1.0;
  for (double u : unique_times(raw)) {
    if (u > t) break;
    product *= 1.0 - static_cast<double>(censored_at(raw, u)) /
                         static_cast<double>(at_risk(raw, u));
  }
  return product;
}

inline double inverse_product_at(const Raw& raw, double t) {
  double product = 1.0;
  for (double u : unique_times(raw)) {
    if (u > t) break;
    product *= 1.0 + static_cast<double>(censored_at(raw, u)) /
                         static_cast<double>(beyond(raw, u));
  }
  return 1.0 / product;
}

// Literal per-observation sweep of the self-consistency equation on the
// unique-time grid; returns the converged values at those times.
inline std::vector<double> self_consistent_values(const Raw& raw, double tol = 1e-14,
                                                  int max_iter = 100000) {
  const std::vector<double> grid = unique_times(raw);
  const double n = static_cast<double>(raw.size());

  auto value_at = [&grid](const std::vector<double>& values, double t) {
    // right-continuous lookup, 1 before the first grid point
    double value = 1.0;
    for (std::size_t k = 0; k < grid.size() && grid[k] <= t; ++k) value = values[k];
    return value;
  };

  std::vector<double> naive(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) naive[k] = naive_at(raw, grid[k]);

  std::vector<double> current = naive;
  for (int iter = 0; iter < max_iter; ++iter) {
    std::vector<double> next(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (naive[k] == 0.0) {
        next[k] = 0.0;  // pinned wherever the naive estimator vanishes
        continue;
      }
      const double t = grid[k];
      const double s_t = value_at(current, t);
      double acc = 0.0;
      for (const auto& [x, d] : raw) {
        if (d == 0 && x <= t) {
          const double s_x = value_at(current, x);
          acc += s_x == 0.0 ? 0.0 : s_t / s_x;  // 0/0 = 0
        }
      }
      next[k] = naive[k] + acc / n;
    }
    double change = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      change = std::max(change, std::abs(next[k] - current[k]));
    }
    current = std::move(next);
    if (change <= tol) break;
  }
  return current;
}

inline double ipcw_cdf_at(const Raw& raw, double t) {
  double acc = 0.0;
  for (const auto& [x, d] : raw) {
    if (d == 1 && x <= t) acc += 1.0 / censor_dagger_left(raw, x);
  }
  return acc / static_cast<double>(raw.size());
}

inline double ipcw_tilde_at(const Raw& raw, double t) {
  double acc = 0.0;
  for (const auto& [x, d] : raw) {
    if (d == 1 && x > t) acc += 1.0 / censor_dagger_left(raw, x);
  }
  return acc / static_cast<double>(raw.size());
}

// The redistribution algorithm itself: every observation starts with mass
// 1/n; censored observations, visited in nondecreasing time order, split
// their mass equally over strictly later observations. Censored mass at the
// last time has nowhere to go and stays there.
struct RedistributionResult {
  std::vector<double> times;  // unique, increasing
  std::vector<double> mass;   // total mass parked at each time
};

inline RedistributionResult rttr_redistribute(const Raw& raw) {
  std::vector<std::pair<double, int>> sorted = raw;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const std::size_t n = sorted.size();
  std::vector<double> mass(n, 1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i].second != 0) continue;
    std::size_t first_later = i + 1;
    while (first_later < n && sorted[first_later].first == sorted[i].first) ++first_later;
    if (first_later == n) continue;  // nothing later: mass stays at the last time
    const double share = mass[i] / static_cast<double>(n - first_later);
    mass[i] = 0.0;
    for (std::size_t j = first_later; j < n; ++j) mass[j] += share;
  }

  RedistributionResult result;
  for (std::size_t i = 0; i < n;) {
    const double t = sorted[i].first;
    double total = 0.0;
    while (i < n && sorted[i].first == t) total += mass[i++];
    result.times.push_back(t);
    result.mass.push_back(total);
  }
  return result;
}

inline double rttr_survival_at(const RedistributionResult& redistribution, double t) {
  double survival = 1.0;
  for (std::size_t k = 0; k < redistribution.times.size() && redistribution.times[k] <= t; ++k) {
    survival -= redistribution.mass[k];
  }
  return survival;
}

}  // namespace oracle
