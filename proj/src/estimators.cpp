#include "survkit/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "survkit/ratio.hpp"

namespace survkit {

DomainExceeded::DomainExceeded(double t, double upper)
    : std::runtime_error("evaluation at t = " + std::to_string(t) +
                         " exceeds domain bound " + std::to_string(upper)),
      t_(t),
      upper_(upper) {}

NonPositiveSurvival::NonPositiveSurvival(double t)
    : std::runtime_error("plug-in survival is non-positive at t = " + std::to_string(t)),
      t_(t) {}

ZeroWeight::ZeroWeight(double time)
    : std::runtime_error("censoring survival left limit is zero at failure time " +
                         std::to_string(time)),
      time_(time) {}

NoConvergence::NoConvergence(StepFunction last_iterate, double residual, int iterations)
    : std::runtime_error("self-consistent iteration did not converge after " +
                         std::to_string(iterations) +
                         " sweeps (residual " + std::to_string(residual) + ")"),
      last_iterate_(std::move(last_iterate)),
      residual_(residual),
      iterations_(iterations) {}

BoundedStepFunction::BoundedStepFunction(StepFunction fn, double upper, bool upper_inclusive)
    : fn_(std::move(fn)), upper_(upper), upper_inclusive_(upper_inclusive) {}

double BoundedStepFunction::operator()(double t) const {
  if (t > upper_ || (t == upper_ && !upper_inclusive_)) {
    throw DomainExceeded(t, upper_);
  }
  return fn_(t);
}

double BoundedStepFunction::left_limit(double t) const {
  if (t > upper_) throw DomainExceeded(t, upper_);
  return fn_.left_limit(t);
}

StepFunction naive_survival(const JumpTable& jt) {
  const double n = static_cast<double>(jt.n);
  std::vector<double> values(jt.m());
  for (std::size_t k = 0; k < jt.m(); ++k) {
    values[k] = static_cast<double>(jt.at_risk_after[k]) / n;
  }
  return StepFunction(1.0, jt.times, std::move(values));
}

namespace {

// Running product of (1 - numerator[k] / denominator[k]) over the jump grid,
// under the 0/0 = 0 convention.
StepFunction one_minus_hazard_product(const JumpTable& jt,
                                      const std::vector<std::int64_t>& numerator,
                                      const std::vector<std::int64_t>& denominator) {
  std::vector<double> values(jt.m());
  double running = 1.0;
  for (std::size_t k = 0; k < jt.m(); ++k) {
    running *= 1.0 - guarded_ratio(static_cast<double>(numerator[k]),
                                   static_cast<double>(denominator[k]));
    values[k] = running;
  }
  return StepFunction(1.0, jt.times, std::move(values));
}

}  // namespace

StepFunction product_limit_failure(const JumpTable& jt) {
  return one_minus_hazard_product(jt, jt.failures, jt.at_risk);
}

StepFunction product_limit_censoring_dagger(const JumpTable& jt) {
  return one_minus_hazard_product(jt, jt.censorings, jt.at_risk_dagger);
}

StepFunction product_limit_censoring_naive(const JumpTable& jt) {
  return one_minus_hazard_product(jt, jt.censorings, jt.at_risk);
}

BoundedStepFunction censoring_via_inverse_product(const JumpTable& jt, double t_max) {
  if (!(t_max < jt.last_time())) {
    throw std::invalid_argument("censoring_via_inverse_product requires t_max < X_(m)");
  }
  std::vector<double> times;
  std::vector<double> values;
  double running = 1.0;
  for (std::size_t k = 0; k < jt.m() && jt.times[k] <= t_max; ++k) {
    // Y(u+) > 0 for u < X_(m), so the ratio is unconditionally defined
    running *= 1.0 + static_cast<double>(jt.censorings[k]) /
                         static_cast<double>(jt.at_risk_after[k]);
    times.push_back(jt.times[k]);
    values.push_back(1.0 / running);
  }
  return BoundedStepFunction(StepFunction(1.0, std::move(times), std::move(values)),
                             t_max, /*upper_inclusive=*/true);
}

BoundedStepFunction censoring_from_relation(const StepFunction& s_hat, const JumpTable& jt) {
  const double n = static_cast<double>(jt.n);
  const double last = jt.last_time();
  if (!(s_hat(0.0) > 0.0)) throw NonPositiveSurvival(0.0);

  std::vector<double> times;
  std::vector<double> values;
  for (std::size_t k = 0; k < jt.m() && jt.times[k] < last; ++k) {
    const double s = s_hat(jt.times[k]);
    if (!(s > 0.0)) throw NonPositiveSurvival(jt.times[k]);
    times.push_back(jt.times[k]);
    values.push_back(static_cast<double>(jt.at_risk_after[k]) / (n * s));
  }
  // Y(0+) = n since all observed times are positive
  return BoundedStepFunction(StepFunction(1.0 / s_hat(0.0), std::move(times), std::move(values)),
                             last, /*upper_inclusive=*/false);
}

namespace {

// One sweep of the self-consistency map on the unique-time grid. Rows where
// the naive estimator vanishes (only the last one) stay pinned at zero; for
// the rest the same-time ratio S(t)/S(X_i) is identically one, so that term
// enters exactly as dC(X_(k))/n.
std::vector<double> self_consistency_sweep(const JumpTable& jt,
                                           const std::vector<double>& naive,
                                           const std::vector<double>& prev) {
  const double n = static_cast<double>(jt.n);
  std::vector<double> next(prev.size());
  double weighted_censor_sum = 0.0;  // sum_{j < k} dC(X_(j)) / S(X_(j))
  for (std::size_t k = 0; k < prev.size(); ++k) {
    if (naive[k] == 0.0) {
      next[k] = 0.0;
      continue;
    }
    next[k] = naive[k] +
              (static_cast<double>(jt.censorings[k]) + prev[k] * weighted_censor_sum) / n;
    weighted_censor_sum += static_cast<double>(jt.censorings[k]) / prev[k];
  }
  return next;
}

double sup_change(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

}  // namespace

SelfConsistentResult self_consistent(const JumpTable& jt, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("self_consistent: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("self_consistent: max_iter must be positive");

  std::vector<double> naive(jt.m());
  for (std::size_t k = 0; k < jt.m(); ++k) {
    naive[k] = static_cast<double>(jt.at_risk_after[k]) / static_cast<double>(jt.n);
  }

  std::vector<double> current = naive;
  double change = 0.0;
  int iterations = 0;
  bool converged = false;
  while (iterations < max_iter) {
    std::vector<double> next = self_consistency_sweep(jt, naive, current);
    change = sup_change(next, current);
    ++iterations;
    if (change <= tol) {
      // the fixed-point residual of `next` is the change one more sweep
      // would produce; require it at tol as well
      std::vector<double> probe = self_consistency_sweep(jt, naive, next);
      const double residual = sup_change(probe, next);
      if (residual <= tol) {
        current = std::move(next);
        converged = true;
        break;
      }
      current = std::move(probe);
      change = residual;
      ++iterations;
      continue;
    }
    current = std::move(next);
  }
  StepFunction estimate(1.0, jt.times, current);
  if (!converged) {
    throw NoConvergence(std::move(estimate), change, iterations);
  }
  return SelfConsistentResult{std::move(estimate), iterations, change};
}

namespace {

std::vector<double> ipcw_failure_weights(const JumpTable& jt, const StepFunction& k_hat) {
  std::vector<double> weights(jt.m(), 0.0);
  for (std::size_t k = 0; k < jt.m(); ++k) {
    if (jt.failures[k] == 0) continue;
    const double denom = k_hat.left_limit(jt.times[k]);
    if (denom == 0.0) throw ZeroWeight(jt.times[k]);
    weights[k] = 1.0 / denom;
  }
  return weights;
}

}  // namespace

StepFunction ipcw_cdf(const JumpTable& jt, const StepFunction& k_hat) {
  const double n = static_cast<double>(jt.n);
  const std::vector<double> weights = ipcw_failure_weights(jt, k_hat);
  std::vector<double> values(jt.m());
  double running = 0.0;
  for (std::size_t k = 0; k < jt.m(); ++k) {
    running += static_cast<double>(jt.failures[k]) * weights[k] / n;
    values[k] = running;
  }
  return StepFunction(0.0, jt.times, std::move(values));
}

StepFunction ipcw_survival_tilde(const JumpTable& jt, const StepFunction& k_hat) {
  const double n = static_cast<double>(jt.n);
  const std::vector<double> weights = ipcw_failure_weights(jt, k_hat);
  // accumulate the tail sums backwards so the value at X_(m) is exactly zero
  std::vector<double> values(jt.m());
  double tail = 0.0;
  for (std::size_t k = jt.m(); k-- > 0;) {
    values[k] = tail;
    tail += static_cast<double>(jt.failures[k]) * weights[k] / n;
  }
  return StepFunction(tail, jt.times, std::move(values));
}

RttrResult rttr(const JumpTable& jt) {
  const std::size_t m = jt.m();
  const double n = static_cast<double>(jt.n);

  std::vector<double> weights(m);
  weights[0] = 1.0 / n;
  for (std::size_t k = 1; k < m; ++k) {
    weights[k] = weights[k - 1] * (1.0 + static_cast<double>(jt.censorings[k - 1]) /
                                             static_cast<double>(jt.at_risk_after[k - 1]));
  }

  std::vector<double> ledger(m);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    ledger[k] = weights[k] * static_cast<double>(jt.failures[k]);
  }
  ledger[m - 1] = weights[m - 1] * static_cast<double>(jt.at_risk[m - 1]);

  std::vector<double> values(m);
  double cumulative = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    cumulative += ledger[k];
    values[k] = 1.0 - cumulative;
  }
  return RttrResult{StepFunction(1.0, jt.times, std::move(values)),
                    std::move(weights), std::move(ledger)};
}

}  // namespace survkit
