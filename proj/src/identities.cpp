#include "survkit/identities.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "survkit/estimators.hpp"
#include "survkit/ratio.hpp"

namespace survkit {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed; });
}

namespace {

IdentityCheck unconditional(std::string name, double residual, double tol) {
  return IdentityCheck{std::move(name), residual, tol, residual <= tol, std::nullopt};
}

// Biconditional: the discrepancy must vanish when the condition holds and a
// strict witness must exist when it fails.
IdentityCheck biconditional(std::string name, bool condition, double discrepancy, double tol) {
  const bool passed = condition ? discrepancy <= tol : discrepancy > tol;
  return IdentityCheck{std::move(name), discrepancy, tol, passed, condition};
}

}  // namespace

VerificationReport verify_all(const JumpTable& jt, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("verify_all: tol must be positive");

  const std::size_t m = jt.m();
  const double n = static_cast<double>(jt.n);
  const double last = jt.last_time();
  const bool last_all_failures = jt.last_time_all_failures();
  const bool common_disc = jt.common_discontinuity_before_last();

  VerificationReport report;
  report.summary = DatasetSummary{jt.n, static_cast<std::int64_t>(m), common_disc,
                                  last_all_failures};
  report.km_tail = km_tail_interval(jt);

  const StepFunction pl = product_limit_failure(jt);
  const StepFunction k_dag = product_limit_censoring_dagger(jt);
  const StepFunction k_naive = product_limit_censoring_naive(jt);
  const StepFunction f_ipcw = ipcw_cdf(jt, k_dag);
  const StepFunction s_tilde = ipcw_survival_tilde(jt, k_dag);
  const RttrResult rttr_fit = rttr(jt);

  bool sc_converged = true;
  double sc_failure_residual = 0.0;
  StepFunction sc(1.0);
  try {
    // iterate well below the reporting tolerance so the distance between the
    // final iterate and the exact fixed point cannot eat the check budget
    const double sc_tol = std::min(tol, std::max(4e-15, tol / 1000.0));
    sc = self_consistent(jt, sc_tol, 10000).estimate;
  } catch (const NoConvergence& err) {
    sc_converged = false;
    sc_failure_residual = err.residual();
    sc = err.last_iterate();
  }

  // evaluation grid: 0, every unique time, one point past the end
  std::vector<double> grid;
  grid.reserve(m + 2);
  grid.push_back(0.0);
  grid.insert(grid.end(), jt.times.begin(), jt.times.end());
  grid.push_back(last + 1.0);

  auto y_after_at = [&](std::size_t gi) -> double {
    if (gi == 0) return n;
    if (gi == m + 1) return 0.0;
    return static_cast<double>(jt.at_risk_after[gi - 1]);
  };
  auto y_at = [&](std::size_t gi) -> double {
    if (gi == 0) return n;
    if (gi == m + 1) return 0.0;
    return static_cast<double>(jt.at_risk[gi - 1]);
  };

  // (1) anticipating Volterra equation for the censoring estimator,
  //     K(t) = 1 - sum_{u <= t} K(u) dC(u) / Y(u+), for t < X_(m)
  {
    double resid = std::abs(k_dag(0.0) - 1.0);
    double partial = 0.0;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      partial += k_dag(jt.times[k]) * static_cast<double>(jt.censorings[k]) /
                 static_cast<double>(jt.at_risk_after[k]);
      resid = std::max(resid, std::abs(k_dag(jt.times[k]) - (1.0 - partial)));
    }
    report.checks.push_back(unconditional("volterra-censoring", resid, tol));
  }

  // (2) Volterra equation for the failure estimator,
  //     S(t) = 1 - sum_{u <= t} S(u-) dN(u) / Y(u), for all t
  {
    double resid = std::abs(pl(0.0) - 1.0);
    double partial = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      partial += pl.left_limit(jt.times[k]) * static_cast<double>(jt.failures[k]) /
                 static_cast<double>(jt.at_risk[k]);
      resid = std::max(resid, std::abs(pl(jt.times[k]) - (1.0 - partial)));
    }
    resid = std::max(resid, std::abs(pl(last + 1.0) - (1.0 - partial)));
    report.checks.push_back(unconditional("volterra-failure", resid, tol));
  }

  // (3) self-consistency equation residual at every grid point
  {
    double resid = sc_converged ? 0.0 : sc_failure_residual;
    if (sc_converged) {
      for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const double t = grid[gi];
        const double sc_t = sc(t);
        double censor_sum = 0.0;
        for (std::size_t j = 0; j < m && jt.times[j] <= t; ++j) {
          censor_sum += static_cast<double>(jt.censorings[j]) *
                        guarded_ratio(sc_t, sc(jt.times[j]));
        }
        resid = std::max(resid, std::abs(sc_t - y_after_at(gi) / n - censor_sum / n));
      }
    }
    IdentityCheck check = unconditional("sc-fixed-point", resid, tol);
    check.passed = check.passed && sc_converged;
    report.checks.push_back(check);
  }

  // (4) the self-consistent estimator equals the product-limit estimator
  //     before the last observed time
  {
    double resid = sc_converged ? 0.0 : sc_failure_residual;
    if (sc_converged) {
      resid = std::abs(sc(0.0) - pl(0.0));
      for (std::size_t k = 0; k + 1 < m; ++k) {
        resid = std::max(resid, std::abs(sc(jt.times[k]) - pl(jt.times[k])));
      }
    }
    IdentityCheck check = unconditional("sc-equals-pl-before-tail", resid, tol);
    check.passed = check.passed && sc_converged;
    report.checks.push_back(check);
  }

  // (5) factorization Y(t+)/n = S_PL(t) K(t), plus its left-limit version
  //     Y(u)/n = S_PL(u-) K(u-)
  {
    double resid = 0.0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      resid = std::max(resid, std::abs(y_after_at(gi) / n - pl(grid[gi]) * k_dag(grid[gi])));
      if (gi > 0) {
        resid = std::max(resid, std::abs(y_at(gi) / n -
                                         pl.left_limit(grid[gi]) * k_dag.left_limit(grid[gi])));
      }
    }
    report.checks.push_back(unconditional("factorization", resid, tol));
  }

  // (6) the IPCW distribution-function estimator equals 1 - S_PL everywhere
  {
    double resid = 0.0;
    for (double t : grid) {
      resid = std::max(resid, std::abs(f_ipcw(t) - (1.0 - pl(t))));
    }
    report.checks.push_back(unconditional("ipcw-cdf-equals-pl", resid, tol));
  }

  // (7) mass identity: n^-1 sum_i D_i / K(X_i-) + dC(X_(m)) / (n K(X_(m)-)) = 1
  {
    double failure_mass = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (jt.failures[k] == 0) continue;
      failure_mass += static_cast<double>(jt.failures[k]) / k_dag.left_limit(jt.times[k]);
    }
    failure_mass /= n;
    const double censored_mass =
        static_cast<double>(jt.censorings[m - 1]) / (n * k_dag.left_limit(last));
    report.checks.push_back(
        unconditional("mass-identity", std::abs(failure_mass + censored_mass - 1.0), tol));
  }

  // (8) S~_IPCW = 1 - F_IPCW everywhere iff everything at the last time is a
  //     failure; a strict witness must exist otherwise
  {
    double discrepancy = 0.0;
    for (double t : grid) {
      discrepancy = std::max(discrepancy, std::abs(s_tilde(t) - (1.0 - f_ipcw(t))));
    }
    report.checks.push_back(
        biconditional("tilde-condition", last_all_failures, discrepancy, tol));
  }

  // (9) the closed-form RTTR estimator equals the self-consistent estimator
  {
    double resid = sc_converged ? 0.0 : sc_failure_residual;
    if (sc_converged) {
      for (double t : grid) {
        resid = std::max(resid, std::abs(rttr_fit.estimate(t) - sc(t)));
      }
    }
    IdentityCheck check = unconditional("rttr-equals-sc", resid, tol);
    check.passed = check.passed && sc_converged;
    report.checks.push_back(check);
  }

  // (10) redistribution preserves mass: the ledger sums to one
  {
    double total = 0.0;
    for (double mass : rttr_fit.mass_ledger) total += mass;
    report.checks.push_back(unconditional("rttr-mass-sum", std::abs(total - 1.0), tol));
  }

  // (11) the two censoring product-limit forms agree before X_(m) iff no
  //      earlier time carries both a failure and a censoring
  {
    double discrepancy = std::abs(k_dag(0.0) - k_naive(0.0));
    for (std::size_t k = 0; k + 1 < m; ++k) {
      discrepancy =
          std::max(discrepancy, std::abs(k_dag(jt.times[k]) - k_naive(jt.times[k])));
    }
    report.checks.push_back(
        biconditional("censor-forms-agree", !common_disc, discrepancy, tol));
  }

  // (12) ordering: S_SC <= S_PL everywhere, with tail equality iff everything
  //      at the last time is a failure
  {
    IdentityCheck check;
    check.name = "ordering-sc-le-pl";
    check.tolerance = tol;
    check.condition_holds = last_all_failures;
    if (!sc_converged) {
      check.max_residual = sc_failure_residual;
      check.passed = false;
    } else {
      double violation = 0.0;  // how far SC ever rises above PL
      double tail_gap_deviation = 0.0;
      for (double t : grid) {
        violation = std::max(violation, sc(t) - pl(t));
      }
      if (last_all_failures) {
        for (double t : {last, last + 1.0}) {
          tail_gap_deviation = std::max(tail_gap_deviation, std::abs(pl(t) - sc(t)));
        }
        check.max_residual = std::max(violation, tail_gap_deviation);
        check.passed = check.max_residual <= tol;
      } else {
        const double gap = pl(last) - sc(last);
        check.max_residual = violation;
        check.passed = violation <= tol && gap > tol;
      }
    }
    report.checks.push_back(check);
  }

  return report;
}

std::pair<double, double> km_tail_interval(const JumpTable& jt) {
  return {0.0, product_limit_failure(jt)(jt.last_time())};
}

}  // namespace survkit
