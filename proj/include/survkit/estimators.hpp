#pragma once

#include <stdexcept>
#include <vector>

#include "survkit/jump_table.hpp"
#include "survkit/step_function.hpp"

namespace survkit {

// Evaluation past the domain of a restricted estimator.
class DomainExceeded : public std::runtime_error {
 public:
  DomainExceeded(double t, double upper);
  double t() const { return t_; }
  double upper() const { return upper_; }

 private:
  double t_;
  double upper_;
};

// A plug-in survival curve hit zero (or below) where it must stay positive.
class NonPositiveSurvival : public std::runtime_error {
 public:
  explicit NonPositiveSurvival(double t);
  double t() const { return t_; }

 private:
  double t_;
};

// An inverse-probability weight denominator K(X_i-) vanished at a failure.
class ZeroWeight : public std::runtime_error {
 public:
  explicit ZeroWeight(double time);
  double time() const { return time_; }

 private:
  double time_;
};

// Fixed-point iteration exhausted its iteration budget; carries the last
// iterate and its sup-norm change.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(StepFunction last_iterate, double residual, int iterations);
  const StepFunction& last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  StepFunction last_iterate_;
  double residual_;
  int iterations_;
};

// Step function restricted to [0, upper] (inclusive) or [0, upper)
// (exclusive). Evaluation outside the domain throws DomainExceeded; left
// limits are defined up to and including the boundary.
class BoundedStepFunction {
 public:
  BoundedStepFunction(StepFunction fn, double upper, bool upper_inclusive);

  double operator()(double t) const;
  double left_limit(double t) const;

  const StepFunction& unrestricted() const { return fn_; }
  double upper() const { return upper_; }
  bool upper_inclusive() const { return upper_inclusive_; }

 private:
  StepFunction fn_;
  double upper_;
  bool upper_inclusive_;
};

struct SelfConsistentResult {
  StepFunction estimate;  // S_SC on t >= 0; zero wherever the naive estimate is zero
  int iterations;
  double final_residual;  // sup over unique times of |S_k - S_{k-1}|
};

struct RttrResult {
  StepFunction estimate;             // S_RTTR = 1 - cumulative mass
  std::vector<double> jump_weights;  // J_(k) = n^-1 prod_{j<k} (1 + dC_j / Y(X_(j)+))
  std::vector<double> mass_ledger;   // J_(k) dN_k for k < m, J_(m) Y(X_(m)) at k = m
};

// S_0(t) = n^-1 sum_i I{X_i > t} = Y(t+)/n.
StepFunction naive_survival(const JumpTable& jt);

// S_PL(t) = prod_{u <= t} (1 - dN(u)/Y(u)); constant for t >= X_(m).
StepFunction product_limit_failure(const JumpTable& jt);

// K(t) = prod_{u <= t} (1 - dC(u)/Y†(u)), the censoring product-limit form
// that stays correct under failure/censoring ties; 0/0 = 0 past the end.
StepFunction product_limit_censoring_dagger(const JumpTable& jt);

// K(t) = prod_{u <= t} (1 - dC(u)/Y(u)): the swap-the-labels recipe. Agrees
// with the dagger form only when no time before X_(m) carries both a failure
// and a censoring.
StepFunction product_limit_censoring_naive(const JumpTable& jt);

// [prod_{u <= t} (1 + dC(u)/Y(u+))]^-1 on [0, t_max], t_max < X_(m). Equals
// the dagger form on its domain.
BoundedStepFunction censoring_via_inverse_product(const JumpTable& jt, double t_max);

// t -> Y(t+) / (n * s_hat(t)) on [0, X_(m)). With s_hat the product-limit
// failure estimator this reproduces the dagger censoring form.
BoundedStepFunction censoring_from_relation(const StepFunction& s_hat, const JumpTable& jt);

// Fixed-point iteration of the self-consistency equation
//   S(t) = S_0(t) + n^-1 sum_i (1-D_i) I{X_i <= t} S(t)/S(X_i)
// on the unique-time grid, started at S_0, until the sup-norm sweep change
// and the equation residual both drop to tol. Throws NoConvergence past
// max_iter.
SelfConsistentResult self_consistent(const JumpTable& jt, double tol = 1e-12,
                                     int max_iter = 10000);

// F_IPCW(t) = n^-1 sum_i D_i I{X_i <= t} / k_hat(X_i-).
StepFunction ipcw_cdf(const JumpTable& jt, const StepFunction& k_hat);

// S~_IPCW(t) = n^-1 sum_i D_i I{X_i > t} / k_hat(X_i-); always 0 at X_(m).
StepFunction ipcw_survival_tilde(const JumpTable& jt, const StepFunction& k_hat);

// Redistribute-to-the-right estimator in closed form: jump weights J_(k)
// accumulated left to right, mass dN(X_(k)) J_(k) at interior times and
// Y(X_(m)) J_(m) at the last time.
RttrResult rttr(const JumpTable& jt);

}  // namespace survkit
