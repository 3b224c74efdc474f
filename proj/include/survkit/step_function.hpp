#pragma once

#include <vector>

namespace survkit {

// Right-continuous piecewise-constant function on [0, inf) with left-limit
// access. Value is initial_value on [0, jump_times[0]) and
// values_after_jump[k] on [jump_times[k], jump_times[k+1]).
class StepFunction {
 public:
  explicit StepFunction(double constant_value = 0.0);
  StepFunction(double initial_value, std::vector<double> jump_times,
               std::vector<double> values_after_jump);

  // Value at t >= 0 (right-continuous).
  double operator()(double t) const;

  // Limit from the left at t > 0: the value held just before t.
  double left_limit(double t) const;

  double initial_value() const { return initial_value_; }
  const std::vector<double>& jump_times() const { return jump_times_; }
  const std::vector<double>& values_after_jump() const { return values_; }

 private:
  double initial_value_;
  std::vector<double> jump_times_;
  std::vector<double> values_;
};

}  // namespace survkit
