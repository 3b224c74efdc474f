#include "survkit/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace survkit {

StepFunction::StepFunction(double constant_value) : initial_value_(constant_value) {}

StepFunction::StepFunction(double initial_value, std::vector<double> jump_times,
                           std::vector<double> values_after_jump)
    : initial_value_(initial_value),
      jump_times_(std::move(jump_times)),
      values_(std::move(values_after_jump)) {
  if (jump_times_.size() != values_.size()) {
    throw std::invalid_argument("StepFunction: jump_times and values size mismatch");
  }
  double prev = 0.0;
  for (double t : jump_times_) {
    if (!std::isfinite(t) || t <= prev) {
      throw std::invalid_argument("StepFunction: jump times must be finite, positive, strictly increasing");
    }
    prev = t;
  }
}

double StepFunction::operator()(double t) const {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("StepFunction: eval requires t >= 0");
  }
  // first jump strictly after t; value held on the interval containing t
  auto it = std::upper_bound(jump_times_.begin(), jump_times_.end(), t);
  if (it == jump_times_.begin()) return initial_value_;
  return values_[static_cast<std::size_t>(it - jump_times_.begin()) - 1];
}

double StepFunction::left_limit(double t) const {
  if (!(t > 0.0)) {
    throw std::invalid_argument("StepFunction: left_limit requires t > 0");
  }
  // first jump at or after t; the value just before t precedes it
  auto it = std::lower_bound(jump_times_.begin(), jump_times_.end(), t);
  if (it == jump_times_.begin()) return initial_value_;
  return values_[static_cast<std::size_t>(it - jump_times_.begin()) - 1];
}

}  // namespace survkit
