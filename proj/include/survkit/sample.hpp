#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace survkit {

// One subject: observed time X = min(T, U) and event indicator
// D = I{T <= U} (1 = failure, 0 = censored).
struct Observation {
  double time;
  int status;
};

class ValidationError : public std::runtime_error {
 public:
  enum class Kind { EmptySample, NonPositiveTime, NonFiniteTime, InvalidStatus };

  ValidationError(Kind kind, std::size_t index);

  Kind kind() const { return kind_; }
  // Index of the offending observation (input order); 0 for EmptySample.
  std::size_t index() const { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

// Validated, immutable collection of observations; input order preserved.
class CensoredSample {
 public:
  explicit CensoredSample(std::vector<Observation> observations);

  const std::vector<Observation>& observations() const { return observations_; }
  std::size_t n() const { return observations_.size(); }

 private:
  std::vector<Observation> observations_;
};

// Accepts raw (time, status) pairs iff every time is finite and positive and
// every status is 0 or 1.
CensoredSample validate_sample(const std::vector<std::pair<double, int>>& raw);

}  // namespace survkit
