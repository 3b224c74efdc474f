#include "survkit/sample.hpp"

#include <cmath>
#include <string>

namespace survkit {

namespace {

std::string describe(ValidationError::Kind kind, std::size_t index) {
  switch (kind) {
    case ValidationError::Kind::EmptySample:
      return "empty sample";
    case ValidationError::Kind::NonPositiveTime:
      return "non-positive time at observation " + std::to_string(index);
    case ValidationError::Kind::NonFiniteTime:
      return "non-finite time at observation " + std::to_string(index);
    case ValidationError::Kind::InvalidStatus:
      return "status outside {0,1} at observation " + std::to_string(index);
  }
  return "invalid sample";
}

}  // namespace

ValidationError::ValidationError(Kind kind, std::size_t index)
    : std::runtime_error(describe(kind, index)), kind_(kind), index_(index) {}

CensoredSample::CensoredSample(std::vector<Observation> observations)
    : observations_(std::move(observations)) {
  if (observations_.empty()) {
    throw ValidationError(ValidationError::Kind::EmptySample, 0);
  }
  for (std::size_t i = 0; i < observations_.size(); ++i) {
    const Observation& obs = observations_[i];
    if (!std::isfinite(obs.time)) {
      throw ValidationError(ValidationError::Kind::NonFiniteTime, i);
    }
    if (obs.time <= 0.0) {
      throw ValidationError(ValidationError::Kind::NonPositiveTime, i);
    }
    if (obs.status != 0 && obs.status != 1) {
      throw ValidationError(ValidationError::Kind::InvalidStatus, i);
    }
  }
}

CensoredSample validate_sample(const std::vector<std::pair<double, int>>& raw) {
  std::vector<Observation> observations;
  observations.reserve(raw.size());
  for (const auto& [time, status] : raw) {
    observations.push_back(Observation{time, status});
  }
  return CensoredSample(std::move(observations));
}

}  // namespace survkit
