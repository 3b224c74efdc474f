#pragma once

#include <stdexcept>

namespace survkit {

// Guarded division carrying the 0/0 = 0 convention. A nonzero numerator over
// a zero denominator is a programming error, never a NaN.
inline double guarded_ratio(double numerator, double denominator) {
  if (denominator == 0.0) {
    if (numerator == 0.0) return 0.0;
    throw std::logic_error("guarded_ratio: nonzero numerator over zero denominator");
  }
  return numerator / denominator;
}

}  // namespace survkit
