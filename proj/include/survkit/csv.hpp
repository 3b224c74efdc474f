#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "survkit/sample.hpp"
#include "survkit/step_function.hpp"

namespace survkit {

class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& what, std::size_t line);
  // 1-based file line (header is line 1).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Shortest decimal form that re-parses to the same double.
std::string format_double(double value);

// Reads `time,status` rows: decimal time, integer status. Blank lines are
// skipped; anything else malformed throws CsvError with its line number.
std::vector<std::pair<double, int>> read_raw_observations(std::istream& in);

// read_raw_observations followed by validate_sample.
CensoredSample read_sample_csv(std::istream& in);

void write_sample_csv(std::ostream& out, const CensoredSample& sample);

// One `t,value,left_limit` row per evaluation point. The left-limit column
// at t = 0 carries the value at 0 (no left limit exists there).
void write_curve_csv(std::ostream& out, const StepFunction& fn,
                     const std::vector<double>& eval_points);

}  // namespace survkit
