#include "survkit/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <system_error>

namespace survkit {

CsvError::CsvError(const std::string& what, std::size_t line)
    : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, std::size_t line) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    throw CsvError("malformed time value '" + text + "'", line);
  }
  return value;
}

int parse_status(const std::string& text, std::size_t line) {
  int value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    throw CsvError("malformed status value '" + text + "'", line);
  }
  return value;
}

}  // namespace

std::vector<std::pair<double, int>> read_raw_observations(std::istream& in) {
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  std::vector<std::pair<double, int>> raw;

  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (!header_seen) {
      if (text != "time,status") {
        throw CsvError("expected header 'time,status', got '" + text + "'", line_number);
      }
      header_seen = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
      throw CsvError("expected exactly two comma-separated fields", line_number);
    }
    raw.emplace_back(parse_double(trim(text.substr(0, comma)), line_number),
                     parse_status(trim(text.substr(comma + 1)), line_number));
  }
  if (!header_seen) {
    throw CsvError("missing header 'time,status'", line_number == 0 ? 1 : line_number);
  }
  return raw;
}

CensoredSample read_sample_csv(std::istream& in) {
  return validate_sample(read_raw_observations(in));
}

void write_sample_csv(std::ostream& out, const CensoredSample& sample) {
  out << "time,status\n";
  for (const Observation& obs : sample.observations()) {
    out << format_double(obs.time) << ',' << obs.status << '\n';
  }
}

void write_curve_csv(std::ostream& out, const StepFunction& fn,
                     const std::vector<double>& eval_points) {
  out << "t,value,left_limit\n";
  for (double t : eval_points) {
    const double value = fn(t);
    const double left = t > 0.0 ? fn.left_limit(t) : value;
    out << format_double(t) << ',' << format_double(value) << ',' << format_double(left)
        << '\n';
  }
}

}  // namespace survkit
