#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "survkit/simulate.hpp"

namespace survkit {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parses a simulation config document:
//   { "failureLaw":   { "kind": "exponential", "rate": 1.0 }
//                   | { "kind": "discreteUniform", "support": [1, 2, 3] }
//                   | { "kind": "geometricGrid", "successProb": 0.4,
//                       "gridStep": 0.5 },
//     "censoringLaw": { ... },
//     "n": 100,
//     "seed": 42 }
// Throws ConfigError on any malformed or out-of-range field.
SimConfig sim_config_from_json(const nlohmann::json& doc);

// Reads and parses a config file; ConfigError covers unreadable files too.
SimConfig load_sim_config(const std::string& path);

}  // namespace survkit
