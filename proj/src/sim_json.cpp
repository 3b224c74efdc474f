#include "survkit/sim_json.hpp"

#include <fstream>

namespace survkit {

namespace {

LawSpec law_from_json(const nlohmann::json& doc, const std::string& field) {
  if (!doc.contains(field) || !doc[field].is_object()) {
    throw ConfigError("config field '" + field + "' must be an object");
  }
  const nlohmann::json& law = doc[field];
  if (!law.contains("kind") || !law["kind"].is_string()) {
    throw ConfigError("law '" + field + "' needs a string 'kind'");
  }
  const std::string kind = law["kind"].get<std::string>();
  try {
    if (kind == "exponential") {
      return ExponentialLaw{law.at("rate").get<double>()};
    }
    if (kind == "discreteUniform") {
      return DiscreteUniformLaw{law.at("support").get<std::vector<double>>()};
    }
    if (kind == "geometricGrid") {
      return GeometricGridLaw{law.at("successProb").get<double>(),
                              law.at("gridStep").get<double>()};
    }
  } catch (const nlohmann::json::exception& err) {
    throw ConfigError("law '" + field + "': " + err.what());
  }
  throw ConfigError("law '" + field + "': unknown kind '" + kind + "'");
}

}  // namespace

SimConfig sim_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  SimConfig config{law_from_json(doc, "failureLaw"), law_from_json(doc, "censoringLaw"), 0, 0};
  try {
    config.n = doc.at("n").get<std::int64_t>();
    config.seed = doc.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& err) {
    throw ConfigError(std::string("config: ") + err.what());
  }
  if (config.n < 1) throw ConfigError("config: n must be at least 1");
  try {
    validate_law(config.failure_law);
    validate_law(config.censoring_law);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string("config: ") + err.what());
  }
  return config;
}

SimConfig load_sim_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& err) {
    throw ConfigError("config parse failure in " + path + ": " + err.what());
  }
  return sim_config_from_json(doc);
}

}  // namespace survkit
