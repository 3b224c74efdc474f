#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "survkit/jump_table.hpp"
#include "survkit/sim_json.hpp"
#include "survkit/simulate.hpp"

using namespace survkit;

namespace {

SimConfig exp_exp(double rate_t, double rate_u, std::int64_t n, std::uint64_t seed) {
  return SimConfig{ExponentialLaw{rate_t}, ExponentialLaw{rate_u}, n, seed};
}

}  // namespace

TEST_CASE("same seed and config reproduce the sample bit for bit") {
  const SimConfig config = exp_exp(1.0, 0.5, 200, 77);
  const CensoredSample first = generate(config);
  const CensoredSample second = generate(config);
  REQUIRE(first.n() == second.n());
  for (std::size_t i = 0; i < first.n(); ++i) {
    CHECK(first.observations()[i].time == second.observations()[i].time);
    CHECK(first.observations()[i].status == second.observations()[i].status);
  }
  const CensoredSample other = generate(exp_exp(1.0, 0.5, 200, 78));
  bool any_difference = false;
  for (std::size_t i = 0; i < first.n(); ++i) {
    any_difference = any_difference || first.observations()[i].time != other.observations()[i].time;
  }
  CHECK(any_difference);
}

TEST_CASE("substreams are deterministic and distinct") {
  std::mt19937_64 t_stream = detail::rng_substream(42, 0);
  std::mt19937_64 t_again = detail::rng_substream(42, 0);
  std::mt19937_64 u_stream = detail::rng_substream(42, 1);
  CHECK(t_stream() == t_again());
  std::mt19937_64 t_third = detail::rng_substream(42, 0);
  CHECK(t_third() != u_stream());

  std::mt19937_64 engine = detail::rng_substream(7, 0);
  for (int i = 0; i < 1000; ++i) {
    const double u = detail::uniform_open01(engine);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("golden sample pinned for exponential/exponential, n = 4, seed 20240101") {
  const CensoredSample sample = generate(exp_exp(1.0, 1.0, 4, 20240101));
  const std::vector<Observation> expected = {{0.00063035635536896602, 1},
                                             {0.027845217975798295, 1},
                                             {0.033284920296698502, 0},
                                             {0.10708215044551325, 1}};
  REQUIRE(sample.n() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(sample.observations()[i].time == expected[i].time);
    CHECK(sample.observations()[i].status == expected[i].status);
  }
}

TEST_CASE("sample of size one") {
  const CensoredSample sample = generate(exp_exp(1.0, 1.0, 1, 5));
  CHECK(sample.n() == 1);
  CHECK(sample.observations()[0].time > 0.0);
}

TEST_CASE("discrete draws snap exactly onto the support") {
  const std::vector<double> support{1.0, 2.0, 3.0};
  const SimConfig config{DiscreteUniformLaw{support}, DiscreteUniformLaw{support}, 300, 11};
  const CensoredSample sample = generate(config);
  std::set<double> seen;
  for (const Observation& obs : sample.observations()) {
    CHECK((obs.time == 1.0 || obs.time == 2.0 || obs.time == 3.0));
    seen.insert(obs.time);
  }
  CHECK(seen.size() == 3);  // all support points show up at n = 300
}

TEST_CASE("common-support discrete laws produce failure/censoring ties") {
  int datasets_with_tie = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SimConfig config{DiscreteUniformLaw{{1.0, 2.0, 3.0}},
                           DiscreteUniformLaw{{1.0, 2.0, 3.0}}, 30, seed};
    const JumpTable jt = build_jump_table(generate(config));
    datasets_with_tie += jt.common_discontinuity_before_last() ? 1 : 0;
  }
  CHECK(datasets_with_tie >= 1);
}

TEST_CASE("true survival evaluators") {
  const auto exp_surv = true_survival(ExponentialLaw{1.0});
  CHECK(exp_surv(0.0) == 1.0);
  CHECK(exp_surv(1.0) == std::exp(-1.0));

  const auto disc_surv = true_survival(DiscreteUniformLaw{{1.0, 2.0, 3.0}});
  CHECK(disc_surv(0.0) == 1.0);
  CHECK(disc_surv(0.999) == 1.0);
  CHECK(disc_surv(1.0) == 2.0 / 3.0);
  CHECK(disc_surv(2.5) == 1.0 / 3.0);
  CHECK(disc_surv(3.0) == 0.0);
  CHECK(disc_surv(50.0) == 0.0);

  const auto geom_surv = true_survival(GeometricGridLaw{0.5, 2.0});
  CHECK(geom_surv(1.9) == 1.0);
  CHECK(geom_surv(2.0) == 0.5);
  CHECK(geom_surv(3.9) == 0.5);
  CHECK(geom_surv(4.0) == 0.25);
  // evaluation is consistent with how draws construct grid values k * step
  const auto fine = true_survival(GeometricGridLaw{0.5, 0.1});
  for (std::int64_t k = 1; k <= 5; ++k) {
    const double t = static_cast<double>(k) * 0.1;
    CHECK(fine(t) == std::pow(0.5, static_cast<double>(k)));
  }
}

TEST_CASE("law and config validation") {
  CHECK_THROWS_AS(validate_law(ExponentialLaw{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_law(ExponentialLaw{-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_law(DiscreteUniformLaw{{}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_law(DiscreteUniformLaw{{2.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_law(DiscreteUniformLaw{{0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_law(GeometricGridLaw{0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_law(GeometricGridLaw{1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_law(GeometricGridLaw{0.3, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(generate(exp_exp(1.0, 1.0, 0, 1)), std::invalid_argument);
}

TEST_CASE("empirical marginal of X tracks S(t) K(t) under independence") {
  const SimConfig config = exp_exp(1.0, 0.5, 100000, 314159);
  const CensoredSample sample = generate(config);
  for (double t : {0.2, 0.5, 1.0}) {
    long beyond = 0;
    for (const Observation& obs : sample.observations()) beyond += obs.time > t ? 1 : 0;
    const double fraction = static_cast<double>(beyond) / static_cast<double>(sample.n());
    CHECK(std::abs(fraction - std::exp(-1.5 * t)) < 0.01);
  }
}

TEST_CASE("simulation config parses from JSON") {
  const nlohmann::json doc = {
      {"failureLaw", {{"kind", "exponential"}, {"rate", 1.5}}},
      {"censoringLaw", {{"kind", "discreteUniform"}, {"support", {1.0, 2.0, 3.0}}}},
      {"n", 25},
      {"seed", 7}};
  const SimConfig config = sim_config_from_json(doc);
  CHECK(config.n == 25);
  CHECK(config.seed == 7);
  CHECK(std::get<ExponentialLaw>(config.failure_law).rate == 1.5);
  CHECK(std::get<DiscreteUniformLaw>(config.censoring_law).support.size() == 3);

  const nlohmann::json geometric = {
      {"failureLaw", {{"kind", "geometricGrid"}, {"successProb", 0.4}, {"gridStep", 0.5}}},
      {"censoringLaw", {{"kind", "exponential"}, {"rate", 1.0}}},
      {"n", 5},
      {"seed", 1}};
  CHECK(std::get<GeometricGridLaw>(sim_config_from_json(geometric).failure_law).grid_step == 0.5);

  nlohmann::json bad_kind = doc;
  bad_kind["failureLaw"]["kind"] = "weibull";
  CHECK_THROWS_AS(sim_config_from_json(bad_kind), ConfigError);

  nlohmann::json missing_n = doc;
  missing_n.erase("n");
  CHECK_THROWS_AS(sim_config_from_json(missing_n), ConfigError);

  nlohmann::json zero_n = doc;
  zero_n["n"] = 0;
  CHECK_THROWS_AS(sim_config_from_json(zero_n), ConfigError);

  nlohmann::json bad_rate = doc;
  bad_rate["failureLaw"]["rate"] = -2.0;
  CHECK_THROWS_AS(sim_config_from_json(bad_rate), ConfigError);

  CHECK_THROWS_AS(load_sim_config("/nonexistent/config.json"), ConfigError);
}
