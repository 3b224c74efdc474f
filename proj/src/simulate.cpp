#include "survkit/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace survkit {

namespace detail {

std::mt19937_64 rng_substream(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

double uniform_open01(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

void validate_law(const LawSpec& law) {
  std::visit(
      [](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ExponentialLaw>) {
          if (!(l.rate > 0.0) || !std::isfinite(l.rate)) {
            throw std::invalid_argument("exponential law: rate must be positive and finite");
          }
        } else if constexpr (std::is_same_v<T, DiscreteUniformLaw>) {
          if (l.support.empty()) {
            throw std::invalid_argument("discrete uniform law: support must be nonempty");
          }
          double prev = 0.0;
          for (double v : l.support) {
            if (!std::isfinite(v) || v <= prev) {
              throw std::invalid_argument(
                  "discrete uniform law: support must be positive, finite, strictly increasing");
            }
            prev = v;
          }
        } else {
          if (!(l.success_prob > 0.0) || !(l.success_prob < 1.0)) {
            throw std::invalid_argument("geometric grid law: success probability must lie in (0,1)");
          }
          if (!(l.grid_step > 0.0) || !std::isfinite(l.grid_step)) {
            throw std::invalid_argument("geometric grid law: grid step must be positive and finite");
          }
        }
      },
      law);
}

namespace {

double draw(const LawSpec& law, std::mt19937_64& engine) {
  const double u = detail::uniform_open01(engine);
  return std::visit(
      [u](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ExponentialLaw>) {
          return -std::log(u) / l.rate;
        } else if constexpr (std::is_same_v<T, DiscreteUniformLaw>) {
          const std::size_t size = l.support.size();
          const auto idx = std::min<std::size_t>(
              size - 1, static_cast<std::size_t>(u * static_cast<double>(size)));
          return l.support[idx];  // exact support value, so cross-stream ties are exact
        } else {
          // inversion: K = ceil(log(u) / log(1-p)) has P{K = k} = p (1-p)^(k-1)
          const double ratio = std::log(u) / std::log1p(-l.success_prob);
          const auto k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(ratio)));
          return static_cast<double>(k) * l.grid_step;
        }
      },
      law);
}

}  // namespace

CensoredSample generate(const SimConfig& config) {
  validate_law(config.failure_law);
  validate_law(config.censoring_law);
  if (config.n < 1) throw std::invalid_argument("generate: n must be at least 1");

  std::mt19937_64 failure_engine = detail::rng_substream(config.seed, 0);
  std::mt19937_64 censoring_engine = detail::rng_substream(config.seed, 1);

  std::vector<Observation> observations;
  observations.reserve(static_cast<std::size_t>(config.n));
  for (std::int64_t i = 0; i < config.n; ++i) {
    const double t = draw(config.failure_law, failure_engine);
    const double u = draw(config.censoring_law, censoring_engine);
    observations.push_back(Observation{std::min(t, u), t <= u ? 1 : 0});
  }
  return CensoredSample(std::move(observations));
}

std::function<double(double)> true_survival(const LawSpec& law) {
  validate_law(law);
  return std::visit(
      [](const auto& l) -> std::function<double(double)> {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ExponentialLaw>) {
          const double rate = l.rate;
          return [rate](double t) { return std::exp(-rate * t); };
        } else if constexpr (std::is_same_v<T, DiscreteUniformLaw>) {
          const std::vector<double> support = l.support;
          return [support](double t) {
            const auto beyond = support.end() -
                                std::upper_bound(support.begin(), support.end(), t);
            return static_cast<double>(beyond) / static_cast<double>(support.size());
          };
        } else {
          const double q = 1.0 - l.success_prob;
          const double step = l.grid_step;
          return [q, step](double t) {
            if (t < step) return 1.0;
            // count of grid points k*step <= t, robust to the float slop in
            // reconstructing k*step the same way draws produce it
            auto k = static_cast<std::int64_t>(std::floor(t / step));
            while (static_cast<double>(k + 1) * step <= t) ++k;
            while (k >= 1 && static_cast<double>(k) * step > t) --k;
            return std::pow(q, static_cast<double>(k));
          };
        }
      },
      law);
}

}  // namespace survkit
