#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <variant>
#include <vector>

#include "survkit/sample.hpp"

namespace survkit {

struct ExponentialLaw {
  double rate;  // > 0
};

// Equal mass on each support point; draws land exactly on the stored values
// so ties across streams are exact.
struct DiscreteUniformLaw {
  std::vector<double> support;  // strictly increasing, all > 0
};

// P{T = k * grid_step} = p (1-p)^(k-1), k = 1, 2, ...
struct GeometricGridLaw {
  double success_prob;  // in (0, 1)
  double grid_step;     // > 0
};

using LawSpec = std::variant<ExponentialLaw, DiscreteUniformLaw, GeometricGridLaw>;

// Throws std::invalid_argument when parameters leave their stated ranges.
void validate_law(const LawSpec& law);

struct SimConfig {
  LawSpec failure_law;
  LawSpec censoring_law;
  std::int64_t n = 0;   // >= 1
  std::uint64_t seed = 0;
};

// Draws T_i from the failure law and U_i independently from the censoring
// law, emitting (X_i, D_i) with X_i = min(T_i, U_i), D_i = I{T_i <= U_i}.
// Bit-reproducible per (seed, n): stream 0 of the seed drives T, stream 1
// drives U (see rng_substream).
CensoredSample generate(const SimConfig& config);

// Exact evaluator of P{T > t}: closed form for the exponential law,
// right-continuous step survival for the discrete laws.
std::function<double(double)> true_survival(const LawSpec& law);

namespace detail {

// The named random source: std::mt19937_64 seeded with
// seed_seq {seed mod 2^32, seed div 2^32, stream}. Uniform variates take the
// top 53 bits of one engine output, offset to the open interval (0, 1), so
// transformed draws stay strictly positive.
std::mt19937_64 rng_substream(std::uint64_t seed, std::uint32_t stream);
double uniform_open01(std::mt19937_64& engine);

}  // namespace detail

}  // namespace survkit
