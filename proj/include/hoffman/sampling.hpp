#ifndef HOFFMAN_SAMPLING_HPP
#define HOFFMAN_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hoffman/active_sets.hpp"

namespace hoffman {

// Floating-point brute-force estimators. Nothing in here feeds the exact
// verdicts; these exist to cross-check them.

struct SampleConfig {
  std::size_t sample_count = 100000;
  std::uint64_t seed = 1;
  double box_radius = 10.0;  ///< half-width of the point-sampling box
};

/// min over sampled unit h of max_i d_i^T h. Never below the true v(D).
/// Deterministic for a fixed config regardless of thread count.
double sample_minmax(std::span<const Vec> points, const SampleConfig& cfg);

/// max_{i in J(x)} a_i^T h, with J(x) the exact active set at x.
double directional_derivative(const InequalitySystem& sys, const Vec& x, std::span<const double> h);

/// (phi(x + t h) - phi(x)) / t in floating point.
double difference_quotient(const InequalitySystem& sys, const Vec& x, std::span<const double> h, double t);

struct SigmaEstimate {
  std::optional<double> sigma;  ///< empty when no sampled point was infeasible
  std::size_t infeasible_samples = 0;
};

/// min of phi_+(x) / d(x, P) over points sampled uniformly in the box.
/// Requires P non-empty; throws std::invalid_argument otherwise.
SigmaEstimate estimate_sigma(const InequalitySystem& sys, const SampleConfig& cfg);

}  // namespace hoffman

#endif  // HOFFMAN_SAMPLING_HPP
