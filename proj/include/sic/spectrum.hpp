#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sic/curve.hpp"

namespace sic {

/// max over k = 1..K of (V(0) - V(k)) / k, floored at 0. Returns 0 when K = 0.
double lambda_max(const ErrorCurve& curve);

/// Smallest k minimizing V(k) + lambda * k. Returns 0 for lambda >= lambda_max.
std::size_t argmin_cost(const ErrorCurve& curve, double lambda);

/// Lebesgue measures |S_k| of the lambda-sets on which k minimizes the cost.
struct IntervalPartition {
  std::vector<double> measures;  // |S_0|, ..., |S_K|
  double lambda_max = 0.0;
  /// Lower-convex-hull vertices of {(k, V(k))}, ascending, starting at 0.
  std::vector<std::size_t> hull;
  /// Upper ends of the positive-measure intervals, ascending; the last one is lambda_max.
  std::vector<double> breakpoints;
};

/// Exact partition from the lower convex hull of the curve's points.
///
/// Consecutive hull vertices (a, V_a), (b, V_b) meet at lambda = (V_a - V_b) / (b - a).
/// Points within rounding of a hull edge are treated as collinear and get
/// measure 0 under the smallest-k tie-break.
IntervalPartition interval_partition_exact(const ErrorCurve& curve);

enum class WeightMethod { exact, grid, mc };

std::string_view to_string(WeightMethod method);
/// Throws InputError for anything but "exact", "grid" or "mc".
WeightMethod parse_weight_method(std::string_view name);

/// Probability mass over model dimensions, w_0 = 0 and sum_{k>=1} w_k = 1.
///
/// A constant curve (lambda_max = 0) yields `degenerate = true` with all weights 0.
struct WeightSpectrum {
  std::vector<double> weights;
  WeightMethod method = WeightMethod::exact;
  double lambda_max = 0.0;
  std::size_t samples = 0;     // grid and mc
  std::uint64_t seed = 0;      // mc
  std::size_t partitions = 0;  // mc
  bool degenerate = false;

  std::size_t max_dim() const noexcept { return weights.empty() ? 0 : weights.size() - 1; }
};

inline constexpr std::size_t kDefaultMcPartitions = 8;

WeightSpectrum weights_exact(const ErrorCurve& curve);

/// Monte Carlo weights from `samples` uniform draws of lambda on [0, lambda_max).
///
/// Draws are split into `partitions` contiguous blocks, each with its own
/// generator seeded from (seed, block index). The result depends only on
/// (seed, samples, partitions), never on how many threads run the blocks.
WeightSpectrum weights_mc(const ErrorCurve& curve, std::size_t samples, std::uint64_t seed,
                          std::size_t partitions = kDefaultMcPartitions);

/// Deterministic weights from the midpoints of `samples` equal subintervals of [0, lambda_max].
WeightSpectrum weights_grid(const ErrorCurve& curve, std::size_t samples);

/// W_1, ..., W_K. All zeros for a degenerate spectrum.
std::vector<double> cumulative(const WeightSpectrum& spectrum);

/// Indices with strictly positive weight, ascending.
std::vector<std::size_t> elbow_set(const WeightSpectrum& spectrum);

/// Slack allowed when comparing a cumulative weight against a confidence level.
inline constexpr double kLevelSlack = 1e-12;

/// min{k : W_k >= level}; 0 for a degenerate spectrum. Throws InputError unless 0 < level <= 1.
std::size_t select(const WeightSpectrum& spectrum, double level);

}  // namespace sic
