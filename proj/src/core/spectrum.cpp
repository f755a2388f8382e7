#include "sic/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <thread>

#include "sic/error.hpp"

namespace sic {
namespace {

// Smallest k in [first, K] minimizing values[k] + lambda * k.
std::size_t argmin_from(std::span<const double> values, double lambda, std::size_t first) {
  std::size_t best = first;
  double best_cost = values[first] + lambda * static_cast<double>(first);
  for (std::size_t k = first + 1; k < values.size(); ++k) {
    const double c = values[k] + lambda * static_cast<double>(k);
    if (c < best_cost) {
      best_cost = c;
      best = k;
    }
  }
  return best;
}

// Minimizer for a draw strictly below lambda_max. The empty model cannot win
// there, so k = 0 is only returned by rounding; excluding it keeps w_0 = 0.
std::size_t argmin_below_max(std::span<const double> values, double lambda) {
  return argmin_from(values, lambda, 1);
}

WeightSpectrum degenerate_spectrum(const ErrorCurve& curve, WeightMethod method) {
  WeightSpectrum spectrum;
  spectrum.weights.assign(curve.size(), 0.0);
  spectrum.method = method;
  spectrum.degenerate = true;
  return spectrum;
}

WeightSpectrum from_counts(const std::vector<std::size_t>& counts, std::size_t samples) {
  WeightSpectrum spectrum;
  spectrum.weights.resize(counts.size());
  const double m = static_cast<double>(samples);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    spectrum.weights[k] = static_cast<double>(counts[k]) / m;
  }
  spectrum.samples = samples;
  return spectrum;
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double lambda_max(const ErrorCurve& curve) {
  const auto v = curve.values();
  double best = 0.0;
  for (std::size_t k = 1; k < v.size(); ++k) {
    best = std::max(best, (v[0] - v[k]) / static_cast<double>(k));
  }
  return best;
}

std::size_t argmin_cost(const ErrorCurve& curve, double lambda) {
  if (!(lambda >= 0.0)) throw InputError("penalty slope must be non-negative");
  if (lambda >= lambda_max(curve)) return 0;
  return argmin_from(curve.values(), lambda, 0);
}

IntervalPartition interval_partition_exact(const ErrorCurve& curve) {
  const auto v = curve.values();
  const std::size_t n = v.size();
  constexpr double kCollinearSlack = 64.0 * std::numeric_limits<double>::epsilon();

  IntervalPartition out;
  out.measures.assign(n, 0.0);
  out.lambda_max = lambda_max(curve);

  // Lower hull, monotone chain; x = k is already sorted.
  auto& hull = out.hull;
  for (std::size_t c = 0; c < n; ++c) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double ba = static_cast<double>(b - a);
      const double ca = static_cast<double>(c - a);
      const double cross = ba * (v[c] - v[a]) - ca * (v[b] - v[a]);
      const double scale = std::max({std::abs(v[a]), std::abs(v[b]), std::abs(v[c])});
      if (cross > kCollinearSlack * ca * scale) break;
      hull.pop_back();
    }
    hull.push_back(c);
  }

  if (out.lambda_max <= 0.0) return out;

  // Vertex hull[i] minimizes the cost for lambda between the descent rates of
  // its outgoing and incoming edges; the first incoming rate is lambda_max.
  auto descent = [&](std::size_t i) {
    const std::size_t a = hull[i - 1];
    const std::size_t b = hull[i];
    return (v[a] - v[b]) / static_cast<double>(b - a);
  };
  double upper = out.lambda_max;
  for (std::size_t i = 1; i < hull.size() && upper > 0.0; ++i) {
    const double lower = i + 1 < hull.size() ? std::max(descent(i + 1), 0.0) : 0.0;
    if (upper > lower) {
      out.measures[hull[i]] = upper - lower;
      out.breakpoints.push_back(upper);
      upper = lower;
    }
  }
  std::reverse(out.breakpoints.begin(), out.breakpoints.end());
  return out;
}

std::string_view to_string(WeightMethod method) {
  switch (method) {
    case WeightMethod::exact: return "exact";
    case WeightMethod::grid: return "grid";
    case WeightMethod::mc: return "mc";
  }
  return "unknown";
}

WeightMethod parse_weight_method(std::string_view name) {
  if (name == "exact") return WeightMethod::exact;
  if (name == "grid") return WeightMethod::grid;
  if (name == "mc") return WeightMethod::mc;
  throw InputError("unknown weight method '" + std::string(name) + "' (expected exact, grid or mc)");
}

WeightSpectrum weights_exact(const ErrorCurve& curve) {
  const IntervalPartition partition = interval_partition_exact(curve);
  if (partition.lambda_max <= 0.0) return degenerate_spectrum(curve, WeightMethod::exact);

  double total = 0.0;
  for (std::size_t k = 1; k < partition.measures.size(); ++k) total += partition.measures[k];

  WeightSpectrum spectrum;
  spectrum.weights.resize(partition.measures.size());
  for (std::size_t k = 0; k < partition.measures.size(); ++k) {
    spectrum.weights[k] = partition.measures[k] / total;
  }
  spectrum.method = WeightMethod::exact;
  spectrum.lambda_max = partition.lambda_max;
  return spectrum;
}

WeightSpectrum weights_mc(const ErrorCurve& curve, std::size_t samples, std::uint64_t seed,
                          std::size_t partitions) {
  if (samples == 0) throw InputError("Monte Carlo sample count must be positive");
  if (partitions == 0) throw InputError("Monte Carlo partition count must be positive");
  const double lmax = lambda_max(curve);
  if (lmax <= 0.0) {
    auto spectrum = degenerate_spectrum(curve, WeightMethod::mc);
    spectrum.samples = samples;
    spectrum.seed = seed;
    spectrum.partitions = partitions;
    return spectrum;
  }

  const auto values = curve.values();
  partitions = std::min(partitions, samples);
  std::vector<std::vector<std::size_t>> counts(partitions,
                                               std::vector<std::size_t>(values.size(), 0));

  auto run_block = [&](std::size_t block) {
    const std::size_t draws = samples / partitions + (block < samples % partitions ? 1 : 0);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block)};
    std::mt19937_64 rng(seq);
    auto& local = counts[block];
    for (std::size_t i = 0; i < draws; ++i) {
      ++local[argmin_below_max(values, unit_uniform(rng) * lmax)];
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, partitions);
  if (workers == 1) {
    for (std::size_t b = 0; b < partitions; ++b) run_block(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < partitions; b = next++) run_block(b);
      });
    }
  }

  std::vector<std::size_t> total(values.size(), 0);
  for (const auto& local : counts) {
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += local[k];
  }
  WeightSpectrum spectrum = from_counts(total, samples);
  spectrum.method = WeightMethod::mc;
  spectrum.lambda_max = lmax;
  spectrum.seed = seed;
  spectrum.partitions = partitions;
  return spectrum;
}

WeightSpectrum weights_grid(const ErrorCurve& curve, std::size_t samples) {
  if (samples == 0) throw InputError("grid size must be positive");
  const double lmax = lambda_max(curve);
  if (lmax <= 0.0) {
    auto spectrum = degenerate_spectrum(curve, WeightMethod::grid);
    spectrum.samples = samples;
    return spectrum;
  }

  const auto values = curve.values();
  std::vector<std::size_t> counts(values.size(), 0);
  const double m = static_cast<double>(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double lambda = (static_cast<double>(i) + 0.5) / m * lmax;
    ++counts[argmin_below_max(values, lambda)];
  }
  WeightSpectrum spectrum = from_counts(counts, samples);
  spectrum.method = WeightMethod::grid;
  spectrum.lambda_max = lmax;
  return spectrum;
}

std::vector<double> cumulative(const WeightSpectrum& spectrum) {
  const std::size_t k_max = spectrum.max_dim();
  std::vector<double> running(k_max, 0.0);
  if (spectrum.degenerate) return running;
  double sum = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    sum += spectrum.weights[k];
    running[k - 1] = sum;
  }
  return running;
}

std::vector<std::size_t> elbow_set(const WeightSpectrum& spectrum) {
  std::vector<std::size_t> support;
  if (spectrum.degenerate) return support;
  for (std::size_t k = 1; k < spectrum.weights.size(); ++k) {
    if (spectrum.weights[k] > 0.0) support.push_back(k);
  }
  return support;
}

std::size_t select(const WeightSpectrum& spectrum, double level) {
  if (!(level > 0.0 && level <= 1.0)) {
    throw InputError("confidence level must lie in (0, 1], got " + std::to_string(level));
  }
  if (spectrum.degenerate) return 0;
  double sum = 0.0;
  std::size_t last_positive = spectrum.max_dim();
  for (std::size_t k = 1; k < spectrum.weights.size(); ++k) {
    if (spectrum.weights[k] <= 0.0) continue;
    sum += spectrum.weights[k];
    last_positive = k;
    if (sum >= level - kLevelSlack) return k;
  }
  // Rounding left the total a hair below the level.
  return last_positive;
}

}  // namespace sic
