#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sic/curve.hpp"
#include "sic/data.hpp"

namespace sic {

enum class KMeansInit {
  plus_plus,  // D^2 sampling
  uniform,    // distinct points drawn uniformly
};

/// How the per-cluster "internal variance" is measured.
enum class ClusterSpread {
  mean_squared_distance,  // sum of squared distances to the centroid / cluster size
  sum_of_squares,         // unnormalized within-cluster sum of squares
};

struct KMeansOptions {
  std::size_t restarts = 200;
  std::uint64_t seed = 0;
  KMeansInit init = KMeansInit::plus_plus;
  ClusterSpread spread = ClusterSpread::mean_squared_distance;
  std::size_t max_iterations = 300;
};

struct KMeansRun {
  Eigen::MatrixXd centroids;  // clusters x d
  std::vector<std::size_t> labels;
  /// Within-cluster sum of squares after each centroid update.
  std::vector<double> energy;
  std::size_t iterations = 0;
};

/// One Lloyd run. Stops when assignments no longer change or after `max_iterations`.
/// An emptied cluster is reseeded with the point farthest from its own centroid.
KMeansRun lloyd_kmeans(const PointCloud& cloud, std::size_t clusters, std::mt19937_64& rng,
                       KMeansInit init = KMeansInit::plus_plus,
                       std::size_t max_iterations = 300);

/// Sum over clusters of the chosen spread measure.
double total_spread(const PointCloud& cloud, const KMeansRun& run, ClusterSpread spread);

/// V(k) = log of the restart-averaged total spread with k + 1 clusters, k = 0..max_k.
///
/// Restart r at index k draws from its own generator seeded by (seed, k, r).
/// Throws NumericalError if the averaged spread is zero (log singularity).
ErrorCurve kmeans_variance_curve(const PointCloud& cloud, std::size_t max_k,
                                 const KMeansOptions& options = {});

}  // namespace sic
