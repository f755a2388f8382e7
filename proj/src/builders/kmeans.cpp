#include "sic/kmeans.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "sic/error.hpp"

namespace sic {
namespace {

// Row-major copy of the cloud; the Lloyd loop streams over points.
struct Flat {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<double> xs;

  explicit Flat(const Eigen::MatrixXd& points)
      : n(static_cast<std::size_t>(points.rows())),
        d(static_cast<std::size_t>(points.cols())),
        xs(n * d) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        xs[i * d + j] = points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  const double* row(std::size_t i) const { return xs.data() + i * d; }
};

double squared_distance(const double* a, const double* b, std::size_t d) {
  double s = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double t = a[j] - b[j];
    s += t * t;
  }
  return s;
}

std::vector<double> init_plus_plus(const Flat& flat, std::size_t clusters, std::mt19937_64& rng) {
  std::vector<double> centroids(clusters * flat.d);
  std::uniform_int_distribution<std::size_t> pick(0, flat.n - 1);
  std::size_t first = pick(rng);
  std::copy_n(flat.row(first), flat.d, centroids.begin());

  std::vector<double> nearest(flat.n);
  for (std::size_t i = 0; i < flat.n; ++i) {
    nearest[i] = squared_distance(flat.row(i), centroids.data(), flat.d);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Greedy variant: draw several D^2 candidates and keep the one that lowers the potential most.
  const std::size_t trials = 2 + static_cast<std::size_t>(std::log(static_cast<double>(clusters)));
  std::vector<double> candidate_nearest(flat.n);
  std::vector<double> best_nearest(flat.n);
  for (std::size_t c = 1; c < clusters; ++c) {
    const double total = std::accumulate(nearest.begin(), nearest.end(), 0.0);
    std::size_t chosen = pick(rng);
    if (total > 0.0) {
      double best_potential = std::numeric_limits<double>::infinity();
      for (std::size_t t = 0; t < trials; ++t) {
        double target = unit(rng) * total;
        std::size_t candidate = flat.n - 1;
        for (std::size_t i = 0; i < flat.n; ++i) {
          target -= nearest[i];
          if (target < 0.0) {
            candidate = i;
            break;
          }
        }
        double potential = 0.0;
        for (std::size_t i = 0; i < flat.n; ++i) {
          candidate_nearest[i] =
              std::min(nearest[i], squared_distance(flat.row(i), flat.row(candidate), flat.d));
          potential += candidate_nearest[i];
        }
        if (potential < best_potential) {
          best_potential = potential;
          chosen = candidate;
          best_nearest.swap(candidate_nearest);
        }
      }
      nearest.swap(best_nearest);
    } else {
      for (std::size_t i = 0; i < flat.n; ++i) nearest[i] = 0.0;
    }
    std::copy_n(flat.row(chosen), flat.d, centroids.data() + c * flat.d);
  }
  return centroids;
}

std::vector<double> init_uniform(const Flat& flat, std::size_t clusters, std::mt19937_64& rng) {
  std::vector<std::size_t> index(flat.n);
  std::iota(index.begin(), index.end(), 0);
  // Partial Fisher-Yates: the first `clusters` slots become a uniform distinct sample.
  for (std::size_t c = 0; c < clusters; ++c) {
    std::uniform_int_distribution<std::size_t> pick(c, flat.n - 1);
    std::swap(index[c], index[pick(rng)]);
  }
  std::vector<double> centroids(clusters * flat.d);
  for (std::size_t c = 0; c < clusters; ++c) {
    std::copy_n(flat.row(index[c]), flat.d, centroids.begin() + static_cast<long>(c * flat.d));
  }
  return centroids;
}

// Nearest centroid per point (ties go to the lower index). Returns whether any label changed.
bool assign(const Flat& flat, const std::vector<double>& centroids, std::size_t clusters,
            std::vector<std::size_t>& labels) {
  bool changed = false;
  for (std::size_t i = 0; i < flat.n; ++i) {
    const double* p = flat.row(i);
    std::size_t best = 0;
    double best_d = squared_distance(p, centroids.data(), flat.d);
    for (std::size_t c = 1; c < clusters; ++c) {
      const double dist = squared_distance(p, centroids.data() + c * flat.d, flat.d);
      if (dist < best_d) {
        best_d = dist;
        best = c;
      }
    }
    if (labels[i] != best) {
      labels[i] = best;
      changed = true;
    }
  }
  return changed;
}

// Moves the farthest point of a multi-member cluster into each empty cluster.
void repair_empty(const Flat& flat, std::vector<double>& centroids, std::size_t clusters,
                  std::vector<std::size_t>& labels) {
  std::vector<std::size_t> sizes(clusters, 0);
  for (std::size_t label : labels) ++sizes[label];
  for (std::size_t c = 0; c < clusters; ++c) {
    if (sizes[c] != 0) continue;
    std::size_t far = flat.n;
    double far_d = -1.0;
    for (std::size_t i = 0; i < flat.n; ++i) {
      if (sizes[labels[i]] < 2) continue;
      const double dist =
          squared_distance(flat.row(i), centroids.data() + labels[i] * flat.d, flat.d);
      if (dist > far_d) {
        far_d = dist;
        far = i;
      }
    }
    if (far == flat.n) return;  // fewer distinct members than clusters
    --sizes[labels[far]];
    labels[far] = c;
    sizes[c] = 1;
    std::copy_n(flat.row(far), flat.d, centroids.begin() + static_cast<long>(c * flat.d));
  }
}

void update_centroids(const Flat& flat, std::vector<double>& centroids, std::size_t clusters,
                      const std::vector<std::size_t>& labels) {
  std::vector<double> sums(clusters * flat.d, 0.0);
  std::vector<std::size_t> sizes(clusters, 0);
  for (std::size_t i = 0; i < flat.n; ++i) {
    const double* p = flat.row(i);
    double* s = sums.data() + labels[i] * flat.d;
    for (std::size_t j = 0; j < flat.d; ++j) s[j] += p[j];
    ++sizes[labels[i]];
  }
  for (std::size_t c = 0; c < clusters; ++c) {
    if (sizes[c] == 0) continue;
    for (std::size_t j = 0; j < flat.d; ++j) {
      centroids[c * flat.d + j] = sums[c * flat.d + j] / static_cast<double>(sizes[c]);
    }
  }
}

double energy(const Flat& flat, const std::vector<double>& centroids,
              const std::vector<std::size_t>& labels) {
  double e = 0.0;
  for (std::size_t i = 0; i < flat.n; ++i) {
    e += squared_distance(flat.row(i), centroids.data() + labels[i] * flat.d, flat.d);
  }
  return e;
}

KMeansRun run_lloyd(const Flat& flat, std::size_t clusters, std::mt19937_64& rng,
                    KMeansInit init, std::size_t max_iterations) {
  std::vector<double> centroids = init == KMeansInit::plus_plus
                                      ? init_plus_plus(flat, clusters, rng)
                                      : init_uniform(flat, clusters, rng);
  std::vector<std::size_t> labels(flat.n, clusters);
  assign(flat, centroids, clusters, labels);

  KMeansRun run;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    repair_empty(flat, centroids, clusters, labels);
    update_centroids(flat, centroids, clusters, labels);
    run.energy.push_back(energy(flat, centroids, labels));
    ++run.iterations;
    if (!assign(flat, centroids, clusters, labels)) break;
  }

  run.labels = std::move(labels);
  run.centroids.resize(static_cast<Eigen::Index>(clusters), static_cast<Eigen::Index>(flat.d));
  for (std::size_t c = 0; c < clusters; ++c) {
    for (std::size_t j = 0; j < flat.d; ++j) {
      run.centroids(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(j)) =
          centroids[c * flat.d + j];
    }
  }
  return run;
}

double spread_of(const Flat& flat, const KMeansRun& run, ClusterSpread spread) {
  const std::size_t clusters = static_cast<std::size_t>(run.centroids.rows());
  std::vector<double> sse(clusters, 0.0);
  std::vector<std::size_t> sizes(clusters, 0);
  Eigen::MatrixXd means = Eigen::MatrixXd::Zero(run.centroids.rows(), run.centroids.cols());
  for (std::size_t i = 0; i < flat.n; ++i) {
    const auto c = static_cast<Eigen::Index>(run.labels[i]);
    for (std::size_t j = 0; j < flat.d; ++j) means(c, static_cast<Eigen::Index>(j)) += flat.row(i)[j];
    ++sizes[run.labels[i]];
  }
  for (std::size_t c = 0; c < clusters; ++c) {
    if (sizes[c] > 0) means.row(static_cast<Eigen::Index>(c)) /= static_cast<double>(sizes[c]);
  }
  for (std::size_t i = 0; i < flat.n; ++i) {
    const auto c = static_cast<Eigen::Index>(run.labels[i]);
    for (std::size_t j = 0; j < flat.d; ++j) {
      const double t = flat.row(i)[j] - means(c, static_cast<Eigen::Index>(j));
      sse[run.labels[i]] += t * t;
    }
  }
  double total = 0.0;
  for (std::size_t c = 0; c < clusters; ++c) {
    if (sizes[c] == 0) continue;
    total += spread == ClusterSpread::mean_squared_distance
                 ? sse[c] / static_cast<double>(sizes[c])
                 : sse[c];
  }
  return total;
}

void check_cloud(const PointCloud& cloud, std::size_t clusters) {
  if (cloud.size() == 0 || cloud.dim() == 0) throw InputError("point cloud is empty");
  if (!cloud.points.allFinite()) throw InputError("point cloud contains non-finite coordinates");
  if (clusters == 0) throw InputError("cluster count must be positive");
  if (clusters > cloud.size()) {
    throw InputError(std::to_string(clusters) + " clusters requested for " +
                     std::to_string(cloud.size()) + " points");
  }
}

}  // namespace

KMeansRun lloyd_kmeans(const PointCloud& cloud, std::size_t clusters, std::mt19937_64& rng,
                       KMeansInit init, std::size_t max_iterations) {
  check_cloud(cloud, clusters);
  return run_lloyd(Flat(cloud.points), clusters, rng, init, std::max<std::size_t>(max_iterations, 1));
}

double total_spread(const PointCloud& cloud, const KMeansRun& run, ClusterSpread spread) {
  return spread_of(Flat(cloud.points), run, spread);
}

ErrorCurve kmeans_variance_curve(const PointCloud& cloud, std::size_t max_k,
                                 const KMeansOptions& options) {
  check_cloud(cloud, max_k + 1);
  if (options.restarts == 0) throw InputError("k-means restarts must be positive");
  const Flat flat(cloud.points);
  const std::size_t iterations = std::max<std::size_t>(options.max_iterations, 1);

  std::vector<double> averaged(max_k + 1, 0.0);
  auto run_index = [&](std::size_t k) {
    double sum = 0.0;
    for (std::size_t r = 0; r < options.restarts; ++r) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                        static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(r)};
      std::mt19937_64 rng(seq);
      const KMeansRun run = run_lloyd(flat, k + 1, rng, options.init, iterations);
      sum += spread_of(flat, run, options.spread);
    }
    averaged[k] = sum / static_cast<double>(options.restarts);
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, max_k + 1);
  if (workers == 1) {
    for (std::size_t k = 0; k <= max_k; ++k) run_index(k);
  } else {
    // Largest k first: those runs dominate the cost.
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i <= max_k; i = next++) run_index(max_k - i);
      });
    }
  }

  std::vector<double> values(max_k + 1);
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (!(averaged[k] > 0.0)) {
      throw NumericalError("within-cluster variance is zero at k = " + std::to_string(k) +
                           " (log singularity; points are not distinct enough)");
    }
    values[k] = std::log(averaged[k]);
  }
  return ErrorCurve(std::move(values));
}

}  // namespace sic
