#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace sic {

/// Regression inputs: N targets and an N x K feature matrix whose columns are
/// already ordered by presumed importance (column j enters the model at k = j + 1).
struct Dataset {
  std::vector<double> targets;
  Eigen::MatrixXd features;

  std::size_t rows() const noexcept { return targets.size(); }
  std::size_t max_dim() const noexcept { return static_cast<std::size_t>(features.cols()); }
};

/// N points in d dimensions, one per row.
struct PointCloud {
  Eigen::MatrixXd points;

  std::size_t size() const noexcept { return static_cast<std::size_t>(points.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(points.cols()); }
};

}  // namespace sic
