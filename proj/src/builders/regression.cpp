#include "sic/regression.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sic/error.hpp"

namespace sic {
namespace {

// Relative size below which a new column is considered dependent on its predecessors.
constexpr double kRankTolerance = 1e-10;
// Residual energy below this fraction of ||y||^2 counts as an exact fit.
constexpr double kZeroResidual = 1e-20;

void validate(const Dataset& data) {
  const auto n = static_cast<Eigen::Index>(data.targets.size());
  if (data.targets.empty()) throw InputError("dataset has no rows");
  if (data.features.rows() != n && data.features.cols() > 0) {
    throw InputError("feature matrix has " + std::to_string(data.features.rows()) +
                     " rows but there are " + std::to_string(n) + " targets");
  }
  if (!std::all_of(data.targets.begin(), data.targets.end(),
                   [](double v) { return std::isfinite(v); }) ||
      !data.features.allFinite()) {
    throw InputError("dataset contains non-finite entries");
  }
  if (data.rows() <= data.max_dim()) {
    throw InputError("need N > K for nested fits (N = " + std::to_string(data.rows()) +
                     ", K = " + std::to_string(data.max_dim()) + ")");
  }
}

Eigen::MatrixXd design(const Dataset& data, std::size_t k, bool include_intercept) {
  const Eigen::Index n = static_cast<Eigen::Index>(data.rows());
  const Eigen::Index offset = include_intercept ? 1 : 0;
  Eigen::MatrixXd a(n, static_cast<Eigen::Index>(k) + offset);
  if (include_intercept) a.col(0).setOnes();
  if (k > 0) a.rightCols(static_cast<Eigen::Index>(k)) = data.features.leftCols(k);
  return a;
}

struct Factored {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr;
  Eigen::VectorXd qty;
};

Factored factor(const Dataset& data, std::size_t k, bool include_intercept) {
  const Eigen::MatrixXd a = design(data, k, include_intercept);
  Factored f{Eigen::HouseholderQR<Eigen::MatrixXd>(a), {}};
  const Eigen::Map<const Eigen::VectorXd> y(data.targets.data(),
                                            static_cast<Eigen::Index>(data.targets.size()));
  f.qty = f.qr.householderQ().transpose() * y;

  const auto& r = f.qr.matrixQR();
  const Eigen::Index offset = include_intercept ? 1 : 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const double column_norm = a.col(j).norm();
    if (column_norm == 0.0 || std::abs(r(j, j)) <= kRankTolerance * column_norm) {
      throw RankDeficientError(static_cast<std::size_t>(j + 1 - offset));
    }
  }
  return f;
}

double tail_energy(const Eigen::VectorXd& v, Eigen::Index from) {
  return v.tail(v.size() - from).squaredNorm();
}

}  // namespace

std::vector<double> nested_rss(const Dataset& data, bool include_intercept) {
  validate(data);
  const std::size_t k_max = data.max_dim();
  const Factored f = factor(data, k_max, include_intercept);
  const Eigen::Index offset = include_intercept ? 1 : 0;
  std::vector<double> rss(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    rss[k] = tail_energy(f.qty, static_cast<Eigen::Index>(k) + offset);
  }
  return rss;
}

LinearModelFit fit_least_squares(const Dataset& data, std::size_t k, bool include_intercept) {
  validate(data);
  if (k > data.max_dim()) {
    throw InputError("k = " + std::to_string(k) + " exceeds the " +
                     std::to_string(data.max_dim()) + " available features");
  }
  const Factored f = factor(data, k, include_intercept);
  const Eigen::Index p = static_cast<Eigen::Index>(k) + (include_intercept ? 1 : 0);

  LinearModelFit fit;
  if (p > 0) {
    const Eigen::VectorXd theta = f.qr.matrixQR()
                                      .topLeftCorner(p, p)
                                      .triangularView<Eigen::Upper>()
                                      .solve(f.qty.head(p));
    fit.coefficients.assign(theta.data(), theta.data() + theta.size());
  }
  fit.residual_sum_of_squares = tail_energy(f.qty, p);
  fit.sigma2_hat = fit.residual_sum_of_squares / static_cast<double>(data.rows());
  return fit;
}

ErrorCurve gaussian_nll_curve(const Dataset& data, bool include_intercept) {
  const std::vector<double> rss = nested_rss(data, include_intercept);
  const double n = static_cast<double>(data.rows());
  double y_energy = 0.0;
  for (double y : data.targets) y_energy += y * y;

  std::vector<double> values(rss.size());
  for (std::size_t k = 0; k < rss.size(); ++k) {
    if (rss[k] <= kZeroResidual * y_energy) throw ZeroResidualError(k);
    values[k] = n * std::log(2.0 * std::numbers::pi) + n * std::log(rss[k] / n) + n;
  }
  return ErrorCurve(std::move(values));
}

Dataset polynomial_dataset(std::span<const double> x, std::span<const double> y,
                           std::size_t max_order) {
  if (x.size() != y.size()) throw InputError("x and y lengths differ");
  if (x.empty()) throw InputError("no data points");
  if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
    throw InputError("x contains non-finite values");
  }
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi && max_order > 0) throw InputError("all x values are identical");

  const double center = 0.5 * (*hi + *lo);
  const double half_range = *hi > *lo ? 0.5 * (*hi - *lo) : 1.0;
  const auto n = static_cast<Eigen::Index>(x.size());

  Dataset data;
  data.targets.assign(y.begin(), y.end());
  data.features.resize(n, static_cast<Eigen::Index>(max_order));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = (x[static_cast<std::size_t>(i)] - center) / half_range;
    double power = 1.0;
    for (Eigen::Index j = 0; j < data.features.cols(); ++j) {
      power *= t;
      data.features(i, j) = power;
    }
  }
  return data;
}

ErrorCurve polynomial_nll_curve(std::span<const double> x, std::span<const double> y,
                                std::size_t max_order) {
  return gaussian_nll_curve(polynomial_dataset(x, y, max_order), true);
}

}  // namespace sic
