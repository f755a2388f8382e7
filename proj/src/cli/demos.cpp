#include "sic/cli/commands.hpp"

#include <Eigen/Dense>

#include "sic/eigen_curve.hpp"
#include "sic/error.hpp"
#include "sic/kmeans.hpp"
#include "sic/regression.hpp"
#include "sic/shapes.hpp"
#include "sic/synthetic.hpp"

namespace sic::cli {
namespace {

Eigen::MatrixXd pca_covariance() {
  Eigen::MatrixXd s(5, 5);
  s << 1, 0, 0, 0, 0,
       0, 1, 0, 0, 0,
       0, 0, 2, 0.7, 0,
       0, 0, 0.7, 2, 0.7,
       0, 0, 0, 0.7, 2;
  return s;
}

DemoResult piecewise(std::string title, std::vector<std::size_t> bp, std::vector<double> vals,
                     std::string expected) {
  const ErrorCurve curve = piecewise_linear_curve({std::move(bp), std::move(vals)});
  return {run_analysis(curve, {}), std::move(title), std::move(expected)};
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"i1", "i2", "i3-convex", "i3-concave",
                                              "i4", "clustering", "pca", "poly"};
  return names;
}

DemoResult make_demo(std::string_view name, const DemoOptions& options) {
  if (name == "i1") {
    return piecewise("I1: constant curve", {0, 20}, {5.0, 5.0},
                     "degenerate, k_E = 0 (empty model)");
  }
  if (name == "i2") {
    return piecewise("I2: straight line from (0, 10) to (50, 0)", {0, 50}, {10.0, 0.0},
                     "single weight w_50 = 1, k_E = 50");
  }
  if (name == "i3-convex") {
    return piecewise("I3: convex two-piece curve, slopes -1.8 then -0.01", {0, 5, 50},
                     {10.0, 1.0, 0.55}, "w_5 = 1 - 0.01/1.8 ~ 0.9944, w_50 ~ 0.0056, k_E = 5");
  }
  if (name == "i3-concave") {
    return piecewise("I3: concave two-piece curve", {0, 5, 50}, {10.0, 9.5, 0.0},
                     "single weight w_50 = 1, k_E = 50");
  }
  if (name == "i4") {
    return piecewise("I4: convex piecewise curve with breakpoints 5, 15, 30", {0, 5, 15, 30, 50},
                     {10.0, 4.0, 2.0, 1.4, 1.2}, "E = {5, 15, 30, 50}");
  }
  if (name == "pca") {
    const ErrorCurve curve = eigen_curve(pca_covariance());
    return {run_analysis(curve, {}), "Dimension reduction: eigenvalues of a 5x5 covariance",
            "k_E = 3 at levels 0.9 and 0.95; AED picks 1"};
  }
  if (name == "poly") {
    const std::vector<double> theta{4.05, -2.025, -2.225, 0.1, 0.1};
    const auto sample = sample_polynomial(theta, 100, -5.0, 5.0, 1.0, options.seed);
    const ErrorCurve curve = polynomial_nll_curve(sample.x, sample.y, 15);
    AnalysisConfig config;
    config.n_data = 100;
    return {run_analysis(curve, config),
            "Polynomial order: N = 100, true order 4, x ~ U[-5, 5], K = 15",
            "k_E = 4 (true order); BIC picks 4, AIC picks at least as large an order"};
  }
  if (name == "clustering") {
    const auto components = five_gaussian_components(500);
    const PointCloud cloud = gaussian_mixture_cloud(components, options.seed);
    KMeansOptions km;
    km.restarts = options.restarts;
    km.seed = options.seed;
    const ErrorCurve curve = kmeans_variance_curve(cloud, 49, km);
    return {run_analysis(curve, {}),
            "Clustering: 2500 points from 5 Gaussians, 1..50 clusters (index k = clusters - 1), " +
                std::to_string(options.restarts) + " k-means restarts",
            "k_E = 4, i.e. 5 clusters"};
  }
  throw InputError("unknown demo '" + std::string(name) + "'");
}

}  // namespace sic::cli
