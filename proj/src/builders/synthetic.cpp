#include "sic/synthetic.hpp"

#include <cmath>
#include <random>
#include <string>

#include "sic/error.hpp"

namespace sic {

PointCloud gaussian_mixture_cloud(std::span<const GaussianComponent> components,
                                  std::uint64_t seed) {
  if (components.empty()) throw InputError("mixture has no components");
  const Eigen::Index d = components.front().mean.size();
  Eigen::Index total = 0;
  std::vector<Eigen::MatrixXd> factors;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    if (comp.mean.size() != d || comp.covariance.rows() != d || comp.covariance.cols() != d) {
      throw InputError("mixture component " + std::to_string(c) + " has mismatched dimensions");
    }
    if ((comp.covariance - comp.covariance.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw InputError("covariance of component " + std::to_string(c) + " is not symmetric");
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(comp.covariance);
    if (llt.info() != Eigen::Success) {
      throw InputError("covariance of component " + std::to_string(c) +
                       " is not positive definite");
    }
    factors.push_back(llt.matrixL());
    total += static_cast<Eigen::Index>(comp.count);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  PointCloud cloud;
  cloud.points.resize(total, d);
  Eigen::Index row = 0;
  Eigen::VectorXd z(d);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t i = 0; i < components[c].count; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) z(j) = normal(rng);
      cloud.points.row(row++) = (components[c].mean + factors[c] * z).transpose();
    }
  }
  return cloud;
}

std::vector<GaussianComponent> five_gaussian_components(std::size_t per_component) {
  auto make = [&](double mx, double my, double sxx, double sxy, double syy) {
    GaussianComponent c;
    c.mean = Eigen::Vector2d(mx, my);
    c.covariance = (Eigen::Matrix2d() << sxx, sxy, sxy, syy).finished();
    c.count = per_component;
    return c;
  };
  return {make(3, 0, 0.3, 0.0, 2.0), make(14, 5, 1.5, 0.7, 1.5), make(-5, -10, 1.5, 0.7, 1.5),
          make(10, -10, 1.5, 0.0, 1.5), make(-5, 5, 1.0, -0.8, 1.0)};
}

PolynomialSample sample_polynomial(std::span<const double> coefficients, std::size_t n,
                                   double x_lo, double x_hi, double noise_sd,
                                   std::uint64_t seed) {
  if (!(x_hi > x_lo)) throw InputError("x range must be non-empty");
  if (!(noise_sd >= 0.0)) throw InputError("noise standard deviation must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(x_lo, x_hi);
  std::normal_distribution<double> normal(0.0, 1.0);

  PolynomialSample s;
  s.x.resize(n);
  s.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = uniform(rng);
    double y = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) y = y * x + *it;
    s.x[i] = x;
    s.y[i] = y + noise_sd * normal(rng);
  }
  return s;
}

}  // namespace sic
