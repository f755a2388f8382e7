#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sic/data.hpp"

namespace sic {

struct GaussianComponent {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
  std::size_t count = 0;
};

/// Samples each component in turn as mean + L z with L L^T = covariance.
/// Throws InputError for a covariance that is not symmetric positive definite.
PointCloud gaussian_mixture_cloud(std::span<const GaussianComponent> components,
                                  std::uint64_t seed);

/// The five bivariate Gaussians of the clustering benchmark.
std::vector<GaussianComponent> five_gaussian_components(std::size_t per_component = 500);

struct PolynomialSample {
  std::vector<double> x;
  std::vector<double> y;
};

/// y = sum_j coefficients[j] x^j + noise, x ~ U[x_lo, x_hi], noise ~ N(0, noise_sd^2).
PolynomialSample sample_polynomial(std::span<const double> coefficients, std::size_t n,
                                   double x_lo, double x_hi, double noise_sd,
                                   std::uint64_t seed);

}  // namespace sic
