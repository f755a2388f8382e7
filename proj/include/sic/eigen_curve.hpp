#pragma once

#include <vector>

#include "sic/curve.hpp"
#include "sic/data.hpp"

namespace sic {

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Eigen::MatrixXd vectors;     // column i pairs with values[i]
};

/// Throws InputError for a non-square or asymmetric (beyond 1e-10) matrix.
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& matrix);

/// Unbiased sample covariance of the rows of `data`.
Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& data);

/// V(0) = trace, V(k) = k-th largest eigenvalue. Throws NotPsdError for a
/// negative eigenvalue beyond rounding.
ErrorCurve eigen_curve(const Eigen::MatrixXd& covariance);

ErrorCurve eigen_curve_from_data(const Eigen::MatrixXd& data);

}  // namespace sic
