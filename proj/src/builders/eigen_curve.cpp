#include "sic/eigen_curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sic/error.hpp"

namespace sic {

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw InputError("covariance must be a non-empty square matrix");
  }
  if (!matrix.allFinite()) throw InputError("covariance contains non-finite entries");
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw InputError("covariance is not symmetric");
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigen-solver failed");

  // Eigen returns ascending order.
  const Eigen::Index d = matrix.rows();
  SymmetricEigen out;
  out.values.resize(static_cast<std::size_t>(d));
  out.vectors.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(d - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(d - 1 - i);
  }
  return out;
}

Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& data) {
  if (data.rows() < 2) throw InputError("sample covariance needs at least two rows");
  if (!data.allFinite()) throw InputError("data matrix contains non-finite entries");
  const Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
  return (centered.transpose() * centered) / static_cast<double>(data.rows() - 1);
}

ErrorCurve eigen_curve(const Eigen::MatrixXd& covariance) {
  SymmetricEigen eig = symmetric_eigen(covariance);
  const double scale = std::max(1.0, std::abs(eig.values.front()));
  if (eig.values.back() < -1e-10 * scale) {
    throw NotPsdError("covariance is not positive semi-definite (eigenvalue " +
                      std::to_string(eig.values.back()) + ")");
  }
  std::vector<double> values;
  values.reserve(eig.values.size() + 1);
  values.push_back(covariance.trace());
  for (double v : eig.values) values.push_back(std::max(v, 0.0));
  return ErrorCurve(std::move(values));
}

ErrorCurve eigen_curve_from_data(const Eigen::MatrixXd& data) {
  return eigen_curve(sample_covariance(data));
}

}  // namespace sic
