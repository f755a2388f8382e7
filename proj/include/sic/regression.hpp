#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sic/curve.hpp"
#include "sic/data.hpp"

namespace sic {

struct LinearModelFit {
  /// theta_0 (when an intercept is fitted) followed by the k slope terms.
  std::vector<double> coefficients;
  double residual_sum_of_squares = 0.0;
  double sigma2_hat = 0.0;  // RSS / N
};

/// Residual sums of squares of the nested least-squares fits k = 0..K.
///
/// One Householder QR of the full design serves every k: the leading columns
/// of Q span exactly the first k features (plus the intercept). Throws
/// RankDeficientError naming the first k whose column adds no new direction.
std::vector<double> nested_rss(const Dataset& data, bool include_intercept = true);

/// Least-squares fit on the first k feature columns.
LinearModelFit fit_least_squares(const Dataset& data, std::size_t k, bool include_intercept = true);

/// Gaussian profile deviance V(k) = N log(2 pi) + N log(RSS_k / N) + N.
///
/// The intercept is not counted in k. Throws ZeroResidualError for a perfect fit.
ErrorCurve gaussian_nll_curve(const Dataset& data, bool include_intercept = true);

/// Dataset with columns x, x^2, ..., x^K.
///
/// x is first mapped affinely onto [-1, 1]; the span of the first k columns is
/// unchanged, so fits and residuals are those of the raw powers.
Dataset polynomial_dataset(std::span<const double> x, std::span<const double> y,
                           std::size_t max_order);

ErrorCurve polynomial_nll_curve(std::span<const double> x, std::span<const double> y,
                                std::size_t max_order);

}  // namespace sic
