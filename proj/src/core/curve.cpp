#include "sic/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sic/error.hpp"

namespace sic {

ErrorCurve::ErrorCurve(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("error curve must hold at least V(0)");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw InputError("error curve value V(" + std::to_string(k) + ") is not finite");
    }
  }
}

double ErrorCurve::at(std::size_t k) const {
  if (k >= values_.size()) {
    throw InputError("model index " + std::to_string(k) + " exceeds K = " +
                     std::to_string(max_dim()));
  }
  return values_[k];
}

bool ErrorCurve::is_non_increasing() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end(), std::less<>{}) == values_.end();
}

ErrorCurve normalize(const ErrorCurve& curve) {
  const auto values = curve.values();
  const double floor = *std::min_element(values.begin(), values.end());
  std::vector<double> shifted(values.begin(), values.end());
  for (double& v : shifted) v -= floor;
  return ErrorCurve(std::move(shifted));
}

double cost(const ErrorCurve& curve, std::size_t k, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InputError("penalty slope must be finite and non-negative");
  }
  return curve.at(k) + lambda * static_cast<double>(k);
}

PenalizedCostPoint cost_point(const ErrorCurve& curve, std::size_t k, double lambda) {
  return {k, lambda, cost(curve, k, lambda)};
}

}  // namespace sic
