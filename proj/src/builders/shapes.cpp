#include "sic/shapes.hpp"

#include <cmath>
#include <string>

#include "sic/error.hpp"

namespace sic {

ErrorCurve piecewise_linear_curve(const PiecewiseLinearSpec& spec) {
  const auto& bp = spec.breakpoints;
  if (bp.size() < 2 || bp.size() != spec.values.size()) {
    throw InputError("piecewise spec needs at least two breakpoints, one value each");
  }
  if (bp.front() != 0) throw InputError("first breakpoint must be 0");
  for (std::size_t i = 1; i < bp.size(); ++i) {
    if (bp[i] <= bp[i - 1]) throw InputError("breakpoints must be strictly ascending");
  }

  std::vector<double> values(bp.back() + 1);
  for (std::size_t i = 1; i < bp.size(); ++i) {
    const std::size_t a = bp[i - 1];
    const std::size_t b = bp[i];
    const double va = spec.values[i - 1];
    const double vb = spec.values[i];
    const double width = static_cast<double>(b - a);
    for (std::size_t k = a; k <= b; ++k) {
      values[k] = va + (vb - va) * (static_cast<double>(k - a) / width);
    }
    values[b] = vb;
  }
  return ErrorCurve(std::move(values));
}

ErrorCurve accuracy_curve(std::span<const double> accuracies) {
  std::vector<double> values;
  values.reserve(accuracies.size());
  for (std::size_t k = 0; k < accuracies.size(); ++k) {
    const double a = accuracies[k];
    if (!(a >= 0.0 && a <= 1.0)) {
      throw InputError("accuracy at k = " + std::to_string(k) + " is outside [0, 1]");
    }
    values.push_back(1.0 - a);
  }
  return ErrorCurve(std::move(values));
}

}  // namespace sic
