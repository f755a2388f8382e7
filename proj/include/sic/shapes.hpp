#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sic/curve.hpp"

namespace sic {

/// Curve through (breakpoints[i], values[i]); breakpoints strictly ascend from 0 to K.
struct PiecewiseLinearSpec {
  std::vector<std::size_t> breakpoints;
  std::vector<double> values;
};

/// Linear interpolation sampled at every integer k.
ErrorCurve piecewise_linear_curve(const PiecewiseLinearSpec& spec);

/// V(k) = 1 - accuracy(k). Index 0 is the no-feature baseline.
ErrorCurve accuracy_curve(std::span<const double> accuracies);

}  // namespace sic
