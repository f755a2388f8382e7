#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "sic/curve.hpp"

namespace sic {

/// Classical criteria that amount to one fixed penalty slope.
enum class Criterion { bic, aic, hqic, aed };

inline constexpr std::array<Criterion, 4> kAllCriteria = {Criterion::bic, Criterion::aic,
                                                          Criterion::hqic, Criterion::aed};

std::string_view to_string(Criterion criterion);
/// Case-insensitive; throws InputError on unknown names.
Criterion parse_criterion(std::string_view name);

/// Whether the criterion's slope depends on the number of observations.
bool needs_n_data(Criterion criterion);

/// Penalty slope of the criterion:
///   BIC  -> log N
///   AIC  -> 2
///   HQIC -> log(log N)             (N >= 3)
///   AED  -> V(0) / min argmin_k V(k)
///
/// `curve` is used only by AED and must be the raw (unnormalized) curve.
/// Throws InputError when the slope is undefined or negative.
double baseline_lambda(Criterion criterion, std::size_t n_data, const ErrorCurve& curve);

/// argmin_cost(curve, baseline_lambda(criterion, n_data, curve)).
std::size_t ic_select(const ErrorCurve& curve, Criterion criterion, std::size_t n_data);

}  // namespace sic
