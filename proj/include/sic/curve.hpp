#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sic {

/// Fitting-term sequence V(0), ..., V(K) indexed by model dimension.
///
/// Values must be finite. Non-increase is not enforced; callers that rely on
/// it can check `is_non_increasing()`.
class ErrorCurve {
 public:
  /// Throws InputError if `values` is empty or holds a non-finite entry.
  explicit ErrorCurve(std::vector<double> values);

  /// Maximum model dimension K.
  std::size_t max_dim() const noexcept { return values_.size() - 1; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const noexcept { return values_[k]; }
  /// Bounds-checked access; throws InputError.
  double at(std::size_t k) const;

  bool is_non_increasing() const noexcept;

  friend bool operator==(const ErrorCurve&, const ErrorCurve&) = default;

 private:
  std::vector<double> values_;
};

/// One evaluation of the penalized cost C(k, lambda) = V(k) + lambda * k.
struct PenalizedCostPoint {
  std::size_t k = 0;
  double lambda = 0.0;
  double cost = 0.0;
};

/// Subtracts min_k V(k) so the smallest value becomes exactly 0.
ErrorCurve normalize(const ErrorCurve& curve);

/// V(k) + lambda * k. Throws InputError for k > K or negative/non-finite lambda.
double cost(const ErrorCurve& curve, std::size_t k, double lambda);

PenalizedCostPoint cost_point(const ErrorCurve& curve, std::size_t k, double lambda);

}  // namespace sic
