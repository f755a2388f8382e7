#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sic/baselines.hpp"
#include "sic/curve.hpp"
#include "sic/spectrum.hpp"

namespace sic {

inline constexpr std::array<double, 2> kDefaultLevels = {0.9, 0.95};

struct LevelChoice {
  double level = 0.0;
  std::size_t k = 0;
};

struct BaselinePick {
  Criterion criterion = Criterion::aic;
  std::optional<double> lambda;  // empty when the criterion could not be evaluated
  std::optional<std::size_t> k;
  std::string note;  // reason for a skipped row
};

struct SelectionReport {
  std::vector<std::size_t> elbow_set;
  std::vector<double> cumulative;  // W_1..W_K
  std::vector<LevelChoice> chosen;
  std::vector<BaselinePick> baselines;
  bool degenerate = false;

  std::size_t cardinality() const noexcept { return elbow_set.size(); }
};

/// Assembles elbow set, cumulative weights, per-level choices and the baseline table.
///
/// `raw_curve` is the curve before normalization; AED reads its V(0). BIC and
/// HQIC rows are computed only when `n_data` is given.
SelectionReport make_report(const ErrorCurve& raw_curve, const WeightSpectrum& spectrum,
                            std::span<const double> levels,
                            std::optional<std::size_t> n_data);

}  // namespace sic
