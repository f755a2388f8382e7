#include "sic/report.hpp"

#include "sic/error.hpp"

namespace sic {

SelectionReport make_report(const ErrorCurve& raw_curve, const WeightSpectrum& spectrum,
                            std::span<const double> levels,
                            std::optional<std::size_t> n_data) {
  SelectionReport report;
  report.degenerate = spectrum.degenerate;
  report.elbow_set = elbow_set(spectrum);
  report.cumulative = cumulative(spectrum);
  for (double level : levels) report.chosen.push_back({level, select(spectrum, level)});

  for (Criterion criterion : kAllCriteria) {
    BaselinePick pick;
    pick.criterion = criterion;
    if (needs_n_data(criterion) && !n_data) {
      pick.note = "skipped: needs --n-data";
    } else {
      try {
        const double lambda = baseline_lambda(criterion, n_data.value_or(0), raw_curve);
        pick.lambda = lambda;
        pick.k = argmin_cost(raw_curve, lambda);
      } catch (const InputError& e) {
        pick.note = std::string("skipped: ") + e.what();
      }
    }
    report.baselines.push_back(std::move(pick));
  }
  return report;
}

}  // namespace sic
