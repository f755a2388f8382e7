#include "sic/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "sic/error.hpp"
#include "sic/spectrum.hpp"

namespace sic {

std::string_view to_string(Criterion criterion) {
  switch (criterion) {
    case Criterion::bic: return "BIC";
    case Criterion::aic: return "AIC";
    case Criterion::hqic: return "HQIC";
    case Criterion::aed: return "AED";
  }
  return "unknown";
}

Criterion parse_criterion(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Criterion c : kAllCriteria) {
    if (to_string(c) == upper) return c;
  }
  throw InputError("unknown criterion '" + std::string(name) + "'");
}

bool needs_n_data(Criterion criterion) {
  return criterion == Criterion::bic || criterion == Criterion::hqic;
}

double baseline_lambda(Criterion criterion, std::size_t n_data, const ErrorCurve& curve) {
  const double n = static_cast<double>(n_data);
  switch (criterion) {
    case Criterion::bic:
      if (n_data < 2) throw InputError("BIC needs at least 2 observations");
      return std::log(n);
    case Criterion::aic:
      return 2.0;
    case Criterion::hqic:
      if (n_data < 3) throw InputError("HQIC needs at least 3 observations (log log N > 0)");
      return std::log(std::log(n));
    case Criterion::aed: {
      const auto v = curve.values();
      const auto first_min =
          static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
      if (first_min == 0) throw InputError("AED is undefined: V attains its minimum at k = 0");
      const double lambda = v[0] / static_cast<double>(first_min);
      if (lambda < 0.0) throw InputError("AED slope V(0)/k is negative");
      return lambda;
    }
  }
  throw InputError("unknown criterion");
}

std::size_t ic_select(const ErrorCurve& curve, Criterion criterion, std::size_t n_data) {
  return argmin_cost(curve, baseline_lambda(criterion, n_data, curve));
}

}  // namespace sic
