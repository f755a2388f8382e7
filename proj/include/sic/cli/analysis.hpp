#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sic/curve.hpp"
#include "sic/report.hpp"
#include "sic/spectrum.hpp"

namespace sic::cli {

struct AnalysisConfig {
  WeightMethod method = WeightMethod::exact;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::vector<double> levels{kDefaultLevels.begin(), kDefaultLevels.end()};
  bool normalize = true;
  std::string tie_break = "smallest";
  std::optional<std::size_t> n_data;
};

/// Throws InputError on an out-of-range level, zero sample count or unknown tie-break.
void validate(const AnalysisConfig& config);

struct Analysis {
  ErrorCurve raw;
  ErrorCurve analyzed;  // normalized unless disabled
  WeightSpectrum spectrum;
  SelectionReport report;
};

Analysis run_analysis(const ErrorCurve& curve, const AnalysisConfig& config);

void render_text(std::ostream& out, const Analysis& analysis);

/// Fields: K, lambda_max, method, weights, cumulative, elbow_set, selections,
/// baselines, degenerate (plus values, normalized, samples, seed).
nlohmann::json to_json(const Analysis& analysis);

/// Writes curve.csv (k,V), weights.csv (k,w) and cumulative.csv (k,W) into `dir`.
void write_plot_data(const std::filesystem::path& dir, const Analysis& analysis);

}  // namespace sic::cli
