#include "sic/cli/analysis.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "sic/cli/csv_io.hpp"
#include "sic/error.hpp"

namespace sic::cli {
namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

std::ofstream create(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

void validate(const AnalysisConfig& config) {
  if (config.samples == 0) throw InputError("--M must be at least 1");
  if (config.levels.empty()) throw InputError("at least one confidence level is required");
  for (double level : config.levels) {
    if (!(level > 0.0 && level <= 1.0)) {
      throw InputError("confidence level " + format_double(level) + " is outside (0, 1]");
    }
  }
  if (config.tie_break != "smallest") {
    throw InputError("unsupported tie-break policy '" + config.tie_break + "'");
  }
}

Analysis run_analysis(const ErrorCurve& curve, const AnalysisConfig& config) {
  validate(config);
  ErrorCurve analyzed = config.normalize ? normalize(curve) : curve;
  WeightSpectrum spectrum = [&] {
    switch (config.method) {
      case WeightMethod::grid: return weights_grid(analyzed, config.samples);
      case WeightMethod::mc: return weights_mc(analyzed, config.samples, config.seed);
      case WeightMethod::exact: break;
    }
    return weights_exact(analyzed);
  }();
  SelectionReport report = make_report(curve, spectrum, config.levels, config.n_data);
  return {curve, std::move(analyzed), std::move(spectrum), std::move(report)};
}

void render_text(std::ostream& out, const Analysis& a) {
  const auto& s = a.spectrum;
  const auto& r = a.report;
  out << "K = " << a.raw.max_dim() << ", lambda_max = " << fixed(s.lambda_max)
      << ", method = " << to_string(s.method);
  if (s.method != WeightMethod::exact) out << " (M = " << s.samples << ")";
  if (s.method == WeightMethod::mc) out << ", seed = " << s.seed;
  out << '\n';
  if (r.degenerate) out << "DEGENERATE: constant curve (lambda_max = 0); empty model selected\n";

  out << "\n   k             V(k)" << (a.raw == a.analyzed ? "      analyzed" : "      V(k)-min")
      << "       w_k       W_k\n";
  for (std::size_t k = 0; k < a.analyzed.size(); ++k) {
    char line[160];
    const double cum = k == 0 ? 0.0 : r.cumulative[k - 1];
    std::snprintf(line, sizeof(line), "%4zu %16.6f %13.6f %9.6f %9.6f\n", k, a.raw[k],
                  a.analyzed[k], s.weights[k], cum);
    out << line;
  }

  out << "\nelbow set E = " << join(r.elbow_set) << "  (J = " << r.cardinality() << ")\n";
  for (const auto& choice : r.chosen) {
    out << "level " << format_double(choice.level) << ": k_E=" << choice.k << '\n';
  }

  out << "\nbaselines\n";
  for (const auto& b : r.baselines) {
    out << "  " << to_string(b.criterion) << ": ";
    if (b.k) {
      out << "λ=" << format_double(b.lambda.value_or(0.0)) << " → k=" << *b.k << '\n';
    } else {
      out << b.note << '\n';
    }
  }
}

nlohmann::json to_json(const Analysis& a) {
  using nlohmann::json;
  const auto& s = a.spectrum;
  const auto& r = a.report;
  json j;
  j["K"] = a.raw.max_dim();
  j["lambda_max"] = s.lambda_max;
  j["method"] = std::string(to_string(s.method));
  if (s.method != WeightMethod::exact) j["samples"] = s.samples;
  if (s.method == WeightMethod::mc) {
    j["seed"] = s.seed;
    j["partitions"] = s.partitions;
  }
  j["values"] = std::vector<double>(a.raw.values().begin(), a.raw.values().end());
  j["normalized"] = std::vector<double>(a.analyzed.values().begin(), a.analyzed.values().end());
  j["weights"] = s.weights;
  j["cumulative"] = r.cumulative;
  j["elbow_set"] = r.elbow_set;
  j["selections"] = json::array();
  for (const auto& c : r.chosen) j["selections"].push_back({{"level", c.level}, {"k", c.k}});
  j["baselines"] = json::array();
  for (const auto& b : r.baselines) {
    json row{{"criterion", std::string(to_string(b.criterion))}};
    row["lambda"] = b.lambda ? json(*b.lambda) : json(nullptr);
    row["k"] = b.k ? json(*b.k) : json(nullptr);
    if (!b.note.empty()) row["note"] = b.note;
    j["baselines"].push_back(std::move(row));
  }
  j["degenerate"] = r.degenerate;
  return j;
}

void write_plot_data(const std::filesystem::path& dir, const Analysis& a) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create '" + dir.string() + "': " + ec.message());

  auto curve = create(dir / "curve.csv");
  write_curve_csv(curve, a.analyzed);

  auto weights = create(dir / "weights.csv");
  weights << "k,w\n";
  for (std::size_t k = 0; k < a.spectrum.weights.size(); ++k) {
    weights << k << ',' << format_double(a.spectrum.weights[k]) << '\n';
  }

  auto cum = create(dir / "cumulative.csv");
  cum << "k,W\n";
  for (std::size_t k = 0; k < a.report.cumulative.size(); ++k) {
    cum << k + 1 << ',' << format_double(a.report.cumulative[k]) << '\n';
  }
}

}  // namespace sic::cli
