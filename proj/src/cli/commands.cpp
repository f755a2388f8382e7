#include "sic/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sic/cli/csv_io.hpp"
#include "sic/eigen_curve.hpp"
#include "sic/error.hpp"
#include "sic/kmeans.hpp"
#include "sic/regression.hpp"
#include "sic/shapes.hpp"

namespace sic::cli {
namespace {

Eigen::MatrixXd to_matrix(const NumericTable& table) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(table.rows.size()),
                    static_cast<Eigen::Index>(table.cols()));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = table.rows[i][j];
    }
  }
  return m;
}

std::size_t column_or(const NumericTable& table, const std::string& name, std::size_t fallback) {
  if (!name.empty()) return table.column(name);
  if (fallback >= table.cols()) throw InputError("input has too few columns");
  return fallback;
}

void emit_curve(const ErrorCurve& curve, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    write_curve_csv(out, curve);
    return;
  }
  std::ofstream file(output);
  if (!file) throw InputError("cannot write '" + output + "'");
  write_curve_csv(file, curve);
}

struct AnalyzeArgs {
  std::string curve_file;
  std::string method = "exact";
  std::size_t samples = 1'000'000;
  std::optional<std::uint64_t> seed;
  std::vector<double> levels;
  std::optional<std::size_t> n_data;
  bool no_normalize = false;
  std::string json_file;
  std::string plot_dir;
};

int do_analyze(const AnalyzeArgs& args, std::ostream& out) {
  AnalysisConfig config;
  config.method = parse_weight_method(args.method);
  config.samples = args.samples;
  config.seed = args.seed ? *args.seed : default_seed();
  if (!args.levels.empty()) config.levels = args.levels;
  config.normalize = !args.no_normalize;
  config.n_data = args.n_data;

  const ErrorCurve curve = read_curve_file(args.curve_file);
  const Analysis analysis = run_analysis(curve, config);
  render_text(out, analysis);
  if (!args.json_file.empty()) {
    std::ofstream json(args.json_file);
    if (!json) throw InputError("cannot write '" + args.json_file + "'");
    json << to_json(analysis).dump(2) << '\n';
  }
  if (!args.plot_dir.empty()) write_plot_data(args.plot_dir, analysis);
  return kOk;
}

struct BuildArgs {
  std::string input;
  std::string output;
  // ideal
  std::vector<std::size_t> breakpoints;
  std::vector<double> values;
  // poly
  std::size_t max_order = 0;
  std::string x_col;
  std::string y_col;
  // nested
  std::string target;
  std::vector<std::string> features;
  bool no_intercept = false;
  // kmeans
  std::size_t max_k = 0;
  std::size_t restarts = 200;
  std::optional<std::uint64_t> seed;
  std::string init = "plusplus";
  std::string spread = "mean";
  // eigen
  bool from_data = false;
  // accuracy
  std::string column;
};

ErrorCurve build_poly(const BuildArgs& a) {
  const NumericTable t = read_numeric_table_file(a.input);
  const auto x = t.column_values(column_or(t, a.x_col, 0));
  const auto y = t.column_values(column_or(t, a.y_col, 1));
  return polynomial_nll_curve(x, y, a.max_order);
}

ErrorCurve build_nested(const BuildArgs& a) {
  const NumericTable t = read_numeric_table_file(a.input);
  if (t.header.empty()) throw InputError("dataset CSV needs a header row");
  const std::size_t target = t.column(a.target);
  std::vector<std::size_t> cols;
  if (a.features.empty()) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (j != target) cols.push_back(j);
    }
  } else {
    for (const auto& f : a.features) cols.push_back(t.column(f));
  }
  Dataset data;
  data.targets = t.column_values(target);
  data.features.resize(static_cast<Eigen::Index>(t.rows.size()),
                       static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      data.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t.rows[i][cols[j]];
    }
  }
  return gaussian_nll_curve(data, !a.no_intercept);
}

ErrorCurve build_kmeans(const BuildArgs& a) {
  const NumericTable t = read_numeric_table_file(a.input);
  KMeansOptions options;
  options.restarts = a.restarts;
  options.seed = a.seed ? *a.seed : default_seed();
  if (a.init == "plusplus") {
    options.init = KMeansInit::plus_plus;
  } else if (a.init == "uniform") {
    options.init = KMeansInit::uniform;
  } else {
    throw InputError("--init must be plusplus or uniform");
  }
  if (a.spread == "mean") {
    options.spread = ClusterSpread::mean_squared_distance;
  } else if (a.spread == "sum") {
    options.spread = ClusterSpread::sum_of_squares;
  } else {
    throw InputError("--spread must be mean or sum");
  }
  return kmeans_variance_curve(PointCloud{to_matrix(t)}, a.max_k, options);
}

ErrorCurve build_eigen(const BuildArgs& a) {
  const Eigen::MatrixXd m = to_matrix(read_numeric_table_file(a.input));
  return a.from_data ? eigen_curve_from_data(m) : eigen_curve(m);
}

ErrorCurve build_accuracy(const BuildArgs& a) {
  const NumericTable t = read_numeric_table_file(a.input);
  std::size_t col = t.cols() - 1;
  if (!a.column.empty()) {
    col = t.column(a.column);
  } else if (!t.header.empty()) {
    for (std::size_t j = 0; j < t.header.size(); ++j) {
      if (t.header[j] == "accuracy") col = j;
    }
  }
  return accuracy_curve(t.column_values(col));
}

}  // namespace

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv(std::string(kSeedEnv).c_str());
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') throw InputError(std::string(kSeedEnv) + " is not an integer");
  return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral information criterion: elbow detection over error curves", "sic"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Weight spectrum, elbow set and selection for a curve");
  an->add_option("curve", analyze.curve_file, "Curve CSV (header k,V)")->required();
  an->add_option("--method", analyze.method, "exact, grid or mc")
      ->check(CLI::IsMember({"exact", "grid", "mc"}));
  an->add_option("--M", analyze.samples, "Samples for grid/mc")->check(CLI::PositiveNumber);
  an->add_option("--seed", analyze.seed, "Monte Carlo seed (default $SIC_SEED or 0)");
  an->add_option("--level", analyze.levels, "Confidence level, repeatable (default 0.9 0.95)");
  an->add_option("--n-data", analyze.n_data, "Number of observations for BIC/HQIC");
  an->add_flag("--no-normalize", analyze.no_normalize, "Analyze V as given");
  an->add_option("--json", analyze.json_file, "Write the report as JSON");
  an->add_option("--plot-data", analyze.plot_dir, "Write plot series CSVs into this directory");

  BuildArgs build;
  auto* bc = app.add_subcommand("build-curve", "Build a curve CSV from data");
  bc->require_subcommand(1);
  auto with_io = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", build.input, "Input CSV")->required();
    sub->add_option("-o,--output", build.output, "Output curve CSV (default stdout)");
  };
  auto* ideal = bc->add_subcommand("ideal", "Piecewise linear curve");
  with_io(ideal, false);
  ideal->add_option("--breakpoints", build.breakpoints)->delimiter(',')->required();
  ideal->add_option("--values", build.values)->delimiter(',')->required();

  auto* poly = bc->add_subcommand("poly", "Gaussian deviance of polynomial fits, order 0..K");
  with_io(poly, true);
  poly->add_option("--max-order", build.max_order)->required();
  poly->add_option("--x-col", build.x_col, "x column name (default first column)");
  poly->add_option("--y-col", build.y_col, "y column name (default second column)");

  auto* nested = bc->add_subcommand("nested", "Gaussian deviance of nested linear models");
  with_io(nested, true);
  nested->add_option("--target", build.target, "Target column name")->required();
  nested->add_option("--features", build.features, "Ranked feature columns")->delimiter(',');
  nested->add_flag("--no-intercept", build.no_intercept);

  auto* km = bc->add_subcommand("kmeans", "Log restart-averaged within-cluster variance");
  with_io(km, true);
  km->add_option("--max-k", build.max_k, "Largest index k (k + 1 clusters)")->required();
  km->add_option("--restarts", build.restarts)->check(CLI::PositiveNumber);
  km->add_option("--seed", build.seed);
  km->add_option("--init", build.init, "plusplus or uniform");
  km->add_option("--spread", build.spread, "mean (per-cluster variance) or sum (SSE)");

  auto* eig = bc->add_subcommand("eigen", "Trace followed by descending eigenvalues");
  with_io(eig, true);
  eig->add_flag("--from-data", build.from_data, "Input rows are observations, not a covariance");

  auto* acc = bc->add_subcommand("accuracy", "V = 1 - accuracy");
  with_io(acc, true);
  acc->add_option("--column", build.column, "Accuracy column name");

  std::string demo_name;
  std::optional<std::uint64_t> demo_seed;
  std::size_t demo_restarts = 200;
  auto* demo = app.add_subcommand("demo", "Regenerate a reference scenario end to end");
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember(demo_names()));
  demo->add_option("--seed", demo_seed);
  demo->add_option("--restarts", demo_restarts, "k-means restarts (clustering)")
      ->check(CLI::PositiveNumber);
  std::string demo_json;
  demo->add_option("--json", demo_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*an) return do_analyze(analyze, out);
    if (*bc) {
      ErrorCurve curve = [&] {
        if (*ideal) return piecewise_linear_curve({build.breakpoints, build.values});
        if (*poly) return build_poly(build);
        if (*nested) return build_nested(build);
        if (*km) return build_kmeans(build);
        if (*eig) return build_eigen(build);
        return build_accuracy(build);
      }();
      emit_curve(curve, build.output, out);
      return kOk;
    }
    if (*demo) {
      DemoOptions options;
      options.seed = demo_seed ? *demo_seed : default_seed();
      options.restarts = demo_restarts;
      const DemoResult result = make_demo(demo_name, options);
      out << result.title << "\n\n";
      render_text(out, result.analysis);
      out << "\nexpected: " << result.expected << '\n';
      if (!demo_json.empty()) {
        std::ofstream json(demo_json);
        if (!json) throw InputError("cannot write '" + demo_json + "'");
        json << to_json(result.analysis).dump(2) << '\n';
      }
      return kOk;
    }
  } catch (const NumericalError& e) {
    err << "sic: numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const Error& e) {
    err << "sic: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace sic::cli
