#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sic/cli/analysis.hpp"
#include "sic/cli/commands.hpp"
#include "sic/cli/csv_io.hpp"
#include "sic/error.hpp"

namespace fs = std::filesystem;
using sic::ErrorCurve;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"sic"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("sic-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  fs::path file(const std::string& name, const std::string& content = {}) const {
    const fs::path p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

ErrorCurve parse(const std::string& text) {
  std::istringstream in(text);
  return sic::cli::read_curve_csv(in, "t.csv");
}

std::string parse_error(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const sic::InputError& e) {
    return e.what();
  }
  return {};
}

const char* const kEigenCsv = "k,V\n0,8\n1,3.00\n2,2.01\n3,1.01\n4,1.00\n5,0.98\n";

}  // namespace

TEST_CASE("curve CSV parsing") {
  CHECK(parse("k,V\n0,3\n1,1.5\n") == ErrorCurve({3.0, 1.5}));
  CHECK(parse("# comment\nk,V\n\n0,3\n# mid\n1,2\n") == ErrorCurve({3.0, 2.0}));
  CHECK(parse(" k , V \r\n0, 3\r\n") == ErrorCurve({3.0}));

  CHECK(parse_error("0,3\n").find("t.csv:1:") == 0);
  CHECK(parse_error("k,V\n0,3\n2,1\n").find("t.csv:3:") == 0);
  CHECK(parse_error("k,V\n0,3\n1,abc\n").find("t.csv:3:") == 0);
  CHECK(parse_error("k,V\n0,3\n1,nan\n").find("t.csv:3:") == 0);
  CHECK(parse_error("k,V\n0,3,4\n").find("t.csv:2:") == 0);
  CHECK_FALSE(parse_error("k,V\n").empty());
}

TEST_CASE("curve CSV round trip is exact") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::vector<double> values(40);
  for (auto& v : values) v = u(rng) / 3.0;
  values.push_back(1e-300);
  values.push_back(0.1);
  const ErrorCurve curve(values);
  std::ostringstream out;
  sic::cli::write_curve_csv(out, curve);
  CHECK(parse(out.str()) == curve);
}

TEST_CASE("numeric table") {
  std::istringstream with_header("x,y\n1,2\n3,4\n");
  const auto t = sic::cli::read_numeric_table(with_header);
  CHECK(t.header == std::vector<std::string>{"x", "y"});
  CHECK(t.column("y") == 1);
  CHECK(t.column_values(1) == std::vector<double>{2, 4});
  CHECK_THROWS_AS(t.column("z"), sic::InputError);

  std::istringstream bare("1,2\n3,4\n");
  const auto b = sic::cli::read_numeric_table(bare);
  CHECK(b.header.empty());
  CHECK(b.rows.size() == 2);

  std::istringstream ragged("1,2\n3\n");
  CHECK_THROWS_AS(sic::cli::read_numeric_table(ragged), sic::InputError);
}

TEST_CASE("analyze the eigenvalue curve") {
  TempDir dir;
  const auto csv = dir.file("eig.csv", kEigenCsv);
  const auto r = invoke({"analyze", csv.string()});
  CHECK(r.code == sic::cli::kOk);
  CHECK(r.out.find("k_E=3") != std::string::npos);
  CHECK(r.out.find("AED: λ=1.6 → k=1") != std::string::npos);
  CHECK(r.out.find("J = 3") != std::string::npos);
}

TEST_CASE("analyze JSON and plot data") {
  TempDir dir;
  const auto csv = dir.file("eig.csv", kEigenCsv);
  const auto json_path = dir.path() / "out.json";
  const auto plots = dir.path() / "plots";
  const auto r = invoke({"analyze", csv.string(), "--json", json_path.string(), "--plot-data",
                         plots.string(), "--n-data", "10000", "--level", "0.5"});
  REQUIRE(r.code == sic::cli::kOk);

  std::ifstream in(json_path);
  const auto j = nlohmann::json::parse(in);
  for (const char* key : {"K", "lambda_max", "method", "weights", "cumulative", "elbow_set",
                          "selections", "baselines", "degenerate"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["K"] == 5);
  CHECK(j["method"] == "exact");
  CHECK(j["elbow_set"] == std::vector<int>{1, 3, 5});
  CHECK(j["selections"].size() == 1);
  CHECK(j["selections"][0]["k"] == 1);
  CHECK(j["baselines"].size() == 4);
  CHECK(j["degenerate"] == false);

  for (const char* name : {"curve.csv", "weights.csv", "cumulative.csv"}) {
    CHECK_MESSAGE(fs::exists(plots / name), name);
  }
  CHECK(sic::cli::read_curve_file(plots / "curve.csv") == sic::normalize(parse(kEigenCsv)));
}

TEST_CASE("constant curve is degenerate but succeeds") {
  TempDir dir;
  const auto csv = dir.file("flat.csv", "k,V\n0,1\n1,1\n2,1\n");
  const auto r = invoke({"analyze", csv.string()});
  CHECK(r.code == sic::cli::kOk);
  CHECK(r.out.find("DEGENERATE") != std::string::npos);
  CHECK(r.out.find("k_E=0") != std::string::npos);
}

TEST_CASE("Monte Carlo on a straight line puts all mass on K") {
  TempDir dir;
  const auto line = dir.path() / "line.csv";
  REQUIRE(invoke({"build-curve", "ideal", "--breakpoints", "0,50", "--values", "10,0", "-o",
                  line.string()})
              .code == sic::cli::kOk);
  CHECK(sic::cli::read_curve_file(line).size() == 51);

  const auto json_path = dir.path() / "line.json";
  const auto r = invoke({"analyze", line.string(), "--method", "mc", "--M", "20000", "--seed",
                         "3", "--json", json_path.string()});
  REQUIRE(r.code == sic::cli::kOk);
  std::ifstream in(json_path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["weights"][50] == 1.0);
  CHECK(j["samples"] == 20000);
  CHECK(j["seed"] == 3);
}

TEST_CASE("build-curve output feeds analyze unchanged") {
  TempDir dir;
  const auto data = dir.file("cov.csv", "1,0,0\n0,2,0.5\n0,0.5,3\n");
  const auto curve = dir.path() / "eig.csv";
  REQUIRE(invoke({"build-curve", "eigen", data.string(), "-o", curve.string()}).code ==
          sic::cli::kOk);
  const auto json_path = dir.path() / "eig.json";
  REQUIRE(invoke({"analyze", curve.string(), "--no-normalize", "--json", json_path.string()})
              .code == sic::cli::kOk);
  std::ifstream in(json_path);
  const auto j = nlohmann::json::parse(in);
  const auto v = sic::cli::read_curve_file(curve);
  REQUIRE(j["values"].size() == v.size());
  for (std::size_t k = 0; k < v.size(); ++k) CHECK(j["values"][k].get<double>() == v[k]);

  // Stdout form parses back to the same curve.
  const auto r = invoke({"build-curve", "eigen", data.string()});
  CHECK(parse(r.out) == v);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(invoke({"analyze", (dir.path() / "missing.csv").string()}).code == sic::cli::kInputError);
  const auto bad = dir.file("bad.csv", "k,V\n0,1\n2,0\n");
  const auto r = invoke({"analyze", bad.string()});
  CHECK(r.code == sic::cli::kInputError);
  CHECK(r.err.find("bad.csv:3:") != std::string::npos);

  const auto eig = dir.file("eig.csv", kEigenCsv);
  CHECK(invoke({"analyze", eig.string(), "--level", "1.5"}).code == sic::cli::kInputError);
  CHECK(invoke({"analyze", eig.string(), "--method", "simplex"}).code == sic::cli::kInputError);

  const auto indefinite = dir.file("ind.csv", "1,3\n3,1\n");
  CHECK(invoke({"build-curve", "eigen", indefinite.string()}).code == sic::cli::kNumericalError);

  const auto exact = dir.file("xy.csv", "x,y\n0,1\n1,3\n2,5\n3,7\n4,9\n");
  CHECK(invoke({"build-curve", "poly", exact.string(), "--max-order", "2"}).code ==
        sic::cli::kNumericalError);

  CHECK(invoke({"demo", "nonesuch"}).code == sic::cli::kInputError);
  CHECK(invoke({}).code == sic::cli::kInputError);
}

TEST_CASE("seed comes from the environment unless given") {
  ::setenv("SIC_SEED", "41", 1);
  CHECK(sic::cli::default_seed() == 41);
  TempDir dir;
  const auto line = dir.file("line.csv", "k,V\n0,2\n1,1\n2,0.5\n");
  const auto env_json = dir.path() / "env.json";
  const auto flag_json = dir.path() / "flag.json";
  REQUIRE(invoke({"analyze", line.string(), "--method", "mc", "--M", "100", "--json",
                  env_json.string()})
              .code == sic::cli::kOk);
  REQUIRE(invoke({"analyze", line.string(), "--method", "mc", "--M", "100", "--seed", "7",
                  "--json", flag_json.string()})
              .code == sic::cli::kOk);
  ::unsetenv("SIC_SEED");
  CHECK(sic::cli::default_seed() == 0);
  CHECK(sic::cli::default_seed(9) == 9);

  std::ifstream a(env_json), b(flag_json);
  CHECK(nlohmann::json::parse(a)["seed"] == 41);
  CHECK(nlohmann::json::parse(b)["seed"] == 7);
}

TEST_CASE("demos") {
  const auto& names = sic::cli::demo_names();
  CHECK(names.size() >= 8);
  CHECK_THROWS_AS(sic::cli::make_demo("nonesuch", {}), sic::InputError);

  const auto pca = sic::cli::make_demo("pca", {});
  CHECK(pca.analysis.report.chosen.at(0).k == 3);
  const auto convex = sic::cli::make_demo("i3-convex", {});
  CHECK(convex.analysis.report.elbow_set == std::vector<std::size_t>{5, 50});
  const auto r = invoke({"demo", "i4"});
  CHECK(r.code == sic::cli::kOk);
  CHECK(r.out.find("expected:") != std::string::npos);
}
