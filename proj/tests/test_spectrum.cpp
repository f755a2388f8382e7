#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "sic/error.hpp"
#include "sic/shapes.hpp"
#include "sic/spectrum.hpp"

using sic::ErrorCurve;

namespace {

const ErrorCurve kEigenCurve({8.0, 3.00, 2.01, 1.01, 1.00, 0.98});
const ErrorCurve kToyCurve({10.0, 4.0, 2.0, 1.5, 0.0});

ErrorCurve line(double v0, std::size_t k_max) {
  return sic::piecewise_linear_curve({{0, k_max}, {v0, 0.0}});
}

}  // namespace

TEST_CASE("lambda_max") {
  CHECK(sic::lambda_max(ErrorCurve({3.0, 3.0, 3.0})) == 0.0);
  CHECK(sic::lambda_max(kToyCurve) == 6.0);
  CHECK(sic::lambda_max(kEigenCurve) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(sic::lambda_max(ErrorCurve({1.0})) == 0.0);
  // Increasing curve: floored at zero.
  CHECK(sic::lambda_max(ErrorCurve({1.0, 2.0, 3.0})) == 0.0);
  CHECK(sic::lambda_max(sic::normalize(kEigenCurve)) ==
        doctest::Approx(sic::lambda_max(kEigenCurve)).epsilon(1e-14));
}

TEST_CASE("argmin_cost") {
  CHECK(sic::argmin_cost(kEigenCurve, 1.6) == 1);
  CHECK(sic::argmin_cost(kEigenCurve, 5.0) == 0);
  CHECK(sic::argmin_cost(kEigenCurve, 7.5) == 0);
  CHECK(sic::argmin_cost(kEigenCurve, 0.0) == 5);
  CHECK(sic::argmin_cost(kToyCurve, 0.0) == 4);

  SUBCASE("ties go to the smaller index") {
    // C(1, 2) = C(2, 2) = 6 on the toy curve.
    CHECK(sic::argmin_cost(kToyCurve, 2.0) == 1);
    // Flat tail: k*(0) is the first index attaining min V, not K.
    CHECK(sic::argmin_cost(ErrorCurve({5.0, 1.0, 1.0, 1.0}), 0.0) == 1);
  }
  CHECK_THROWS_AS(sic::argmin_cost(kToyCurve, -0.1), sic::InputError);
}

TEST_CASE("argmin_cost is non-increasing in lambda") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ErrorCurve c(sic::test::random_curve(rng, 2, 40));
    const double lmax = sic::lambda_max(c);
    std::size_t previous = c.max_dim() + 1;
    for (int i = 0; i <= 400; ++i) {
      const std::size_t k = sic::argmin_cost(c, lmax * 1.1 * i / 400.0);
      CHECK(k <= previous);
      previous = k;
    }
    CHECK(previous == 0);
  }
}

TEST_CASE("exact interval partition") {
  SUBCASE("toy curve") {
    const auto p = sic::interval_partition_exact(kToyCurve);
    const std::vector<double> expected{0, 4, 1, 0, 1};
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(p.measures[k] == doctest::Approx(expected[k]));
    CHECK(p.lambda_max == 6.0);
    CHECK(p.hull == std::vector<std::size_t>{0, 1, 2, 4});
    REQUIRE(p.breakpoints.size() == 3);
    CHECK(p.breakpoints[0] == doctest::Approx(1.0));
    CHECK(p.breakpoints[1] == doctest::Approx(2.0));
    CHECK(p.breakpoints[2] == 6.0);
  }
  SUBCASE("eigenvalue curve") {
    const auto p = sic::interval_partition_exact(kEigenCurve);
    const std::vector<double> expected{0, 4.005, 0, 0.98, 0, 0.015};
    for (std::size_t k = 0; k < expected.size(); ++k) {
      CHECK(p.measures[k] == doctest::Approx(expected[k]).epsilon(1e-12));
    }
    CHECK(p.hull == std::vector<std::size_t>{0, 1, 3, 5});
  }
  SUBCASE("straight line puts everything on K") {
    const auto p = sic::interval_partition_exact(line(7.0, 20));
    CHECK(p.lambda_max == doctest::Approx(7.0 / 20.0));
    CHECK(p.measures[20] == doctest::Approx(p.lambda_max).epsilon(1e-14));
    for (std::size_t k = 0; k < 20; ++k) CHECK(p.measures[k] == 0.0);
  }
  SUBCASE("constant curve") {
    const auto p = sic::interval_partition_exact(ErrorCurve({2.0, 2.0, 2.0}));
    CHECK(p.lambda_max == 0.0);
    CHECK(std::all_of(p.measures.begin(), p.measures.end(), [](double m) { return m == 0.0; }));
  }
}

TEST_CASE("partition agrees with the enumeration oracle on random curves") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto v = sic::test::random_curve(rng, 1, 60);
    // Some curves get a rising tail to exercise non-monotone input.
    if (trial % 5 == 0) v.back() += 3.0;
    const ErrorCurve c(v);
    const auto p = sic::interval_partition_exact(c);
    const auto oracle = sic::test::enumerated_measures(v);
    double sum = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      CHECK(std::abs(p.measures[k] - oracle[k]) <= 1e-9 * p.lambda_max);
      sum += p.measures[k];
    }
    CHECK(p.measures[0] == 0.0);
    CHECK(sum == doctest::Approx(p.lambda_max).epsilon(1e-12));
  }
}

TEST_CASE("positive-measure indices are hull vertices other than 0") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const ErrorCurve c(sic::test::random_curve(rng, 2, 80));
    const auto p = sic::interval_partition_exact(c);
    const auto w = sic::weights_exact(c);
    const auto e = sic::elbow_set(w);
    std::vector<std::size_t> vertices(p.hull.begin() + 1, p.hull.end());
    CHECK(e == vertices);
  }
}

TEST_CASE("weights_exact") {
  SUBCASE("eigenvalue curve") {
    const auto w = sic::weights_exact(kEigenCurve);
    const std::vector<double> expected{0, 0.801, 0, 0.196, 0, 0.003};
    for (std::size_t k = 0; k < expected.size(); ++k) {
      CHECK(w.weights[k] == doctest::Approx(expected[k]).epsilon(1e-12));
    }
    CHECK(w.method == sic::WeightMethod::exact);
    CHECK_FALSE(w.degenerate);
  }
  SUBCASE("toy curve") {
    const auto w = sic::weights_exact(kToyCurve);
    CHECK(w.weights[1] == doctest::Approx(2.0 / 3.0));
    CHECK(w.weights[2] == doctest::Approx(1.0 / 6.0));
    CHECK(w.weights[3] == 0.0);
    CHECK(w.weights[4] == doctest::Approx(1.0 / 6.0));
  }
  SUBCASE("line") {
    const auto w = sic::weights_exact(line(3.0, 9));
    CHECK(w.weights[9] == 1.0);
    CHECK(sic::elbow_set(w) == std::vector<std::size_t>{9});
  }
  SUBCASE("constant curve is flagged degenerate") {
    const auto w = sic::weights_exact(ErrorCurve({1.0, 1.0, 1.0, 1.0}));
    CHECK(w.degenerate);
    CHECK(sic::elbow_set(w).empty());
    CHECK(sic::select(w, 0.9) == 0);
    CHECK(sic::select(w, 0.95) == 0);
  }
}

TEST_CASE("weights_grid") {
  SUBCASE("midpoints on the toy curve") {
    const auto w = sic::weights_grid(kToyCurve, 6);
    const std::vector<double> expected{0, 4.0 / 6, 1.0 / 6, 0, 1.0 / 6};
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(w.weights[k] == doctest::Approx(expected[k]));
    CHECK(w.samples == 6);
  }
  SUBCASE("line") {
    const auto w = sic::weights_grid(line(1.0, 12), 100);
    CHECK(w.weights[12] == 1.0);
  }
  SUBCASE("eigenvalue curve within breakpoints / M") {
    const std::size_t m = 1'000'000;
    const auto w = sic::weights_grid(kEigenCurve, m);
    const auto exact = sic::weights_exact(kEigenCurve);
    for (std::size_t k = 0; k < w.weights.size(); ++k) {
      CHECK(std::abs(w.weights[k] - exact.weights[k]) <= 3.0 / m);
    }
  }
  CHECK_THROWS_AS(sic::weights_grid(kToyCurve, 0), sic::InputError);
  CHECK(sic::weights_grid(ErrorCurve({1.0, 1.0}), 10).degenerate);
}

TEST_CASE("weights_mc") {
  SUBCASE("line gets all mass on K") {
    const auto w = sic::weights_mc(line(5.0, 30), 10'000, 7);
    CHECK(w.weights[30] == 1.0);
  }
  SUBCASE("single draw lands on an elbow") {
    const auto exact = sic::weights_exact(kEigenCurve);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto w = sic::weights_mc(kEigenCurve, 1, seed);
      const auto e = sic::elbow_set(w);
      REQUIRE(e.size() == 1);
      CHECK(w.weights[e[0]] == 1.0);
      CHECK(exact.weights[e[0]] > 0.0);
    }
  }
  SUBCASE("binomial agreement on the eigenvalue curve") {
    const std::size_t m = 1'000'000;
    const auto w = sic::weights_mc(kEigenCurve, m, 3);
    const auto exact = sic::weights_exact(kEigenCurve);
    for (std::size_t k = 0; k < w.weights.size(); ++k) {
      const double p = exact.weights[k];
      CHECK(std::abs(w.weights[k] - p) <= 3.0 * std::sqrt(p * (1.0 - p) / m));
    }
  }
  SUBCASE("weights are multiples of 1/M") {
    const std::size_t m = 777;
    const auto w = sic::weights_mc(kToyCurve, m, 99);
    double total = 0.0;
    for (double x : w.weights) {
      const double count = x * m;
      CHECK(count == doctest::Approx(std::round(count)).epsilon(1e-12));
      total += x;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.weights[0] == 0.0);
  }
  SUBCASE("reproducible for fixed (seed, M, partitions)") {
    const auto a = sic::weights_mc(kEigenCurve, 50'000, 42, 4);
    const auto b = sic::weights_mc(kEigenCurve, 50'000, 42, 4);
    CHECK(a.weights == b.weights);
    const auto c = sic::weights_mc(kEigenCurve, 50'000, 43, 4);
    CHECK(a.weights != c.weights);
    CHECK(a.partitions == 4);
    CHECK(a.seed == 42);
  }
  SUBCASE("degenerate") {
    const auto w = sic::weights_mc(ErrorCurve({2.0, 2.0}), 100, 1);
    CHECK(w.degenerate);
    CHECK(sic::select(w, 0.9) == 0);
  }
  CHECK_THROWS_AS(sic::weights_mc(kToyCurve, 0, 1), sic::InputError);
}

TEST_CASE("cumulative") {
  const auto w = sic::weights_exact(kEigenCurve);
  const auto c = sic::cumulative(w);
  const std::vector<double> expected{0.801, 0.801, 0.997, 0.997, 1.0};
  REQUIRE(c.size() == expected.size());
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == doctest::Approx(expected[i]).epsilon(1e-12));

  const auto toy = sic::cumulative(sic::weights_exact(kToyCurve));
  CHECK(toy[0] == doctest::Approx(2.0 / 3.0));
  CHECK(toy[1] == doctest::Approx(5.0 / 6.0));
  CHECK(toy[2] == doctest::Approx(5.0 / 6.0));
  CHECK(toy[3] == doctest::Approx(1.0));

  const auto lin = sic::cumulative(sic::weights_exact(line(2.0, 4)));
  CHECK(lin == std::vector<double>{0, 0, 0, 1});
}

TEST_CASE("elbow_set and select") {
  const auto w = sic::weights_exact(kEigenCurve);
  CHECK(sic::elbow_set(w) == std::vector<std::size_t>{1, 3, 5});
  CHECK(sic::select(w, 0.9) == 3);
  CHECK(sic::select(w, 0.95) == 3);
  CHECK(sic::select(w, 0.5) == 1);
  CHECK(sic::select(w, 1.0) == 5);

  const auto toy = sic::weights_exact(kToyCurve);
  CHECK(sic::select(toy, 0.9) == 4);

  const auto two_piece = sic::weights_exact(sic::piecewise_linear_curve({{0, 5, 50}, {10, 1, 0.55}}));
  CHECK(sic::elbow_set(two_piece) == std::vector<std::size_t>{5, 50});

  CHECK_THROWS_AS(sic::select(w, 0.0), sic::InputError);
  CHECK_THROWS_AS(sic::select(w, 1.5), sic::InputError);
}

TEST_CASE("select always returns a member of E") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> level(0.01, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = sic::weights_exact(ErrorCurve(sic::test::random_curve(rng)));
    const auto e = sic::elbow_set(w);
    const std::size_t k = sic::select(w, level(rng));
    CHECK(std::find(e.begin(), e.end(), k) != e.end());
  }
}

TEST_CASE("widening the index spacing scales the selection") {
  // V'(alpha k) = V(k), gaps filled on straight segments, which never win.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = sic::test::random_curve(rng, 2, 30);
    const std::size_t alpha = 2 + trial % 4;
    sic::PiecewiseLinearSpec spec;
    for (std::size_t k = 0; k < v.size(); ++k) {
      spec.breakpoints.push_back(alpha * k);
      spec.values.push_back(v[k]);
    }
    const auto base = sic::weights_exact(ErrorCurve(v));
    const auto wide = sic::weights_exact(sic::piecewise_linear_curve(spec));
    CHECK(wide.lambda_max == doctest::Approx(base.lambda_max / alpha).epsilon(1e-12));
    for (double level : {0.9, 0.95}) CHECK(sic::select(wide, level) == alpha * sic::select(base, level));
    for (std::size_t k = 1; k < v.size(); ++k) {
      CHECK(wide.weights[alpha * k] == doctest::Approx(base.weights[k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("method names") {
  CHECK(sic::parse_weight_method("mc") == sic::WeightMethod::mc);
  CHECK(sic::to_string(sic::WeightMethod::grid) == "grid");
  CHECK_THROWS_AS(sic::parse_weight_method("bisection"), sic::InputError);
}
