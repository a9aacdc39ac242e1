#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "philab/errors.hpp"
#include "philab/max_limits.hpp"
#include "philab/stats.hpp"

using namespace philab;

namespace {
const LtSpec kGamma11 = LtSpec::gamma(1.0, 1.0);
const ExponentMeasureSpec kFrechet11 =
    ExponentMeasureSpec::indep_frechet(1.0, 1.0);
}  // namespace

TEST_CASE("h_theta_eval and the G^theta relation") {
  const MaxSchemeSpec scheme{kFrechet11, 0.25};
  for (const Point2& y : log_grid2(0.25, 4.0, 5)) {
    const double g = mid_df_eval(kFrechet11, y[0], y[1]);
    CHECK(h_theta_eval(scheme, y[0], y[1]) ==
          doctest::Approx(std::pow(g, 0.25)).epsilon(1e-12));
  }
}

TEST_CASE("mid vector sampling") {
  SUBCASE("forced uniforms reproduce the inversion formula") {
    const MaxSchemeSpec scheme{kFrechet11, 1.0};
    const double u = std::exp(-1.0);
    const Point2 y = mid_vector_from_uniforms(scheme, u, u);
    CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(y[1] == doctest::Approx(1.0).epsilon(1e-12));
    // alpha rescales through the 1/alpha power
    const MaxSchemeSpec scheme2{ExponentMeasureSpec::indep_frechet(2.0, 1.0),
                                4.0};
    const Point2 y2 = mid_vector_from_uniforms(scheme2, u, u);
    CHECK(y2[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(y2[1] == doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("logistic dependence has no sampler") {
    const MaxSchemeSpec scheme{ExponentMeasureSpec::logistic(1.0, 0.5), 1.0};
    RandomStream rng = make_stream(51, 0);
    CHECK_THROWS_AS(sample_mid_vector(scheme, rng), std::domain_error);
  }
  SUBCASE("marginal distribution") {
    const MaxSchemeSpec scheme{kFrechet11, 1.0};
    RandomStream rng = make_stream(52, 0);
    const std::size_t n = 100000;
    std::size_t below = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (sample_mid_vector(scheme, rng)[0] <= 1.0) ++below;
    const double p = std::exp(-1.0);
    const double se = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(static_cast<double>(below) / n - p) <= 4.0 * se);
  }
  SUBCASE("components are independent") {
    const MaxSchemeSpec scheme{kFrechet11, 1.0};
    RandomStream rng = make_stream(53, 0);
    const std::size_t n = 100000;
    // indicator correlation at the marginal medians
    const double cut = std::pow(1.0 / std::log(2.0), 1.0);  // exp(-1/y)=0.5
    double p1 = 0.0, p2 = 0.0, p12 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 y = sample_mid_vector(scheme, rng);
      const double a = y[0] <= cut ? 1.0 : 0.0;
      const double b = y[1] <= cut ? 1.0 : 0.0;
      p1 += a;
      p2 += b;
      p12 += a * b;
    }
    p1 /= n;
    p2 /= n;
    p12 /= n;
    const double se = 0.25 / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(p12 - p1 * p2) <= 4.0 * se);
  }
}

TEST_CASE("EmpiricalDf2") {
  const EmpiricalDf2 df({{0.0, 0.0}, {1.0, 2.0}, {2.0, 1.0}, {3.0, 3.0}});
  CHECK(df.eval(0.5, 0.5) == doctest::Approx(0.25));
  CHECK(df.eval(2.0, 2.0) == doctest::Approx(0.75));
  CHECK(df.eval(10.0, 10.0) == doctest::Approx(1.0));
  CHECK(df.eval(-1.0, 10.0) == doctest::Approx(0.0));
  // componentwise nondecreasing
  double prev = 0.0;
  for (double y : linspace(0.0, 4.0, 9)) {
    const double cur = df.eval(y, y);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("nas_max_residual") {
  SUBCASE("frozen scalar value") {
    const std::vector<Point2> grid = {{1.0, 1.0}};  // T = 2
    CHECK(nas_max_residual(kFrechet11, 0.01, grid) ==
          doctest::Approx(0.0198673).epsilon(1e-5));
    CHECK(std::abs(nas_max_residual(kFrechet11, 0.01, grid) - 0.0198673) <
          1e-7);
  }
  SUBCASE("infinite corner contributes nothing") {
    const double inf = std::numeric_limits<double>::infinity();
    const std::vector<Point2> grid = {{inf, inf}};
    CHECK(nas_max_residual(kFrechet11, 0.01, grid) == 0.0);
  }
  SUBCASE("halving theta halves the residual within 10%") {
    // first-order regime: theta * T must be small across the grid
    const std::vector<Point2> grid = log_grid2(0.25, 4.0, 7);
    for (double theta : {1e-2, 1e-3, 1e-4}) {
      const double full = nas_max_residual(kFrechet11, theta, grid);
      const double half = nas_max_residual(kFrechet11, theta / 2.0, grid);
      CHECK(half <= 0.55 * full);
      CHECK(half >= 0.45 * full);
    }
  }
}

TEST_CASE("simulate_n_max bookkeeping") {
  SUBCASE("j >= 1 never yields the bottom") {
    const MaxSchemeSpec scheme{kFrechet11, 0.5};
    const PgfSpec count{1, 1, 0.5, kGamma11};
    const auto df = simulate_n_max(scheme, count, 2000, 61);
    for (const Point2& p : df.points()) {
      CHECK(p[0] > 0.0);
      CHECK(p[1] > 0.0);
    }
  }
  SUBCASE("atom at the bottom matches P(N=0)") {
    const MaxSchemeSpec scheme{kFrechet11, 1.0};
    const PgfSpec count{0, 1, 1.0, kGamma11};
    const std::size_t reps = 20000;
    const auto df = simulate_n_max(scheme, count, reps, 62);
    std::size_t bottoms = 0;
    for (const Point2& p : df.points())
      if (p[0] == 0.0 && p[1] == 0.0) ++bottoms;
    const double p0 = pgf_eval(count, 0.0);
    const double se = std::sqrt(p0 * (1.0 - p0) / reps);
    CHECK(std::abs(static_cast<double>(bottoms) / reps - p0) <= 4.0 * se);
  }
  SUBCASE("deterministic in the seed") {
    const MaxSchemeSpec scheme{kFrechet11, 0.5};
    const PgfSpec count{0, 1, 0.5, kGamma11};
    const auto a = simulate_n_max(scheme, count, 3000, 63);
    const auto b = simulate_n_max(scheme, count, 3000, 63);
    CHECK(a.points() == b.points());
  }
}

TEST_CASE("max_limit_report transfer theorem") {
  const std::vector<Point2> y_grid = log_grid2(0.25, 4.0, 7);

  SUBCASE("geometric count reaches F = 1/(1+T)") {
    MaxLimitConfig config;
    config.mu = kFrechet11;
    config.count = PgfSpec{0, 1, 1.0, kGamma11};
    config.phi = kGamma11;
    config.schedule = {1e-1, 1e-2};
    config.y_grid = y_grid;
    config.reps = 100000;
    config.tolerance = 0.02;
    config.seed = 71;
    const auto report = max_limit_report(config);
    CHECK(report.pass);
    CHECK(report.final_distance() <= 0.02);
    // closed-form spot value the empirical df is converging to
    CHECK(phi_mid_df_eval(kGamma11, kFrechet11, 1.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    REQUIRE(report.residuals.size() == 2);
    CHECK(report.residuals[1] < report.residuals[0]);
  }
  SUBCASE("k=2 counts target phi(2T)") {
    MaxLimitConfig config;
    config.mu = kFrechet11;
    config.count = PgfSpec{0, 2, 1.0, kGamma11};
    config.phi = kGamma11;
    config.schedule = {1e-1, 1e-2};
    config.y_grid = y_grid;
    config.reps = 50000;
    config.tolerance = 0.03;
    config.seed = 72;
    const auto report = max_limit_report(config);
    CHECK(report.pass);
    // target at (1,1) is 1/(1+2T) = 0.2, not 1/(1+T)
    CHECK(lt_eval(kGamma11, 2.0 * exponent_measure_eval(kFrechet11, 1.0, 1.0)) ==
          doctest::Approx(0.2).epsilon(1e-12));
  }
  SUBCASE("positive stable counts need the clamp policy") {
    MaxLimitConfig config;
    config.mu = kFrechet11;
    config.count = PgfSpec{0, 1, 1.0, LtSpec::positive_stable(0.5)};
    config.phi = LtSpec::positive_stable(0.5);
    config.schedule = {1e-1, 1e-2};
    config.y_grid = y_grid;
    // clamped heavy-tail counts are expensive to realize; keep reps modest
    config.reps = 20000;
    config.tolerance = 0.04;
    config.seed = 73;
    config.tail = TailPolicy::Clamp;
    const auto report = max_limit_report(config);
    CHECK(report.pass);
    // target exp(-sqrt(T)); at (1,1): exp(-sqrt(2))
    CHECK(phi_mid_df_eval(config.phi, kFrechet11, 1.0, 1.0) ==
          doctest::Approx(std::exp(-std::sqrt(2.0))).epsilon(1e-12));
  }
}

TEST_CASE("subordinated_cdf") {
  SUBCASE("degenerate draws reproduce G exactly") {
    const std::vector<double> unit = {1.0, 1.0, 1.0};
    const auto est = subordinated_cdf_from_draws(unit, kFrechet11, 1.0, 2.0);
    CHECK(est.value ==
          doctest::Approx(mid_df_eval(kFrechet11, 1.0, 2.0)).epsilon(1e-14));
    CHECK(est.std_error == doctest::Approx(0.0));
  }
  SUBCASE("gamma subordinator gives 1/3 at (1,1)") {
    RandomStream rng = make_stream(81, 0);
    const auto est = subordinated_cdf(kGamma11, kFrechet11, 1.0, 1.0, 100000,
                                      rng);
    CHECK(std::abs(est.value - 1.0 / 3.0) <= 3.0 * est.std_error);
    CHECK(est.std_error < 0.01);
  }
  SUBCASE("stable subordinator gives exp(-sqrt 2) at (1,1)") {
    RandomStream rng = make_stream(82, 0);
    const auto est = subordinated_cdf(LtSpec::positive_stable(0.5), kFrechet11,
                                      1.0, 1.0, 100000, rng);
    CHECK(std::abs(est.value - std::exp(-std::sqrt(2.0))) <=
          3.0 * est.std_error);
  }
}

TEST_CASE("subordination equivalence chain on the grid") {
  const std::vector<double> axis = logspace(0.25, 4.0, 7);
  for (const LtSpec& phi : {kGamma11, LtSpec::positive_stable(0.5)})
    for (const ExponentMeasureSpec& mu :
         {kFrechet11, ExponentMeasureSpec::logistic(1.0, 0.5)}) {
      for (double y1 : axis)
        for (double y2 : axis) {
          const double f = phi_mid_df_eval(phi, mu, y1, y2);
          const double g = mid_df_eval(mu, y1, y2);
          // recover the MID base from the phi-MID value
          CHECK(std::abs(recover_mid_from_phi_mid(phi, f) - g) <= 1e-10);
        }
      // subordination at one interior point per pair
      RandomStream rng = make_stream(83, 0);
      const auto est = subordinated_cdf(phi, mu, 1.0, 1.0, 100000, rng);
      const double f = phi_mid_df_eval(phi, mu, 1.0, 1.0);
      CHECK(std::abs(est.value - f) <= 3.0 * est.std_error + 1e-6);
    }
}

TEST_CASE("mid_supermodularity_check") {
  const std::vector<double> lattice = logspace(0.1, 10.0, 20);

  SUBCASE("independent Frechet is exactly modular") {
    const auto df = [](double y1, double y2) {
      return mid_df_eval(kFrechet11, y1, y2);
    };
    const auto result = mid_supermodularity_check(df, lattice, lattice);
    CHECK(result.pass);
    CHECK(std::abs(result.worst_delta) <= 1e-12);
  }
  SUBCASE("logistic dependence passes with the frozen rectangle value") {
    const ExponentMeasureSpec mu = ExponentMeasureSpec::logistic(1.0, 0.5);
    const auto df = [&](double y1, double y2) {
      return mid_df_eval(mu, y1, y2);
    };
    const auto result = mid_supermodularity_check(df, lattice, lattice);
    CHECK(result.pass);
    CHECK(result.worst_delta <= 1e-9);
    // the specific rectangle (1,1)-(2,2)
    const auto t = [&](double a, double b) {
      return exponent_measure_eval(mu, a, b);
    };
    const double delta = t(1.0, 1.0) + t(2.0, 2.0) - t(1.0, 2.0) - t(2.0, 1.0);
    CHECK(delta == doctest::Approx(-0.1147476).epsilon(1e-6));
  }
  SUBCASE("phi-MID laws keep the structure under recovery") {
    for (const LtSpec& phi : {kGamma11, LtSpec::positive_stable(0.5)}) {
      const auto df = [&](double y1, double y2) {
        return recover_mid_from_phi_mid(
            phi, phi_mid_df_eval(phi, kFrechet11, y1, y2));
      };
      CHECK(mid_supermodularity_check(df, lattice, lattice).pass);
    }
  }
  SUBCASE("corrupted evaluator fails with a reported rectangle") {
    // negative-dependence perturbation of the independent Frechet df
    const auto g1 = [](double y) { return std::exp(-1.0 / y); };
    const auto df = [&](double y1, double y2) {
      const double g = mid_df_eval(kFrechet11, y1, y2);
      return g * (1.0 - 0.5 * (1.0 - g1(y1)) * (1.0 - g1(y2)));
    };
    const auto result = mid_supermodularity_check(df, lattice, lattice);
    CHECK_FALSE(result.pass);
    CHECK(result.worst_delta > 1e-6);
    CHECK(result.lower[0] < result.upper[0]);
    CHECK(result.lower[1] < result.upper[1]);
  }
  SUBCASE("nonpositive df is a domain error") {
    const auto df = [](double y1, double) { return y1 - 5.0; };
    CHECK_THROWS_AS(mid_supermodularity_check(df, lattice, lattice),
                    std::domain_error);
  }
}

TEST_CASE("logistic family closes on independence as r -> 1") {
  const std::vector<Point2> grid = log_grid2(0.25, 4.0, 7);
  for (double r : {0.9, 0.99, 0.9999999}) {
    const ExponentMeasureSpec mu = ExponentMeasureSpec::logistic(1.0, r);
    double gap = 0.0;
    for (const Point2& y : grid)
      gap = std::max(gap, std::abs(phi_mid_df_eval(kGamma11, mu, y[0], y[1]) -
                                   phi_mid_df_eval(kGamma11, kFrechet11, y[0],
                                                   y[1])));
    if (r > 0.999) CHECK(gap <= 1e-6);
  }
}

TEST_CASE("max_attraction_report") {
  const std::vector<Point2> y_grid = log_grid2(0.25, 4.0, 7);

  SUBCASE("single point closed form") {
    MaxAttractionConfig config;
    config.base = kFrechet11;
    config.norming_exponent = {1.0, 1.0};
    config.target = kFrechet11;
    config.phi = kGamma11;
    config.n_schedule = {100.0};
    config.y_grid = {{1.0, 1.0}};
    config.tolerance = 1e-2;
    const auto report = max_attraction_report(config);
    REQUIRE(report.distances.size() == 1);
    const double composed = 1.0 / (1.0 + 100.0 * (1.0 - std::exp(-0.02)));
    CHECK(composed == doctest::Approx(0.3355565).epsilon(1e-6));
    CHECK(report.distances[0] ==
          doctest::Approx(std::abs(composed - 1.0 / 3.0)).epsilon(1e-6));
  }
  SUBCASE("schedule converges at first order") {
    MaxAttractionConfig config;
    config.base = kFrechet11;
    config.norming_exponent = {1.0, 1.0};
    config.target = kFrechet11;
    config.phi = kGamma11;
    config.n_schedule = {1e2, 1e3, 1e4};
    config.y_grid = y_grid;
    config.tolerance = 1e-3;
    const auto report = max_attraction_report(config);
    CHECK(report.pass);
    CHECK(report.distances[0] > report.distances[1]);
    CHECK(report.distances[1] > report.distances[2]);
    CHECK(report.final_distance() <= 1e-3);
  }
  SUBCASE("subsequence reaches the same limit") {
    MaxAttractionConfig config;
    config.base = kFrechet11;
    config.norming_exponent = {1.0, 1.0};
    config.target = kFrechet11;
    config.phi = kGamma11;
    for (int m = 1; m <= 9; ++m)
      config.n_schedule.push_back(std::pow(3.0, m));
    config.y_grid = y_grid;
    config.tolerance = 1e-3;
    const auto report = max_attraction_report(config);
    CHECK(report.pass);
  }
}
