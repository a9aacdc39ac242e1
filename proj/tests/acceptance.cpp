// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria with a runtime budget are timed with a wall clock.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "philab/max_limits.hpp"
#include "philab/pgf.hpp"
#include "philab/runner.hpp"
#include "philab/stats.hpp"
#include "philab/sum_limits.hpp"
#include "philab/transforms.hpp"

using namespace philab;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok) {
  std::printf("[%s] %2d %s\n", ok ? "pass" : "FAIL", number, label.c_str());
  if (!ok) ++failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

const LtSpec kGamma11 = LtSpec::gamma(1.0, 1.0);
const ExponentMeasureSpec kFrechet11 =
    ExponentMeasureSpec::indep_frechet(1.0, 1.0);

// 1. PGF validity over the parameter lattice.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const LtSpec& phi : {kGamma11, LtSpec::positive_stable(0.5)})
    for (unsigned j : {0u, 1u, 2u})
      for (unsigned k : {1u, 2u, 3u})
        for (double theta : {0.1, 0.5, 1.0, 2.0}) {
          const PmfTable table = pgf_pmf(PgfSpec{j, k, theta, phi}, 128);
          double total = table.truncation_mass;
          for (double mass : table.masses) {
            ok = ok && mass >= -1e-12;
            total += mass;
          }
          ok = ok && std::abs(total - 1.0) <= 1e-8;
        }
  ok = ok && seconds_since(start) < 5.0;
  report(1, "pmf validity over the 2x3x4x2 parameter lattice", ok);
}

// 2. Harris closed form vs pgf_eval.
void criterion2() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (unsigned k : {1u, 2u, 3u})
    for (double theta : {0.25, 1.0, 4.0}) {
      const PgfSpec spec{1, k, theta, LtSpec::gamma(1.0 / k, 1.0)};
      const double a = (theta + 1.0) / theta;
      for (double s : linspace(0.1, 0.9, 9)) {
        const double harris =
            s / std::pow(a - (a - 1.0) * std::pow(s, static_cast<double>(k)),
                         1.0 / k);
        ok = ok && std::abs(pgf_eval(spec, s) - harris) <= 1e-12;
      }
    }
  ok = ok && seconds_since(start) < 1.0;
  report(2, "Harris identity across k and theta", ok);
}

// 3. Scaled-count LT limit along the theta schedule.
void criterion3() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> schedule = {1e-1, 1e-2, 1e-3, 1e-4};
  const std::vector<double> v_grid = linspace(0.0, 10.0, 101);
  const auto gamma_report = lemma22_report(PgfSpec{0, 1, 1.0, kGamma11},
                                           schedule, v_grid, 1e-3);
  bool ok = gamma_report.pass && gamma_report.final_distance() <= 1e-3;
  const auto stable_report =
      lemma22_report(PgfSpec{0, 1, 1.0, LtSpec::positive_stable(0.5)},
                     schedule, v_grid, 0.0, /*trend_only=*/true);
  ok = ok && stable_report.pass && stable_report.trend_ok;
  ok = ok && seconds_since(start) < 2.0;
  report(3, "scaled count law converges to the mixing law", ok);
}

// 4. Geometric-exponential N-sums reach Exp(1) in KS distance.
void criterion4() {
  const auto start = std::chrono::steady_clock::now();
  const SummandFamily summand{SummandFamily::Kind::ExponentialScaled};
  const PgfSpec count{0, 1, 1e-3, kGamma11};
  const auto sample = simulate_n_sum(summand, count, 100000, 2024);
  const auto cdf = [](double x) {
    return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x);
  };
  bool ok = ks_distance(sample, cdf) <= 0.02;
  ok = ok && seconds_since(start) < 10.0;
  report(4, "geometric-exponential sums match Exp(1)", ok);
}

// 5. Cauchy summands reach the Linnik CF on the grid.
void criterion5() {
  const SummandFamily summand{SummandFamily::Kind::CauchyScaled};
  const PgfSpec count{0, 1, 1e-3, kGamma11};
  const auto sample = simulate_n_sum(summand, count, 100000, 2025);
  double distance = 0.0;
  for (double t : linspace(-5.0, 5.0, 101))
    distance = std::max(distance,
                        std::abs(empirical_cf(sample, t) -
                                 Complex(1.0 / (1.0 + std::abs(t)), 0.0)));
  report(5, "geometric-cauchy sums match the Linnik law", distance <= 0.02);
}

// 6. Broken scaling fails; the expected-fail reading passes.
void criterion6() {
  SumLimitConfig config;
  config.summand = {SummandFamily::Kind::BrokenExponential};
  config.count = PgfSpec{0, 1, 1.0, kGamma11};
  config.psi = PsiSpec::drift(1.0);
  config.phi = kGamma11;
  config.schedule = {1e-1, 1e-2, 1e-3};
  config.t_grid = linspace(-5.0, 5.0, 101);
  config.reps = 20000;
  config.tolerance = 0.03;
  config.seed = 2026;
  const auto report_ = sum_limit_report(config);
  report(6, "broken scaling fixture fails as required", !report_.pass);
}

// 7. Residual halving law across the smooth families.
void criterion7() {
  const std::vector<double> grid = linspace(-5.0, 5.0, 101);
  bool ok = true;
  for (const SummandFamily family :
       {SummandFamily{SummandFamily::Kind::ExponentialScaled},
        SummandFamily{SummandFamily::Kind::CauchyScaled}}) {
    const PsiSpec psi = family.kind == SummandFamily::Kind::CauchyScaled
                            ? PsiSpec::symmetric_stable(1.0)
                            : PsiSpec::drift(1.0);
    for (double theta : {1e-1, 1e-2, 1e-3}) {
      const double full = nas_sum_residual(family, psi, theta, grid);
      const double half = nas_sum_residual(family, psi, theta / 2.0, grid);
      ok = ok && half <= 0.6 * full;
    }
  }
  report(7, "residual halving law for smooth summands", ok);
}

// 8. Analytic attraction: full schedule and subsequence agree.
void criterion8() {
  const std::vector<double> grid = linspace(-5.0, 5.0, 101);
  const PsiSpec psi = PsiSpec::symmetric_stable(1.0);
  AttractionScheme full;
  full.base = AttractionScheme::Base::Cauchy;
  full.norming_exponent = 1.0;
  full.n_schedule = {1e2, 1e3, 1e4};
  const auto rf = sum_attraction_report(full, kGamma11, psi, 0, 1, grid, 1e-3);
  bool ok = rf.pass && rf.final_distance() <= 1e-3;

  AttractionScheme sub = full;
  sub.n_schedule = {1e1, 1e2, 1e4};  // subsequence sharing the endpoint
  const auto rs = sum_attraction_report(sub, kGamma11, psi, 0, 1, grid, 1e-3);
  ok = ok && std::abs(rs.final_distance() - rf.final_distance()) <= 1e-9;
  report(8, "cauchy-to-Linnik attraction, full and partial", ok);
}

// 9. Subordination identity and the recovery roundtrip on the grid.
void criterion9() {
  const std::vector<double> axis = logspace(0.25, 4.0, 7);
  bool ok = true;
  RandomStream rng = make_stream(2027, 0);
  for (double y1 : axis)
    for (double y2 : axis) {
      const double f = phi_mid_df_eval(kGamma11, kFrechet11, y1, y2);
      const auto est = subordinated_cdf(kGamma11, kFrechet11, y1, y2, 100000,
                                        rng);
      ok = ok && std::abs(est.value - f) <= 3.0 * est.std_error + 1e-9;
      const double g = mid_df_eval(kFrechet11, y1, y2);
      ok = ok && std::abs(recover_mid_from_phi_mid(kGamma11, f) - g) <= 1e-10;
    }
  report(9, "subordination identity and recovery roundtrip", ok);
}

// 10. Random-maxima transfer and the frozen residual scalar.
void criterion10() {
  MaxLimitConfig config;
  config.mu = kFrechet11;
  config.count = PgfSpec{0, 1, 1.0, kGamma11};
  config.phi = kGamma11;
  config.schedule = {1e-1, 1e-2};
  config.y_grid = log_grid2(0.25, 4.0, 7);
  config.reps = 100000;
  config.tolerance = 0.02;
  config.seed = 2028;
  const auto report_ = max_limit_report(config);
  bool ok = report_.pass && report_.final_distance() <= 0.02;
  const std::vector<Point2> point = {{1.0, 1.0}};
  ok = ok &&
       std::abs(nas_max_residual(kFrechet11, 0.01, point) - 0.0198673) <= 1e-7;
  report(10, "geometric-Frechet maxima and the max residual", ok);
}

// 11. Supermodularity structure of MID laws.
void criterion11() {
  const std::vector<double> lattice = logspace(0.1, 10.0, 20);
  const auto frechet_df = [](double a, double b) {
    return mid_df_eval(kFrechet11, a, b);
  };
  const auto frechet = mid_supermodularity_check(frechet_df, lattice, lattice);
  bool ok = frechet.pass && std::abs(frechet.worst_delta) <= 1e-12;

  const ExponentMeasureSpec logistic = ExponentMeasureSpec::logistic(1.0, 0.5);
  const auto logistic_df = [&](double a, double b) {
    return mid_df_eval(logistic, a, b);
  };
  ok = ok && mid_supermodularity_check(logistic_df, lattice, lattice).pass;

  const auto g1 = [](double y) { return std::exp(-1.0 / y); };
  const auto corrupted_df = [&](double a, double b) {
    const double g = mid_df_eval(kFrechet11, a, b);
    return g * (1.0 - 0.5 * (1.0 - g1(a)) * (1.0 - g1(b)));
  };
  const auto bad = mid_supermodularity_check(corrupted_df, lattice, lattice);
  ok = ok && !bad.pass && bad.lower[0] < bad.upper[0] &&
       bad.lower[1] < bad.upper[1];
  report(11, "supermodularity verdicts for clean and corrupted laws", ok);
}

// 12. Determinism: identical runs emit byte-identical CSV.
void criterion12() {
  ConfigSection section;
  section.name = "det";
  section.values = {{"kind", "sum-limit"},   {"summand", "exponential"},
                    {"psi", "drift"},        {"phi", "gamma"},
                    {"theta_schedule", "1e-1,1e-2"},
                    {"reps", "10000"},       {"tolerance", "0.05"},
                    {"seed", "2029"}};
  const std::string first = rows_to_csv(run_experiment(section).rows);
  const std::string second = rows_to_csv(run_experiment(section).rows);
  report(12, "identical seeds emit byte-identical reports",
         !first.empty() && first == second);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::printf("%s (%d criteria failed)\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures);
  return failures == 0 ? 0 : 1;
}
