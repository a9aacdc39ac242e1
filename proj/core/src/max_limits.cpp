#include "philab/max_limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "philab/errors.hpp"
#include "philab/stats.hpp"

namespace philab {

double h_theta_eval(const MaxSchemeSpec& scheme, double y1, double y2) {
  return std::exp(-scheme.theta * exponent_measure_eval(scheme.mu, y1, y2));
}

Point2 mid_vector_from_uniforms(const MaxSchemeSpec& scheme, double u1,
                                double u2) {
  if (scheme.mu.family != ExponentMeasureSpec::Family::IndepFrechet)
    throw std::domain_error(
        "sample_mid_vector: only the independent Frechet family has a sampler");
  const double e1 = -std::log(u1);
  const double e2 = -std::log(u2);
  return {std::pow(scheme.theta / e1, 1.0 / scheme.mu.alpha1),
          std::pow(scheme.theta / e2, 1.0 / scheme.mu.alpha2)};
}

Point2 sample_mid_vector(const MaxSchemeSpec& scheme, RandomStream& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return mid_vector_from_uniforms(scheme, u1, u2);
}

double EmpiricalDf2::eval(double y1, double y2) const {
  if (points_.empty()) throw std::domain_error("EmpiricalDf2: empty sample");
  std::size_t hits = 0;
  for (const Point2& p : points_)
    if (p[0] <= y1 && p[1] <= y2) ++hits;
  return static_cast<double>(hits) / static_cast<double>(points_.size());
}

EmpiricalDf2 simulate_n_max(const MaxSchemeSpec& scheme, const PgfSpec& count,
                            std::size_t reps, std::uint64_t seed,
                            std::uint64_t stream_base, TailPolicy tail) {
  if (reps < 1) throw std::domain_error("simulate_n_max: reps must be >= 1");
  CountSampler counts(count);
  counts.ensure_coverage(CountSampler::kCoverageTarget, tail);
  const Point2 bottom = scheme.mu.bottom();

  std::vector<Point2> out(reps);
  parallel_chunks(reps, seed, stream_base,
                  [&](std::size_t first, std::size_t n, RandomStream& rng) {
                    for (std::size_t i = 0; i < n; ++i) {
                      const std::size_t m = counts.sample_covered(rng);
                      Point2 best = bottom;
                      for (std::size_t d = 0; d < m; ++d) {
                        const Point2 y = sample_mid_vector(scheme, rng);
                        best[0] = std::max(best[0], y[0]);
                        best[1] = std::max(best[1], y[1]);
                      }
                      out[first + i] = best;
                    }
                  });
  return EmpiricalDf2(std::move(out));
}

double nas_max_residual(const ExponentMeasureSpec& mu, double theta,
                        std::span<const Point2> y_grid) {
  double worst = 0.0;
  for (const Point2& y : y_grid) {
    const double t = exponent_measure_eval(mu, y[0], y[1]);
    const double lhs = (1.0 - std::exp(-theta * t)) / theta;
    worst = std::max(worst, std::abs(lhs - t));
  }
  return worst;
}

ConvergenceReport max_limit_report(const MaxLimitConfig& config) {
  ConvergenceReport report;
  report.tolerance = config.tolerance;
  const double k = static_cast<double>(config.count.k);

  for (std::size_t entry = 0; entry < config.schedule.size(); ++entry) {
    const double theta = config.schedule[entry];
    MaxSchemeSpec scheme{config.mu, theta};
    PgfSpec count = config.count;
    count.theta = theta;
    const EmpiricalDf2 df = simulate_n_max(
        scheme, count, config.reps, config.seed, entry << 20, config.tail);

    double distance = 0.0;
    for (const Point2& y : config.y_grid) {
      const double target =
          lt_eval(config.phi,
                  k * exponent_measure_eval(config.mu, y[0], y[1]));
      distance = std::max(distance, std::abs(df.eval(y[0], y[1]) - target));
    }
    report.schedule.push_back(theta);
    report.distances.push_back(distance);
    report.residuals.push_back(nas_max_residual(config.mu, theta,
                                                config.y_grid));
  }
  report.finalize();
  return report;
}

McEstimate subordinated_cdf_from_draws(std::span<const double> z_draws,
                                       const ExponentMeasureSpec& mu,
                                       double y1, double y2) {
  if (z_draws.empty())
    throw std::domain_error("subordinated_cdf: need at least one draw");
  const double t = exponent_measure_eval(mu, y1, y2);
  double sum = 0.0, sumsq = 0.0;
  for (double z : z_draws) {
    const double v = std::exp(-z * t);
    sum += v;
    sumsq += v * v;
  }
  const double n = static_cast<double>(z_draws.size());
  McEstimate est;
  est.value = sum / n;
  const double var = std::max(0.0, sumsq / n - est.value * est.value);
  est.std_error = std::sqrt(var / n);
  return est;
}

McEstimate subordinated_cdf(const LtSpec& phi, const ExponentMeasureSpec& mu,
                            double y1, double y2, std::size_t draws,
                            RandomStream& rng) {
  std::vector<double> z(draws);
  for (double& zi : z) zi = sample_subordinator(phi, rng);
  return subordinated_cdf_from_draws(z, mu, y1, y2);
}

MidCheckResult mid_supermodularity_check(
    const std::function<double(double, double)>& df,
    std::span<const double> xs, std::span<const double> ys, double slack) {
  // cache T = -log(df) on the lattice
  std::vector<double> t(xs.size() * ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double g = df(xs[i], ys[j]);
      if (!(g > 0.0))
        throw std::domain_error(
            "mid_supermodularity_check: df must be positive on the lattice");
      t[i * ys.size() + j] = -std::log(g);
    }
  auto T = [&](std::size_t i, std::size_t j) { return t[i * ys.size() + j]; };

  MidCheckResult result;
  bool first = true;
  for (std::size_t i1 = 0; i1 + 1 < xs.size(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 < xs.size(); ++i2)
      for (std::size_t j1 = 0; j1 + 1 < ys.size(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < ys.size(); ++j2) {
          const double delta =
              T(i1, j1) + T(i2, j2) - T(i1, j2) - T(i2, j1);
          if (first || delta > result.worst_delta) {
            first = false;
            result.worst_delta = delta;
            result.lower = {xs[i1], ys[j1]};
            result.upper = {xs[i2], ys[j2]};
          }
        }
  result.pass = !first && result.worst_delta <= slack;
  return result;
}

ConvergenceReport max_attraction_report(const MaxAttractionConfig& config) {
  if (config.n_schedule.empty())
    throw std::domain_error("max_attraction_report: empty schedule");
  ConvergenceReport report;
  report.tolerance = config.tolerance;
  const double k = static_cast<double>(config.k);
  for (double n : config.n_schedule) {
    if (!(n > 0.0))
      throw std::domain_error("max_attraction_report: n must be positive");
    PgfSpec count{config.j, config.k, 1.0 / n, config.phi};
    const double a1 = std::pow(n, config.norming_exponent[0]);
    const double a2 = std::pow(n, config.norming_exponent[1]);
    double distance = 0.0;
    for (const Point2& y : config.y_grid) {
      const double h_n =
          std::exp(-exponent_measure_eval(config.base, a1 * y[0], a2 * y[1]));
      const double composed = pgf_eval(count, h_n);
      const double target =
          lt_eval(config.phi,
                  k * exponent_measure_eval(config.target, y[0], y[1]));
      distance = std::max(distance, std::abs(composed - target));
    }
    report.schedule.push_back(n);
    report.distances.push_back(distance);
  }
  report.finalize();
  return report;
}

std::vector<Point2> log_grid2(double lo, double hi, std::size_t n) {
  const std::vector<double> axis = logspace(lo, hi, n);
  std::vector<Point2> grid;
  grid.reserve(n * n);
  for (double x : axis)
    for (double y : axis) grid.push_back({x, y});
  return grid;
}

}  // namespace philab
