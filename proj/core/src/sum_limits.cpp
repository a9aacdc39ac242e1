#include "philab/sum_limits.hpp"

#include <cmath>
#include <stdexcept>

#include "philab/stats.hpp"

namespace philab {

Complex summand_transform(const SummandFamily& family, double theta, double t) {
  switch (family.kind) {
    case SummandFamily::Kind::ExponentialScaled:
      return 1.0 / Complex(1.0, -theta * t);
    case SummandFamily::Kind::CauchyScaled:
      return Complex(std::exp(-theta * std::abs(t)), 0.0);
    case SummandFamily::Kind::PositiveStableScaled:
      if (t < 0.0)
        throw std::domain_error("positive summand transform needs s >= 0");
      return Complex(std::exp(-theta * std::pow(t, family.index)), 0.0);
    case SummandFamily::Kind::BrokenExponential:
      return 1.0 / Complex(1.0, -std::sqrt(theta) * t);
  }
  throw std::logic_error("unreachable summand family");
}

double sample_summand(const SummandFamily& family, double theta,
                      RandomStream& rng) {
  switch (family.kind) {
    case SummandFamily::Kind::ExponentialScaled:
      return theta * exp_draw(rng);
    case SummandFamily::Kind::CauchyScaled:
      return theta * cauchy_draw(rng);
    case SummandFamily::Kind::PositiveStableScaled: {
      const LtSpec stable = LtSpec::positive_stable(family.index);
      return std::pow(theta, 1.0 / family.index) *
             sample_subordinator(stable, rng);
    }
    case SummandFamily::Kind::BrokenExponential:
      return std::sqrt(theta) * exp_draw(rng);
  }
  throw std::logic_error("unreachable summand family");
}

std::vector<double> simulate_n_sum(const SummandFamily& summand,
                                   const PgfSpec& count, std::size_t reps,
                                   std::uint64_t seed,
                                   std::uint64_t stream_base, TailPolicy tail) {
  if (reps < 1) throw std::domain_error("simulate_n_sum: reps must be >= 1");
  CountSampler counts(count);
  counts.ensure_coverage(CountSampler::kCoverageTarget, tail);

  std::vector<double> out(reps);
  parallel_chunks(reps, seed, stream_base,
                  [&](std::size_t first, std::size_t n, RandomStream& rng) {
                    for (std::size_t i = 0; i < n; ++i) {
                      const std::size_t m = counts.sample_covered(rng);
                      double acc = 0.0;
                      for (std::size_t d = 0; d < m; ++d)
                        acc += sample_summand(summand, count.theta, rng);
                      out[first + i] = acc;
                    }
                  });
  return out;
}

double nas_sum_residual(const SummandFamily& family, const PsiSpec& psi,
                        double theta, std::span<const double> t_grid) {
  double worst = 0.0;
  for (double t : t_grid) {
    const Complex lhs = (1.0 - summand_transform(family, theta, t)) / theta;
    worst = std::max(worst, std::abs(lhs - psi_eval(psi, t)));
  }
  return worst;
}

ConvergenceReport sum_limit_report(const SumLimitConfig& config) {
  ConvergenceReport report;
  report.tolerance = config.tolerance;
  const double k = static_cast<double>(config.count.k);

  for (std::size_t entry = 0; entry < config.schedule.size(); ++entry) {
    const double theta = config.schedule[entry];
    PgfSpec count = config.count;
    count.theta = theta;
    const std::uint64_t stream_base = entry << 20;
    const std::vector<double> sample = simulate_n_sum(
        config.summand, count, config.reps, config.seed, stream_base,
        config.tail);

    double distance = 0.0;
    if (config.summand.positive()) {
      // Laplace route: target phi(k s^alpha) on a nonnegative grid.
      for (double s : config.t_grid) {
        const double target =
            lt_eval(config.phi,
                    k * std::pow(s, config.summand.index));
        distance = std::max(distance,
                            std::abs(empirical_lt(sample, s) - target));
      }
    } else {
      for (double t : config.t_grid) {
        const Complex target =
            lt_eval(config.phi, k * psi_eval(config.psi, t));
        distance =
            std::max(distance, std::abs(empirical_cf(sample, t) - target));
      }
    }
    report.schedule.push_back(theta);
    report.distances.push_back(distance);
    report.residuals.push_back(
        nas_sum_residual(config.summand, config.psi, theta, config.t_grid));
  }
  report.finalize();
  return report;
}

Complex attraction_base_cf(AttractionScheme::Base base, double t) {
  switch (base) {
    case AttractionScheme::Base::Cauchy:
      return Complex(std::exp(-std::abs(t)), 0.0);
    case AttractionScheme::Base::Exponential:
      return 1.0 / Complex(1.0, -t);
  }
  throw std::logic_error("unreachable attraction base");
}

ConvergenceReport sum_attraction_report(const AttractionScheme& scheme,
                                        const LtSpec& phi, const PsiSpec& psi,
                                        unsigned j, unsigned k,
                                        std::span<const double> t_grid,
                                        double tolerance) {
  if (scheme.n_schedule.empty())
    throw std::domain_error("sum_attraction_report: empty schedule");
  ConvergenceReport report;
  report.tolerance = tolerance;
  for (double n : scheme.n_schedule) {
    if (!(n > 0.0))
      throw std::domain_error("sum_attraction_report: n must be positive");
    PgfSpec count{j, k, 1.0 / n, phi};
    const double a_n = std::pow(n, scheme.norming_exponent);
    double distance = 0.0;
    for (double t : t_grid) {
      const Complex composed =
          pgf_eval(count, attraction_base_cf(scheme.base, t / a_n));
      const Complex target =
          lt_eval(phi, static_cast<double>(k) * psi_eval(psi, t));
      distance = std::max(distance, std::abs(composed - target));
    }
    report.schedule.push_back(n);
    report.distances.push_back(distance);
  }
  report.finalize();
  return report;
}

}  // namespace philab
