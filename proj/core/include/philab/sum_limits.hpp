#ifndef PHILAB_SUM_LIMITS_HPP_
#define PHILAB_SUM_LIMITS_HPP_

#include <span>
#include <vector>

#include "philab/pgf.hpp"
#include "philab/random.hpp"
#include "philab/report.hpp"
#include "philab/transforms.hpp"

namespace philab {

/// i.i.d. summand family indexed by theta.
///   ExponentialScaled:        CF 1/(1 - i theta t),  sampler theta Exp(1)
///   CauchyScaled:             CF exp(-theta |t|),    sampler theta Cauchy
///   PositiveStableScaled(a):  LT exp(-theta s^a),    sampler theta^(1/a) S_a
///   BrokenExponential:        CF 1/(1 - i sqrt(theta) t) -- deliberately
///                             wrong scaling, the NaS-converse fixture
struct SummandFamily {
  enum class Kind {
    ExponentialScaled,
    CauchyScaled,
    PositiveStableScaled,
    BrokenExponential
  };

  Kind kind = Kind::ExponentialScaled;
  double index = 0.5;  // PositiveStableScaled

  /// Positive families are verified through Laplace transforms instead of
  /// characteristic functions.
  bool positive() const { return kind == Kind::PositiveStableScaled; }
};

/// h_theta(t); for the positive family this is the LT at real argument t >= 0.
Complex summand_transform(const SummandFamily& family, double theta, double t);

double sample_summand(const SummandFamily& family, double theta,
                      RandomStream& rng);

/// reps i.i.d. realizations of X_1 + ... + X_N with N drawn from `count`
/// (whose theta is also the summand theta).  The empty sum is 0.
std::vector<double> simulate_n_sum(const SummandFamily& summand,
                                   const PgfSpec& count, std::size_t reps,
                                   std::uint64_t seed,
                                   std::uint64_t stream_base = 0,
                                   TailPolicy tail = TailPolicy::Strict);

/// sup over the grid of |(1 - h_theta(t))/theta - psi(t)|.
double nas_sum_residual(const SummandFamily& family, const PsiSpec& psi,
                        double theta, std::span<const double> t_grid);

struct SumLimitConfig {
  SummandFamily summand;
  PgfSpec count;  // theta replaced by each schedule entry
  PsiSpec psi;
  LtSpec phi;
  std::vector<double> schedule;
  std::vector<double> t_grid;
  std::size_t reps = 100000;
  double tolerance = 0.02;
  std::uint64_t seed = 1;
  TailPolicy tail = TailPolicy::Strict;
};

/// Monte Carlo transfer-theorem check: per theta the sup-grid distance of
/// the empirical CF (or LT) of the simulated N-sums to phi(k psi), with the
/// NaS residual recorded alongside.
ConvergenceReport sum_limit_report(const SumLimitConfig& config);

/// Attraction scheme h_n(t) = h(t / a_n) with a_n = n^norming_exponent and
/// no centering; `n_schedule` may be a full sequence or any increasing
/// subsequence (partial attraction).
struct AttractionScheme {
  enum class Base { Cauchy, Exponential };
  Base base = Base::Cauchy;
  double norming_exponent = 1.0;
  std::vector<double> n_schedule;
};

Complex attraction_base_cf(AttractionScheme::Base base, double t);

/// Analytic domain-of-attraction check: per n the sup-grid distance of
/// P_{1/n}(h_n(t)) to phi(k psi(t)).  No simulation.
ConvergenceReport sum_attraction_report(const AttractionScheme& scheme,
                                        const LtSpec& phi, const PsiSpec& psi,
                                        unsigned j, unsigned k,
                                        std::span<const double> t_grid,
                                        double tolerance);

}  // namespace philab

#endif  // PHILAB_SUM_LIMITS_HPP_
