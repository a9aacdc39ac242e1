#ifndef PHILAB_MAX_LIMITS_HPP_
#define PHILAB_MAX_LIMITS_HPP_

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "philab/pgf.hpp"
#include "philab/random.hpp"
#include "philab/report.hpp"
#include "philab/transforms.hpp"

namespace philab {

using Point2 = std::array<double, 2>;

/// Triangular array member H_theta = G^theta, i.e. H_theta(y) =
/// exp(-theta T(y)) for the exponent measure mu of G.
struct MaxSchemeSpec {
  ExponentMeasureSpec mu;
  double theta = 1.0;
};

double h_theta_eval(const MaxSchemeSpec& scheme, double y1, double y2);

/// One draw from H_theta; only the independent Frechet family has a sampler
/// (componentwise inversion).  Logistic dependence is evaluation-only.
Point2 sample_mid_vector(const MaxSchemeSpec& scheme, RandomStream& rng);

/// Inversion formula on explicit uniforms (deterministic test hook).
Point2 mid_vector_from_uniforms(const MaxSchemeSpec& scheme, double u1,
                                double u2);

/// Bivariate empirical distribution function.  The empty maximum (N = 0) is
/// recorded as the bottom of the support rectangle.
class EmpiricalDf2 {
 public:
  explicit EmpiricalDf2(std::vector<Point2> points)
      : points_(std::move(points)) {}

  double eval(double y1, double y2) const;
  const std::vector<Point2>& points() const { return points_; }

 private:
  std::vector<Point2> points_;
};

/// reps realizations of the componentwise maximum over N draws from
/// H_theta, N from `count` (same theta).
EmpiricalDf2 simulate_n_max(const MaxSchemeSpec& scheme, const PgfSpec& count,
                            std::size_t reps, std::uint64_t seed,
                            std::uint64_t stream_base = 0,
                            TailPolicy tail = TailPolicy::Strict);

/// sup over the grid of |(1 - H_theta(y))/theta - T(y)|.
double nas_max_residual(const ExponentMeasureSpec& mu, double theta,
                        std::span<const Point2> y_grid);

struct MaxLimitConfig {
  ExponentMeasureSpec mu;
  PgfSpec count;  // theta replaced by each schedule entry
  LtSpec phi;
  std::vector<double> schedule;
  std::vector<Point2> y_grid;
  std::size_t reps = 100000;
  double tolerance = 0.02;
  std::uint64_t seed = 1;
  TailPolicy tail = TailPolicy::Strict;
};

/// Monte Carlo transfer check for maxima: per theta the sup-grid distance
/// of the empirical d.f to phi(k T), NaS residual recorded alongside.
ConvergenceReport max_limit_report(const MaxLimitConfig& config);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo estimate of P{Y(Z) <= y} = E[exp(-Z T(y))] over subordinator
/// draws of Z.
McEstimate subordinated_cdf(const LtSpec& phi, const ExponentMeasureSpec& mu,
                            double y1, double y2, std::size_t draws,
                            RandomStream& rng);

/// Same estimate over caller-supplied draws of Z (deterministic hook; a
/// unit mass at 1 reproduces G exactly).
McEstimate subordinated_cdf_from_draws(std::span<const double> z_draws,
                                       const ExponentMeasureSpec& mu,
                                       double y1, double y2);

struct MidCheckResult {
  bool pass = true;
  double worst_delta = 0.0;
  Point2 lower{0.0, 0.0};
  Point2 upper{0.0, 0.0};
};

/// d = 2 max-infinite-divisibility criterion on a finite lattice: with
/// T = -log(df), every rectangle a <= b must satisfy
/// T(a1,a2) + T(b1,b2) <= T(a1,b2) + T(b1,a2) + slack.
/// Returns the worst rectangle either way.
MidCheckResult mid_supermodularity_check(
    const std::function<double(double, double)>& df,
    std::span<const double> xs, std::span<const double> ys,
    double slack = 1e-9);

struct MaxAttractionConfig {
  ExponentMeasureSpec base;     // H = exp(-T_base)
  Point2 norming_exponent{1.0, 1.0};  // a_{i,n} = n^e_i
  ExponentMeasureSpec target;
  LtSpec phi;
  unsigned j = 0;
  unsigned k = 1;
  std::vector<double> n_schedule;
  std::vector<Point2> y_grid;
  double tolerance = 1e-3;
};

/// Analytic max-attraction check: per n the sup-grid distance of
/// P_{1/n}(H(a_n y)) to phi(k T_target(y)).
ConvergenceReport max_attraction_report(const MaxAttractionConfig& config);

/// n-by-n log-spaced grid on [lo, hi]^2.
std::vector<Point2> log_grid2(double lo, double hi, std::size_t n);

}  // namespace philab

#endif  // PHILAB_MAX_LIMITS_HPP_
