#ifndef PHILAB_PGF_HPP_
#define PHILAB_PGF_HPP_

#include <span>
#include <vector>

#include "philab/report.hpp"
#include "philab/transforms.hpp"

namespace philab {

/// A member of the PGF class P(s) = s^j phi((1 - s^k)/theta).
struct PgfSpec {
  unsigned j = 0;
  unsigned k = 1;
  double theta = 1.0;
  LtSpec phi;
};

/// P(s) for s in [0,1].
double pgf_eval(const PgfSpec& spec, double s);

/// P(s) on the closed unit disc (used for CF composition and for coefficient
/// extraction on the unit circle).
Complex pgf_eval(const PgfSpec& spec, Complex s);

/// Probability masses p_0..p_{n_max}; truncation_mass is the extracted mass
/// beyond n_max (the table plus the truncation accounts for all of P(1) = 1).
struct PmfTable {
  std::vector<double> masses;
  double truncation_mass = 0.0;
};

/// Coefficient extraction by sampling P on the unit circle at a power of two
/// M >= 4 (n_max + 1) points and inverse FFT.  Throws numeric_error when the
/// maximal imaginary part exceeds 1e-8 or a mass falls below the -1e-12
/// floor; masses in [-1e-12, 0) are clipped to zero.
PmfTable pgf_pmf(const PgfSpec& spec, std::size_t n_max);

/// What to do when the enumeration cap is reached before the coverage
/// target: Strict raises heavy_tail_error (the documented behaviour for
/// infinite-mean counts), Clamp accepts the partial table and maps tail
/// draws to the largest enumerated value.
enum class TailPolicy { Strict, Clamp };

/// Inversion sampler for the count N with PGF `spec`.  The cumulative table
/// extends by doubling; after ensure_coverage the sampler is read-only and
/// safe to share across threads.
class CountSampler {
 public:
  static constexpr std::size_t kMaxSupport = std::size_t{1} << 22;
  static constexpr double kCoverageTarget = 1.0 - 1e-9;

  explicit CountSampler(const PgfSpec& spec);

  /// Extends the table until coverage() >= target or the cap is reached.
  void ensure_coverage(double target = kCoverageTarget,
                       TailPolicy policy = TailPolicy::Strict);

  /// Single draw; extends the table lazily if the uniform is not yet
  /// covered (Strict tail policy).
  std::size_t sample(RandomStream& rng);

  /// Draw against the frozen table; requires a prior ensure_coverage call.
  /// Tail draws beyond the covered mass clamp to the largest index.
  std::size_t sample_covered(RandomStream& rng) const;

  double coverage() const { return cdf_.empty() ? 0.0 : cdf_.back(); }
  std::size_t support_size() const { return cdf_.size(); }
  const PgfSpec& spec() const { return spec_; }

 private:
  void extend();

  PgfSpec spec_;
  std::vector<double> cdf_;
  std::size_t n_max_;
};

/// One-shot draw of N (builds a sampler internally).
std::size_t sample_count(const PgfSpec& spec, RandomStream& rng);

/// Laplace transform of theta * N at v: exp(-v j theta) phi((1 - exp(-v k
/// theta))/theta).
double scaled_count_lt(const PgfSpec& spec, double v);

/// E[N] = j + k E[Z] / theta; +infinity for positive stable phi.
double count_mean(const PgfSpec& spec);

/// Scaling-law check: per theta in the schedule, the sup over v_grid of
/// |scaled_count_lt - phi(k v)|.  `base.theta` is ignored.
ConvergenceReport lemma22_report(const PgfSpec& base,
                                 std::span<const double> theta_schedule,
                                 std::span<const double> v_grid,
                                 double tolerance, bool trend_only = false);

/// Stability residual sup_z |P(z) - phi(phi^{-1}(z)/theta)| over a grid in
/// (0,1).  Zero identifies an N-sum-stable pair.
double semigroup_residual(const PgfSpec& spec, std::span<const double> z_grid);

namespace detail {
/// In-place radix-2 FFT; size must be a power of two.
void fft_inplace(std::vector<Complex>& data);
}  // namespace detail

}  // namespace philab

#endif  // PHILAB_PGF_HPP_
