#include "philab/pgf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "philab/errors.hpp"

namespace philab {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMassFloor = -1e-12;
constexpr double kImagTol = 1e-8;

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

void check_spec(const PgfSpec& spec) {
  if (spec.k < 1) throw std::domain_error("PgfSpec: k must be >= 1");
  if (!(spec.theta > 0.0)) throw std::domain_error("PgfSpec: theta must be > 0");
}

}  // namespace

namespace detail {

void fft_inplace(std::vector<Complex>& data) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_inplace: size must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex u = data[i + j];
        const Complex v = data[i + j + len / 2] * w;
        data[i + j] = u + v;
        data[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace detail

double pgf_eval(const PgfSpec& spec, double s) {
  check_spec(spec);
  if (s < 0.0 || s > 1.0) throw std::domain_error("pgf_eval: s must be in [0,1]");
  const double sj = (spec.j == 0) ? 1.0 : std::pow(s, static_cast<double>(spec.j));
  const double sk = std::pow(s, static_cast<double>(spec.k));
  return sj * lt_eval(spec.phi, (1.0 - sk) / spec.theta);
}

Complex pgf_eval(const PgfSpec& spec, Complex s) {
  check_spec(spec);
  Complex sj(1.0, 0.0);
  Complex sk(1.0, 0.0);
  for (unsigned i = 0; i < spec.j; ++i) sj *= s;
  for (unsigned i = 0; i < spec.k; ++i) sk *= s;
  return sj * lt_eval(spec.phi, (1.0 - sk) / spec.theta);
}

PmfTable pgf_pmf(const PgfSpec& spec, std::size_t n_max) {
  check_spec(spec);
  if (n_max < 1) throw std::domain_error("pgf_pmf: n_max must be >= 1");
  const std::size_t m = next_pow2(4 * (n_max + 1));

  std::vector<Complex> samples(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double ang = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(m);
    samples[i] = pgf_eval(spec, Complex(std::cos(ang), std::sin(ang)));
  }
  // Cauchy coefficient formula: p_n = (1/M) sum P(w^i) w^{-in}, which is the
  // forward DFT of the samples divided by M.
  detail::fft_inplace(samples);

  PmfTable table;
  table.masses.resize(n_max + 1);
  double imag_worst = 0.0;
  for (std::size_t n = 0; n < m; ++n) {
    const Complex c = samples[n] / static_cast<double>(m);
    imag_worst = std::max(imag_worst, std::abs(c.imag()));
    double mass = c.real();
    if (mass < kMassFloor)
      throw numeric_error("pgf_pmf: extracted mass below the -1e-12 floor");
    mass = std::max(mass, 0.0);
    if (n <= n_max)
      table.masses[n] = mass;
    else
      table.truncation_mass += mass;
  }
  if (imag_worst > kImagTol)
    throw numeric_error("pgf_pmf: extraction residual above 1e-8");
  return table;
}

CountSampler::CountSampler(const PgfSpec& spec) : spec_(spec), n_max_(64) {
  check_spec(spec);
  extend();
}

void CountSampler::extend() {
  if (n_max_ > kMaxSupport)
    throw heavy_tail_error("sample_count: support cap 2^22 exceeded");
  const PmfTable table = pgf_pmf(spec_, n_max_);
  cdf_.resize(table.masses.size());
  double acc = 0.0;
  for (std::size_t n = 0; n < table.masses.size(); ++n) {
    acc += table.masses[n];
    cdf_[n] = acc;
  }
}

void CountSampler::ensure_coverage(double target, TailPolicy policy) {
  while (coverage() < target) {
    if (n_max_ * 2 > kMaxSupport) {
      if (policy == TailPolicy::Clamp) return;
      throw heavy_tail_error(
          "sample_count: coverage target unreachable below the 2^22 cap");
    }
    n_max_ *= 2;
    extend();
  }
}

std::size_t CountSampler::sample(RandomStream& rng) {
  const double u = uniform01(rng);
  while (coverage() < kCoverageTarget && u > coverage()) {
    if (n_max_ * 2 > kMaxSupport)
      throw heavy_tail_error(
          "sample_count: support cap 2^22 exceeded before coverage");
    n_max_ *= 2;
    extend();
  }
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) return cdf_.size() - 1;
  return static_cast<std::size_t>(it - cdf_.begin());
}

std::size_t CountSampler::sample_covered(RandomStream& rng) const {
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) return cdf_.size() - 1;
  return static_cast<std::size_t>(it - cdf_.begin());
}

std::size_t sample_count(const PgfSpec& spec, RandomStream& rng) {
  CountSampler sampler(spec);
  return sampler.sample(rng);
}

double scaled_count_lt(const PgfSpec& spec, double v) {
  check_spec(spec);
  if (v < 0.0) throw std::domain_error("scaled_count_lt: v must be >= 0");
  const double jt = std::exp(-v * static_cast<double>(spec.j) * spec.theta);
  const double arg =
      (1.0 - std::exp(-v * static_cast<double>(spec.k) * spec.theta)) /
      spec.theta;
  return jt * lt_eval(spec.phi, arg);
}

double count_mean(const PgfSpec& spec) {
  return static_cast<double>(spec.j) +
         static_cast<double>(spec.k) * lt_mean(spec.phi) / spec.theta;
}

ConvergenceReport lemma22_report(const PgfSpec& base,
                                 std::span<const double> theta_schedule,
                                 std::span<const double> v_grid,
                                 double tolerance, bool trend_only) {
  ConvergenceReport report;
  report.tolerance = tolerance;
  report.trend_only = trend_only;
  const double k = static_cast<double>(base.k);
  for (double theta : theta_schedule) {
    PgfSpec spec = base;
    spec.theta = theta;
    double worst = 0.0;
    for (double v : v_grid)
      worst = std::max(worst,
                       std::abs(scaled_count_lt(spec, v) -
                                lt_eval(base.phi, k * v)));
    report.schedule.push_back(theta);
    report.distances.push_back(worst);
  }
  report.finalize();
  return report;
}

double semigroup_residual(const PgfSpec& spec, std::span<const double> z_grid) {
  check_spec(spec);
  double worst = 0.0;
  for (double z : z_grid) {
    if (!(z > 0.0) || !(z < 1.0))
      throw std::domain_error("semigroup_residual: grid must lie in (0,1)");
    const double lhs = pgf_eval(spec, z);
    const double rhs = lt_eval(spec.phi, lt_inverse(spec.phi, z) / spec.theta);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace philab
