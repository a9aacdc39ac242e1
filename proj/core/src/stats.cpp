#include "philab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace philab {

std::complex<double> empirical_cf(std::span<const double> sample, double t) {
  if (sample.empty()) throw std::domain_error("empirical_cf: empty sample");
  double re = 0.0, im = 0.0;
  for (double x : sample) {
    re += std::cos(t * x);
    im += std::sin(t * x);
  }
  const double n = static_cast<double>(sample.size());
  return {re / n, im / n};
}

double empirical_lt(std::span<const double> sample, double s) {
  if (sample.empty()) throw std::domain_error("empirical_lt: empty sample");
  double acc = 0.0;
  for (double x : sample) acc += std::exp(-s * x);
  return acc / static_cast<double>(sample.size());
}

double ks_distance(std::span<const double> sample,
                   const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::domain_error("ks_distance: empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double F = cdf(sorted[i]);
    const double hi = (static_cast<double>(i) + 1.0) / n - F;
    const double lo = F - static_cast<double>(i) / n;
    worst = std::max({worst, hi, lo});
  }
  return worst;
}

double sup_grid_distance(const std::function<double(double)>& f,
                         const std::function<double(double)>& g,
                         std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, std::abs(f(x) - g(x)));
  return worst;
}

double sup_grid_distance(const std::function<std::complex<double>(double)>& f,
                         const std::function<std::complex<double>(double)>& g,
                         std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, std::abs(f(x) - g(x)));
  return worst;
}

bool trend_check(std::span<const double> distances, double slack) {
  if (distances.size() < 2)
    throw std::domain_error("trend_check: need at least two entries");
  for (std::size_t i = 1; i < distances.size(); ++i)
    if (distances[i] > distances[i - 1] * (1.0 + slack)) return false;
  return distances.back() <= distances.front();
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(a);
    return out;
  }
  const double step = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(a + step * static_cast<double>(i));
  return out;
}

std::vector<double> logspace(double a, double b, std::size_t n) {
  std::vector<double> out = linspace(std::log(a), std::log(b), n);
  for (double& x : out) x = std::exp(x);
  return out;
}

void ConvergenceReport::finalize() {
  // a single-entry schedule has no trend to judge
  trend_ok = distances.size() < 2 || trend_check(distances, slack);
  final_ok = trend_only || final_distance() <= tolerance;
  pass = trend_ok && final_ok;
}

}  // namespace philab
