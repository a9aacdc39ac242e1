#ifndef PHILAB_STATS_HPP_
#define PHILAB_STATS_HPP_

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "philab/report.hpp"

namespace philab {

/// (1/n) sum exp(i t x_j).  Hermitian in t by construction.
std::complex<double> empirical_cf(std::span<const double> sample, double t);

/// (1/n) sum exp(-s x_j); the empirical Laplace transform used for
/// positive-summand experiments.
double empirical_lt(std::span<const double> sample, double s);

/// One-sample Kolmogorov-Smirnov distance against a monotone cdf evaluator.
double ks_distance(std::span<const double> sample,
                   const std::function<double(double)>& cdf);

/// max over the grid of |f - g|.
double sup_grid_distance(const std::function<double(double)>& f,
                         const std::function<double(double)>& g,
                         std::span<const double> grid);
double sup_grid_distance(
    const std::function<std::complex<double>(double)>& f,
    const std::function<std::complex<double>(double)>& g,
    std::span<const double> grid);

/// Pass iff each entry is at most the previous times (1 + slack) and the
/// last entry does not exceed the first.
bool trend_check(std::span<const double> distances, double slack = 0.05);

/// n equispaced points from a to b inclusive.
std::vector<double> linspace(double a, double b, std::size_t n);

/// n log-spaced points from a to b inclusive (a, b > 0).
std::vector<double> logspace(double a, double b, std::size_t n);

}  // namespace philab

#endif  // PHILAB_STATS_HPP_
