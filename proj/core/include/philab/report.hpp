#ifndef PHILAB_REPORT_HPP_
#define PHILAB_REPORT_HPP_

#include <cmath>
#include <limits>
#include <vector>

namespace philab {

/// Per-schedule-entry distances with a trend verdict.  `schedule` holds the
/// theta (or n) values in run order; `residuals` is parallel to `distances`
/// when the experiment tracks a NaS residual, empty otherwise.
struct ConvergenceReport {
  std::vector<double> schedule;
  std::vector<double> distances;
  std::vector<double> residuals;
  double tolerance = 0.0;
  double slack = 0.05;
  bool trend_only = false;
  bool trend_ok = false;
  bool final_ok = false;
  bool pass = false;

  double final_distance() const {
    return distances.empty() ? std::numeric_limits<double>::quiet_NaN()
                             : distances.back();
  }

  /// Computes the verdict from the recorded distances.
  void finalize();
};

}  // namespace philab

#endif  // PHILAB_REPORT_HPP_
