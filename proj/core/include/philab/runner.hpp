#ifndef PHILAB_RUNNER_HPP_
#define PHILAB_RUNNER_HPP_

#include <string>
#include <vector>

#include "philab/config.hpp"
#include "philab/report.hpp"

namespace philab {

/// One CSV row.  `residual` is NaN when the experiment tracks none (emitted
/// as an empty field).
struct ReportRow {
  std::string experiment;
  double schedule_value = 0.0;
  double distance = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ExperimentResult {
  ConvergenceReport report;
  std::vector<ReportRow> rows;
  bool pass = false;
};

/// The supported experiment kinds, in `list-experiments` order.
const std::vector<std::string>& experiment_kinds();

/// Dispatches a validated config section to the matching library operation.
/// Throws config_error for invalid configs and numeric_error (or
/// heavy_tail_error) for numeric failures.
ExperimentResult run_experiment(const ConfigSection& section);

/// CSV with header experiment,schedule_value,distance,residual,tolerance,pass
/// and 9-significant-digit floats; row order follows the schedule.
std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_csv(const std::string& text);

/// Writes the CSV to `path`; throws io_error when unwritable.
void write_csv_file(const std::string& path,
                    const std::vector<ReportRow>& rows);

}  // namespace philab

#endif  // PHILAB_RUNNER_HPP_
