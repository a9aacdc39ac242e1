#include "philab/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "philab/errors.hpp"
#include "philab/max_limits.hpp"
#include "philab/pgf.hpp"
#include "philab/stats.hpp"
#include "philab/sum_limits.hpp"
#include "philab/transforms.hpp"

namespace philab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

LtSpec parse_phi(const ConfigSection& s, const std::string& prefix = "phi") {
  const std::string family = s.get(prefix);
  if (family == "gamma")
    return LtSpec::gamma(s.get_double_or(prefix + ".shape", 1.0),
                         s.get_double_or(prefix + ".rate", 1.0));
  if (family == "positive-stable")
    return LtSpec::positive_stable(s.get_double_or(prefix + ".index", 0.5));
  throw config_error("[" + s.name + "] unknown LT family: " + family);
}

PsiSpec parse_psi(const ConfigSection& s) {
  const std::string family = s.get("psi");
  if (family == "drift") return PsiSpec::drift(s.get_double_or("psi.drift", 1.0));
  if (family == "symmetric-stable")
    return PsiSpec::symmetric_stable(s.get_double_or("psi.index", 1.0));
  if (family == "exp-exponent")
    return PsiSpec::exp_exponent(s.get_double_or("psi.rate", 1.0));
  throw config_error("[" + s.name + "] unknown psi family: " + family);
}

ExponentMeasureSpec parse_mu(const ConfigSection& s,
                             const std::string& prefix = "mu") {
  const std::string family = s.get(prefix);
  if (family == "indep-frechet")
    return ExponentMeasureSpec::indep_frechet(
        s.get_double_or(prefix + ".alpha1", 1.0),
        s.get_double_or(prefix + ".alpha2", 1.0));
  if (family == "logistic")
    return ExponentMeasureSpec::logistic(s.get_double_or(prefix + ".alpha", 1.0),
                                         s.get_double_or(prefix + ".r", 1.0));
  throw config_error("[" + s.name + "] unknown exponent measure family: " +
                     family);
}

SummandFamily parse_summand(const ConfigSection& s) {
  const std::string family = s.get("summand");
  SummandFamily out;
  if (family == "exponential") {
    out.kind = SummandFamily::Kind::ExponentialScaled;
  } else if (family == "cauchy") {
    out.kind = SummandFamily::Kind::CauchyScaled;
  } else if (family == "positive-stable") {
    out.kind = SummandFamily::Kind::PositiveStableScaled;
    out.index = s.get_double_or("summand.index", 0.5);
  } else if (family == "broken") {
    out.kind = SummandFamily::Kind::BrokenExponential;
  } else {
    throw config_error("[" + s.name + "] unknown summand family: " + family);
  }
  return out;
}

TailPolicy parse_tail(const ConfigSection& s) {
  const std::string raw = s.get_or("tail", "strict");
  if (raw == "strict") return TailPolicy::Strict;
  if (raw == "clamp") return TailPolicy::Clamp;
  throw config_error("[" + s.name + "] unknown tail policy: " + raw);
}

unsigned parse_count_j(const ConfigSection& s) {
  const long j = s.get_int_or("j", 0);
  if (j < 0) throw config_error("[" + s.name + "] j must be >= 0");
  return static_cast<unsigned>(j);
}

unsigned parse_count_k(const ConfigSection& s) {
  const long k = s.get_int_or("k", 1);
  if (k < 1) throw config_error("[" + s.name + "] k must be >= 1");
  return static_cast<unsigned>(k);
}

std::size_t parse_reps(const ConfigSection& s, const char* key,
                       long fallback) {
  const long reps = s.get_int_or(key, fallback);
  if (reps < 1) throw config_error("[" + s.name + "] reps must be >= 1");
  return static_cast<std::size_t>(reps);
}

std::uint64_t parse_seed(const ConfigSection& s) {
  return static_cast<std::uint64_t>(s.get_int_or("seed", 1));
}

std::vector<double> cf_grid(const ConfigSection& s) {
  const double t_max = s.get_double_or("t_max", 5.0);
  const long points = s.get_int_or("t_points", 101);
  if (points < 2) throw config_error("[" + s.name + "] t_points must be >= 2");
  return linspace(-t_max, t_max, static_cast<std::size_t>(points));
}

std::vector<double> lt_grid(const ConfigSection& s) {
  const double s_max = s.get_double_or("s_max", 10.0);
  const long points = s.get_int_or("s_points", 101);
  if (points < 2) throw config_error("[" + s.name + "] s_points must be >= 2");
  return linspace(0.0, s_max, static_cast<std::size_t>(points));
}

std::vector<Point2> df_grid(const ConfigSection& s) {
  const double y_min = s.get_double_or("y_min", 0.25);
  const double y_max = s.get_double_or("y_max", 4.0);
  const long points = s.get_int_or("y_points", 7);
  if (points < 2 || !(y_min > 0.0) || !(y_max > y_min))
    throw config_error("[" + s.name + "] bad y grid");
  return log_grid2(y_min, y_max, static_cast<std::size_t>(points));
}

void check_schedule(const ConfigSection& s, const std::vector<double>& sched,
                    bool decreasing) {
  if (sched.size() < 2)
    throw config_error("[" + s.name + "] schedule needs at least two entries");
  for (std::size_t i = 0; i < sched.size(); ++i) {
    if (!(sched[i] > 0.0))
      throw config_error("[" + s.name + "] schedule entries must be positive");
    if (i > 0 && (decreasing ? sched[i] >= sched[i - 1]
                             : sched[i] <= sched[i - 1]))
      throw config_error("[" + s.name + "] schedule must be strictly " +
                         (decreasing ? "decreasing" : "increasing"));
  }
}

std::vector<ReportRow> schedule_rows(const std::string& name,
                                     const ConvergenceReport& report) {
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < report.schedule.size(); ++i) {
    ReportRow row;
    row.experiment = name;
    row.schedule_value = report.schedule[i];
    row.distance = report.distances[i];
    row.residual = report.residuals.empty() ? kNaN : report.residuals[i];
    row.tolerance = report.tolerance;
    row.pass = report.trend_only || report.distances[i] <= report.tolerance;
    rows.push_back(row);
  }
  ReportRow summary;
  summary.experiment = name + "/summary";
  summary.schedule_value = report.schedule.back();
  summary.distance = report.final_distance();
  summary.residual = kNaN;
  summary.tolerance = report.tolerance;
  summary.pass = report.pass;
  rows.push_back(summary);
  return rows;
}

ExperimentResult from_report(const std::string& name,
                             ConvergenceReport report) {
  ExperimentResult result;
  result.rows = schedule_rows(name, report);
  result.pass = report.pass;
  result.report = std::move(report);
  return result;
}

// Single-value experiments get one data row plus the summary row.
ExperimentResult single_value_result(const std::string& name,
                                     double schedule_value, double distance,
                                     double residual, double tolerance,
                                     bool pass) {
  ExperimentResult result;
  result.report.schedule = {schedule_value};
  result.report.distances = {distance};
  result.report.tolerance = tolerance;
  result.report.trend_ok = true;
  result.report.final_ok = pass;
  result.report.pass = pass;
  result.pass = pass;
  ReportRow row{name, schedule_value, distance, residual, tolerance, pass};
  ReportRow summary{name + "/summary", schedule_value, distance, kNaN,
                    tolerance, pass};
  result.rows = {row, summary};
  return result;
}

ExperimentResult run_lemma22(const ConfigSection& s) {
  const LtSpec phi = parse_phi(s);
  PgfSpec base{parse_count_j(s), parse_count_k(s), 1.0, phi};
  const std::vector<double> schedule =
      s.get_list_or("theta_schedule", {1e-1, 1e-2, 1e-3, 1e-4});
  check_schedule(s, schedule, /*decreasing=*/true);
  const double v_max = s.get_double_or("v_max", 10.0);
  const long v_points = s.get_int_or("v_points", 101);
  const bool stable = phi.family == LtSpec::Family::PositiveStable;
  const bool trend_only = s.get_bool_or("trend_only", stable);
  const double tolerance = s.get_double_or("tolerance", 1e-3);
  return from_report(
      s.name,
      lemma22_report(base, schedule,
                     linspace(0.0, v_max, static_cast<std::size_t>(v_points)),
                     tolerance, trend_only));
}

ExperimentResult run_nas_sum(const ConfigSection& s) {
  const SummandFamily summand = parse_summand(s);
  const PsiSpec psi = parse_psi(s);
  const std::vector<double> schedule =
      s.get_list_or("theta_schedule", {1e-1, 1e-2, 1e-3});
  check_schedule(s, schedule, true);
  const std::vector<double> grid =
      summand.positive() ? lt_grid(s) : cf_grid(s);
  const double tolerance = s.get_double_or("tolerance", 0.05);

  ConvergenceReport report;
  report.tolerance = tolerance;
  for (double theta : schedule) {
    report.schedule.push_back(theta);
    report.distances.push_back(nas_sum_residual(summand, psi, theta, grid));
  }
  report.finalize();
  return from_report(s.name, report);
}

ExperimentResult run_sum_limit(const ConfigSection& s) {
  SumLimitConfig config;
  config.summand = parse_summand(s);
  config.phi = parse_phi(s);
  config.psi = parse_psi(s);
  config.count = PgfSpec{parse_count_j(s), parse_count_k(s), 1.0, config.phi};
  config.schedule = s.get_list_or("theta_schedule", {1e-1, 1e-2, 1e-3});
  check_schedule(s, config.schedule, true);
  config.t_grid = config.summand.positive() ? lt_grid(s) : cf_grid(s);
  config.reps = parse_reps(s, "reps", 100000);
  // MC floor: noise of an empirical CF sup over the grid.
  const double mc_floor =
      3.0 * 2.0 / std::sqrt(static_cast<double>(config.reps));
  config.tolerance =
      s.get_double_or("tolerance", std::max(0.02, mc_floor));
  config.seed = parse_seed(s);
  config.tail = parse_tail(s);
  return from_report(s.name, sum_limit_report(config));
}

ExperimentResult run_sum_attraction(const ConfigSection& s) {
  AttractionScheme scheme;
  const std::string base = s.get_or("base", "cauchy");
  if (base == "cauchy")
    scheme.base = AttractionScheme::Base::Cauchy;
  else if (base == "exponential")
    scheme.base = AttractionScheme::Base::Exponential;
  else
    throw config_error("[" + s.name + "] unknown attraction base: " + base);
  scheme.norming_exponent = s.get_double_or("norming_exponent", 1.0);
  scheme.n_schedule = s.get_list_or("n_schedule", {100.0, 1000.0, 10000.0});
  check_schedule(s, scheme.n_schedule, /*decreasing=*/false);
  const LtSpec phi = parse_phi(s);
  const PsiSpec psi = parse_psi(s);
  const double tolerance = s.get_double_or("tolerance", 1e-3);
  return from_report(s.name,
                     sum_attraction_report(scheme, phi, psi, parse_count_j(s),
                                           parse_count_k(s), cf_grid(s),
                                           tolerance));
}

ExperimentResult run_nas_max(const ConfigSection& s) {
  const ExponentMeasureSpec mu = parse_mu(s);
  const std::vector<double> schedule =
      s.get_list_or("theta_schedule", {1e-1, 1e-2, 1e-3});
  check_schedule(s, schedule, true);
  const std::vector<Point2> grid = df_grid(s);
  const double tolerance = s.get_double_or("tolerance", 0.05);

  ConvergenceReport report;
  report.tolerance = tolerance;
  for (double theta : schedule) {
    report.schedule.push_back(theta);
    report.distances.push_back(nas_max_residual(mu, theta, grid));
  }
  report.finalize();
  return from_report(s.name, report);
}

ExperimentResult run_max_limit(const ConfigSection& s) {
  MaxLimitConfig config;
  config.mu = parse_mu(s);
  config.phi = parse_phi(s);
  config.count = PgfSpec{parse_count_j(s), parse_count_k(s), 1.0, config.phi};
  config.schedule = s.get_list_or("theta_schedule", {1e-1, 1e-2});
  check_schedule(s, config.schedule, true);
  config.y_grid = df_grid(s);
  config.reps = parse_reps(s, "reps", 100000);
  const double mc_floor =
      3.0 * 2.0 / std::sqrt(static_cast<double>(config.reps));
  config.tolerance = s.get_double_or("tolerance", std::max(0.02, mc_floor));
  config.seed = parse_seed(s);
  config.tail = parse_tail(s);
  return from_report(s.name, max_limit_report(config));
}

ExperimentResult run_max_attraction(const ConfigSection& s) {
  MaxAttractionConfig config;
  config.target = parse_mu(s);
  config.base = s.has("base") ? parse_mu(s, "base") : config.target;
  config.phi = parse_phi(s);
  config.j = parse_count_j(s);
  config.k = parse_count_k(s);
  config.n_schedule = s.get_list_or("n_schedule", {100.0, 1000.0, 10000.0});
  check_schedule(s, config.n_schedule, false);
  config.y_grid = df_grid(s);
  config.tolerance = s.get_double_or("tolerance", 1e-3);
  // Default norming restores T(a_n y) = T(y)/n for Frechet marginals.
  if (config.base.family == ExponentMeasureSpec::Family::IndepFrechet) {
    config.norming_exponent = {1.0 / config.base.alpha1,
                               1.0 / config.base.alpha2};
  } else {
    config.norming_exponent = {1.0 / config.base.alpha, 1.0 / config.base.alpha};
  }
  if (s.has("norming_exponent")) {
    const double e = s.get_double("norming_exponent");
    config.norming_exponent = {e, e};
  }
  return from_report(s.name, max_attraction_report(config));
}

ExperimentResult run_subordination(const ConfigSection& s) {
  const LtSpec phi = parse_phi(s);
  const ExponentMeasureSpec mu = parse_mu(s);
  const double y1 = s.get_double_or("y1", 1.0);
  const double y2 = s.get_double_or("y2", 1.0);
  const std::size_t draws = parse_reps(s, "draws", 100000);
  RandomStream rng = make_stream(parse_seed(s), 0);
  const McEstimate est = subordinated_cdf(phi, mu, y1, y2, draws, rng);
  const double analytic = phi_mid_df_eval(phi, mu, y1, y2);
  const double distance = std::abs(est.value - analytic);
  const double tolerance =
      s.get_double_or("tolerance", 3.0 * est.std_error);
  return single_value_result(s.name, static_cast<double>(draws), distance,
                             est.std_error, tolerance, distance <= tolerance);
}

ExperimentResult run_mid_check(const ConfigSection& s) {
  const ExponentMeasureSpec mu = parse_mu(s);
  const double lo = s.get_double_or("lattice_min", 0.1);
  const double hi = s.get_double_or("lattice_max", 10.0);
  const long points = s.get_int_or("lattice_points", 20);
  if (points < 2 || !(lo > 0.0) || !(hi > lo))
    throw config_error("[" + s.name + "] bad lattice");
  const std::vector<double> axis =
      logspace(lo, hi, static_cast<std::size_t>(points));
  const bool corrupt = s.get_bool_or("corrupt", false);

  std::function<double(double, double)> df = [&mu](double a, double b) {
    return mid_df_eval(mu, a, b);
  };
  if (corrupt) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    df = [&mu, inf](double a, double b) {
      const double g = mid_df_eval(mu, a, b);
      const double g1 = mid_df_eval(mu, a, inf);
      const double g2 = mid_df_eval(mu, inf, b);
      return g * (1.0 - 0.5 * (1.0 - g1) * (1.0 - g2));
    };
  }
  const double slack = s.get_double_or("slack", 1e-9);
  const MidCheckResult check = mid_supermodularity_check(df, axis, axis, slack);
  return single_value_result(s.name, static_cast<double>(points),
                             check.worst_delta, kNaN, slack, check.pass);
}

ExperimentResult run_semigroup(const ConfigSection& s) {
  const LtSpec phi = parse_phi(s);
  PgfSpec spec{parse_count_j(s), parse_count_k(s),
               s.get_double_or("theta", 0.5), phi};
  const long points = s.get_int_or("z_points", 99);
  if (points < 1) throw config_error("[" + s.name + "] z_points must be >= 1");
  const std::vector<double> grid =
      linspace(0.01, 0.99, static_cast<std::size_t>(points));
  const double residual = semigroup_residual(spec, grid);
  const double tolerance = s.get_double_or("tolerance", 1e-12);
  return single_value_result(s.name, spec.theta, residual, kNaN, tolerance,
                             residual <= tolerance);
}

}  // namespace

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds = {
      "lemma22",  "nas-sum",        "sum-limit", "sum-attraction",
      "nas-max",  "max-limit",      "max-attraction",
      "subordination", "mid-check", "semigroup"};
  return kinds;
}

ExperimentResult run_experiment(const ConfigSection& section) {
  const std::string kind = section.get("kind");
  if (kind == "lemma22") return run_lemma22(section);
  if (kind == "nas-sum") return run_nas_sum(section);
  if (kind == "sum-limit") return run_sum_limit(section);
  if (kind == "sum-attraction") return run_sum_attraction(section);
  if (kind == "nas-max") return run_nas_max(section);
  if (kind == "max-limit") return run_max_limit(section);
  if (kind == "max-attraction") return run_max_attraction(section);
  if (kind == "subordination") return run_subordination(section);
  if (kind == "mid-check") return run_mid_check(section);
  if (kind == "semigroup") return run_semigroup(section);
  throw config_error("[" + section.name + "] unknown experiment kind: " + kind);
}

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = "experiment,schedule_value,distance,residual,tolerance,pass\n";
  for (const ReportRow& row : rows) {
    out += row.experiment;
    out += ',';
    out += format_value(row.schedule_value);
    out += ',';
    out += format_value(row.distance);
    out += ',';
    if (!std::isnan(row.residual)) out += format_value(row.residual);
    out += ',';
    out += format_value(row.tolerance);
    out += ',';
    out += row.pass ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::vector<ReportRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "experiment,schedule_value,distance,residual,tolerance,pass")
    throw io_error("parse_csv: missing or malformed header");
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (ss.eof() && !line.empty() && line.back() == ',') fields.push_back("");
    if (fields.size() != 6) throw io_error("parse_csv: bad row: " + line);
    ReportRow row;
    row.experiment = fields[0];
    row.schedule_value = std::stod(fields[1]);
    row.distance = std::stod(fields[2]);
    row.residual = fields[3].empty() ? kNaN : std::stod(fields[3]);
    row.tolerance = std::stod(fields[4]);
    row.pass = fields[5] == "1";
    rows.push_back(row);
  }
  return rows;
}

void write_csv_file(const std::string& path,
                    const std::vector<ReportRow>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open output file: " + path);
  out << rows_to_csv(rows);
  if (!out) throw io_error("failed writing output file: " + path);
}

}  // namespace philab
