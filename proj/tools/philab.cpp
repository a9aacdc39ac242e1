// philab: configuration-driven runner for the random-sample-size limit
// theorem experiments.
//
//   philab run <config> [--set k=v]... [--seed N] [--out report.csv]
//              [--expect-fail]
//   philab list-experiments
//
// Exit codes: 0 pass, 1 check-fail, 2 config error, 3 numeric failure,
// 4 io error.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "philab/config.hpp"
#include "philab/errors.hpp"
#include "philab/runner.hpp"

namespace {

int run_command(const std::string& config_path,
                const std::vector<std::string>& overrides, long long seed,
                bool has_seed, const std::string& out_path, bool expect_fail) {
  std::vector<philab::ConfigSection> sections =
      philab::parse_config_file(config_path);
  for (const std::string& assignment : overrides)
    philab::apply_override(sections, assignment);
  if (has_seed)
    philab::apply_override(sections, "seed=" + std::to_string(seed));

  std::vector<philab::ReportRow> rows;
  bool all_pass = true;
  for (const philab::ConfigSection& section : sections) {
    const philab::ExperimentResult result = philab::run_experiment(section);
    rows.insert(rows.end(), result.rows.begin(), result.rows.end());
    all_pass = all_pass && result.pass;
    std::printf("%-30s %s  (final distance %.9g, tolerance %.9g)\n",
                section.name.c_str(), result.pass ? "PASS" : "FAIL",
                result.report.final_distance(), result.report.tolerance);
  }
  if (!out_path.empty()) philab::write_csv_file(out_path, rows);

  if (expect_fail) return all_pass ? 1 : 0;
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification runner for random-sum / random-max limit laws"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  long long seed = 0;
  std::string out_path;
  bool expect_fail = false;

  CLI::App* run = app.add_subcommand("run", "run every experiment in a config");
  run->add_option("config", config_path, "config file path")->required();
  run->add_option("--set", overrides, "override key=value in every section");
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "override the master seed");
  run->add_option("--out", out_path, "write the CSV report here");
  run->add_flag("--expect-fail", expect_fail,
                "invert the pass/fail exit code (fixture semantics)");

  CLI::App* list =
      app.add_subcommand("list-experiments", "print the experiment kinds");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    for (const std::string& kind : philab::experiment_kinds())
      std::printf("%s\n", kind.c_str());
    return 0;
  }

  try {
    return run_command(config_path, overrides, seed, seed_opt->count() > 0,
                       out_path, expect_fail);
  } catch (const philab::config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const philab::io_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 4;
  } catch (const philab::numeric_error& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
