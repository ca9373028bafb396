// Command-line front end. Links only the public C API.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ahs.h"

namespace {

struct CommonOpts {
  std::string config;
  std::string out;
  std::string preset;
  int grid = 0;
  int k = 0;
  double amplitude = 0.0;
  double tol = 0.0;
  long long seed = 0;
  std::vector<std::string> sets;
  bool force_internal = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config,
                  "problem file (defaults apply if omitted)");
  cmd->add_option("--grid", o.grid, "override grid.size");
  cmd->add_option("--k", o.k, "override operator.k");
  cmd->add_option("--preset", o.preset, "override geometry.preset");
  cmd->add_option("--amplitude", o.amplitude, "override geometry.amplitude");
  cmd->add_option("--tol", o.tol, "override path.newton_tol");
  cmd->add_option("--out", o.out, "output directory (run.out)");
  cmd->add_option("--seed", o.seed, "override run.seed");
  cmd->add_option("--set", o.sets,
                  "generic dotted-key override, key=value (repeatable)");
  cmd->add_flag("--force-internal-error", o.force_internal)->group("");
}

int fail_with(int rc) {
  std::fprintf(stderr, "error (%s): %s\n", ahs_status_name(rc),
               ahs_last_error());
  return ahs_exit_code(rc);
}

// Scalars printed per command, in order; absent names are skipped.
const std::vector<std::string>& print_list(const std::string& cmd) {
  static const std::vector<std::string> solve = {
      "reached_target", "t_final", "final_c", "final_residual_sup",
      "c_fit",          "rows",    "newton_iters_total"};
  static const std::vector<std::string> check = {
      "certified", "min_slack", "delta", "witness_point", "witness_index"};
  static const std::vector<std::string> mms = {"levels", "error_last",
                                               "order_last", "c_abs_max"};
  static const std::vector<std::string> sweep = {"runs", "ok_runs",
                                                 "c_fit_min", "c_fit_max"};
  static const std::vector<std::string> report = {
      "uniform_points", "gradient_points", "neither_points", "hessian_sup",
      "trace_min"};
  if (cmd == "solve") return solve;
  if (cmd == "check-subsolution") return check;
  if (cmd == "mms") return mms;
  if (cmd == "sweep") return sweep;
  return report;
}

void print_table(const ahs_run* run) {
  size_t rows = 0, cols = 0;
  ahs_run_row_count(run, &rows);
  ahs_run_column_count(run, &cols);
  if (cols == 0) return;
  for (size_t c = 0; c < cols; ++c)
    std::printf("%s%s", c ? "," : "", ahs_run_column_name(run, c));
  std::printf("\n");
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c)
      std::printf("%s%s", c ? "," : "", ahs_run_cell(run, r, c));
    std::printf("\n");
  }
}

std::string render(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hessian-equation lab on periodic almost Hermitian geometry"};
  app.require_subcommand(1);

  CommonOpts opts;
  const char* names[] = {"solve", "sweep", "check-subsolution", "mms",
                         "report"};
  const char* briefs[] = {
      "follow the continuity path to the target right-hand side",
      "re-solve over a parameter value list and grid sizes",
      "certify a candidate subsolution for the configured target",
      "manufactured-solution convergence ladder",
      "monitor report for a previously solved state"};
  for (int i = 0; i < 5; ++i)
    add_common(app.add_subcommand(names[i], briefs[i]), opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // help exits 0; parse errors are class 1
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  if (opts.force_internal) {
    std::fprintf(stderr, "error (%s): forced internal invariant violation\n",
                 ahs_status_name(AHS_INTERNAL_ERROR));
    return ahs_exit_code(AHS_INTERNAL_ERROR);
  }

  ahs_problem* problem = nullptr;
  int rc = opts.config.empty()
               ? ahs_problem_create_from_string("", &problem)
               : ahs_problem_create_from_file(opts.config.c_str(), &problem);
  if (rc != AHS_OK) return fail_with(rc);

  auto set = [&](const char* key, const std::string& value) {
    if (rc == AHS_OK) rc = ahs_problem_override(problem, key, value.c_str());
  };
  if (sub->count("--grid")) set("grid.size", std::to_string(opts.grid));
  if (sub->count("--k")) set("operator.k", std::to_string(opts.k));
  if (sub->count("--preset")) set("geometry.preset", opts.preset);
  if (sub->count("--amplitude"))
    set("geometry.amplitude", render(opts.amplitude));
  if (sub->count("--tol")) set("path.newton_tol", render(opts.tol));
  if (sub->count("--seed")) set("run.seed", std::to_string(opts.seed));
  if (sub->count("--out")) set("run.out", opts.out);
  for (const auto& kv : opts.sets) {
    if (rc != AHS_OK) break;
    std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::fprintf(stderr, "error (%s): --set expects key=value, got '%s'\n",
                   ahs_status_name(AHS_ARGUMENT_ERROR), kv.c_str());
      ahs_problem_destroy(problem);
      return ahs_exit_code(AHS_ARGUMENT_ERROR);
    }
    rc = ahs_problem_override(problem, kv.substr(0, eq).c_str(),
                              kv.substr(eq + 1).c_str());
  }
  if (rc != AHS_OK) {
    int code = fail_with(rc);
    ahs_problem_destroy(problem);
    return code;
  }

  ahs_run* run = nullptr;
  rc = ahs_problem_run(problem, command.c_str(), nullptr, &run);

  if (run) {
    FILE* stream = rc == AHS_OK ? stdout : stderr;
    std::fprintf(stream, "%s (%s): %s\n", command.c_str(),
                 ahs_status_name(rc), ahs_run_message(run));
    for (const auto& name : print_list(command)) {
      double v = 0.0;
      if (ahs_run_scalar(run, name.c_str(), &v) == AHS_OK)
        std::printf("%s = %.17g\n", name.c_str(), v);
    }
    if (command == "mms" || command == "sweep") print_table(run);
  } else if (rc != AHS_OK) {
    std::fprintf(stderr, "error (%s): %s\n", ahs_status_name(rc),
                 ahs_last_error());
  }

  ahs_run_destroy(run);
  ahs_problem_destroy(problem);
  return ahs_exit_code(rc);
}
