#pragma once

#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace ahs::run {

/// Result of one command: a status, a one-line human message, named scalars,
/// and the table the command's CSV artifact mirrors (cells pre-rendered).
/// Commands never throw; every failure is mapped to a status + message.
struct RunOutcome {
  Status status = Status::ok;
  std::string message;
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Dispatch on "solve" | "sweep" | "check-subsolution" | "mms" | "report".
/// Unknown command ->  argument_error.
RunOutcome run_command(const io::Config& cfg, const std::string& command);

/// Follows the continuity path to t_target and writes into run.out:
/// resolved.ini, u.snap (final state), path.csv (t, c, residual_norm,
/// newton_iters + estimate columns when snapshots are on), estimates.csv,
/// summary.txt (final c, residual, C_fit). Partial path.csv is still
/// written when the path fails; nothing is written on config errors.
RunOutcome run_solve(const io::Config& cfg);

/// Manufactured-solution ladder over mms.sizes; writes mms.csv with columns
/// grid, sup_error, order (order "-" on the first row, "exact" in discrete
/// mode) and summary.txt. A non-converged level truncates the table and
/// reports path_failure naming the level.
RunOutcome run_mms(const io::Config& cfg);

/// Certifies the [check] candidate against the configured target h; writes
/// summary.txt. Status not_certified carries the witness point.
RunOutcome run_check_subsolution(const io::Config& cfg);

/// Re-solves per sweep.parameter value and grid size; writes sweep.csv (one
/// row per sub-run, solver failures recorded per row) and summary.txt.
/// Status is ok when at least one sub-run succeeded.
RunOutcome run_sweep(const io::Config& cfg);

/// Reads u.snap + summary.txt of a previous solve from run.out and emits
/// monitor artifacts: report.csv (per-A comparison-quantity table),
/// qfield_A*.snap dumps (nan outside the positive-eigenvalue domain), and
/// report.txt with the estimate snapshot and dichotomy counts.
RunOutcome run_report(const io::Config& cfg);

/// Scalar lookup; argument_error if absent.
double outcome_scalar(const RunOutcome& oc, const std::string& name);

} // namespace ahs::run
