#pragma once

#include "monitor.hpp"
#include "newton.hpp"

namespace ahs::solver {

struct PathControls {
  double t_target = 1.0;
  double dt_init = 0.1;
  double dt_min = 1e-4;
  double dt_max = 0.5;
  int easy_iters = 5;    // a solve under this many iterations counts as easy
  int easy_streak = 2;   // doubles dt after this many consecutive easy solves
  NewtonControls newton;
  bool take_snapshots = true;
  /// When the zero candidate fails subsolution certification the path
  /// refuses to start unless this override is set, in which case the
  /// failure is only recorded in the report.
  bool allow_uncertified = false;
};

struct PathRow {
  double t = 0.0;
  double dt = 0.0;
  double c = 0.0;
  double residual_sup = 0.0;
  int newton_iters = 0;
  long krylov_iters = 0;
  monitor::EstimateSnapshot snap;
};

struct PathReport {
  bool reached_target = false;
  double t_final = 0.0;
  ScalarField u;  // final normalization applied
  double c = 0.0;
  std::vector<PathRow> rows;  // t strictly increasing, one per accepted state
  std::string message;        // empty on success
  cone::SubsolutionCertificate start_certificate;
};

/// Marches t from 0 to t_target through the interpolated right-hand sides
/// t h + (1-t) h_0, warm-starting Newton from the previous accepted state.
/// Steps halve on a failed solve and double after easy_streak consecutive
/// easy solves; underflow of dt below dt_min stops the path with the last
/// good state (reached_target = false, message set). The start (0, 0) is
/// an exact solution at t = 0 by construction of h_0. Throws config_error
/// when the background is inadmissible, not_certified when the zero
/// candidate fails certification without the override; Newton failures
/// never throw, they shrink dt.
PathReport continuity_solve(const ProblemSpec& prob, const PathControls& ctl);

/// Shifts u so sup u = 0 (sup_zero) or mean u = 0 (mean_zero). Constant
/// shifts do not change the residual, so c is untouched.
void normalize_state(ScalarField& u, Normalization mode);

} // namespace ahs::solver
