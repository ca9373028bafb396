#include "continuity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ahs::solver {

void normalize_state(ScalarField& u, Normalization mode) {
  double shift;
  if (mode == Normalization::sup_zero) {
    shift = -std::numeric_limits<double>::infinity();
    for (double x : u.v) shift = std::max(shift, x);
  } else {
    shift = mean(u);
  }
  for (double& x : u.v) x -= shift;
}

PathReport continuity_solve(const ProblemSpec& prob, const PathControls& ctl) {
  PathReport rep;
  ScalarField h0 = h_zero(prob);  // throws config_error on a bad background

  ScalarField zero(prob.geometry.grid);
  rep.start_certificate = certify_problem(prob, zero);
  if (!rep.start_certificate.certified && !ctl.allow_uncertified)
    fail(Status::not_certified,
         "zero candidate is not a certified subsolution: " +
             rep.start_certificate.message);

  rep.u = std::move(zero);
  rep.c = 0.0;
  double t = 0.0;
  double dt = ctl.dt_init;
  int streak = 0;

  auto record = [&](double tv, double dtv, const NewtonResult& nr) {
    PathRow row;
    row.t = tv;
    row.dt = dtv;
    row.c = nr.c;
    row.residual_sup = nr.residual_sup;
    row.newton_iters = nr.iters;
    row.krylov_iters = nr.krylov_iters_total;
    if (ctl.take_snapshots)
      row.snap = monitor::take_snapshot(prob, nr.u, nr.c, tv);
    rep.rows.push_back(std::move(row));
  };

  {
    // t = 0 row: (0, 0) is an exact solution by construction of h_0
    ScalarField rhs = path_rhs(prob, h0, 0.0);
    NewtonResult nr = newton_solve(prob, rhs, rep.u, rep.c, ctl.newton);
    if (!nr.converged)
      fail(Status::internal_error,
           "start state failed to solve at t = 0: " + nr.fail_reason);
    record(0.0, 0.0, nr);
    rep.u = std::move(nr.u);
    rep.c = nr.c;
  }

  while (t < ctl.t_target) {
    double t_next = std::min(t + dt, ctl.t_target);
    ScalarField rhs = path_rhs(prob, h0, t_next);
    NewtonResult nr = newton_solve(prob, rhs, rep.u, rep.c, ctl.newton);
    if (nr.converged) {
      double used = t_next - t;
      t = t_next;
      record(t, used, nr);
      rep.u = std::move(nr.u);
      rep.c = nr.c;
      if (nr.iters < ctl.easy_iters) {
        if (++streak >= ctl.easy_streak) {
          dt = std::min(dt * 2.0, ctl.dt_max);
          streak = 0;
        }
      } else {
        streak = 0;
      }
    } else {
      streak = 0;
      dt *= 0.5;
      if (dt < ctl.dt_min) {
        rep.t_final = t;
        rep.message = "path step underflow below " +
                      std::to_string(ctl.dt_min) + " at t = " +
                      std::to_string(t) + " (" + nr.fail_reason + ")";
        normalize_state(rep.u, prob.normalization);
        return rep;
      }
    }
  }

  rep.reached_target = true;
  rep.t_final = t;
  normalize_state(rep.u, prob.normalization);
  return rep;
}

} // namespace ahs::solver
