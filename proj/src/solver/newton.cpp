#include "newton.hpp"

#include <cmath>

namespace ahs::solver {

using fields::StencilTables;

NewtonResult newton_solve(const ProblemSpec& prob, const ScalarField& rhs_base,
                          ScalarField u0, double c0,
                          const NewtonControls& ctl) {
  const std::size_t N = prob.geometry.grid.points();
  const int ax = prob.geometry.ax;
  const int cs = coeff_stride(ax);

  NewtonResult out;
  double m0 = mean(u0);
  for (double& x : u0.v) x -= m0;
  out.u = std::move(u0);
  out.c = c0;

  const EvalOptions full{true, false};
  const EvalOptions light{false, false};
  StateEval ev = evaluate(prob, rhs_base, out.u, out.c, full);
  if (!ev.admissible) {
    out.fail_reason = "initial state leaves the operator cone at point " +
                      std::to_string(ev.first_bad);
    return out;
  }
  out.residual_sup = ev.residual_sup;

  StencilTables st(prob.geometry.grid);
  std::vector<double> b(N + 1), dx(N + 1), inv_diag(N + 1);
  ScalarField trial(prob.geometry.grid);

  auto apply = [&](const double* xin, double* yout) {
    linearized_apply(prob, ev, xin, xin[N], yout);
    double mz = 0.0;
    for (std::size_t p = 0; p < N; ++p) mz += xin[p];
    yout[N] = mz / double(N);
  };

  for (;;) {
    if (ev.residual_sup <= ctl.tol) {
      out.converged = true;
      return out;
    }
    if (out.iters >= ctl.max_iters) {
      out.fail_reason = "no convergence within " +
                        std::to_string(ctl.max_iters) + " iterations (residual " +
                        std::to_string(ev.residual_sup) + ")";
      return out;
    }

    for (std::size_t p = 0; p < N; ++p) {
      double d = 0.0;
      const double* co = &ev.coeff[p * cs];
      for (int a = 0; a < ax; ++a) d += co[a] * (-2.0 * st.inv_h2[a]);
      inv_diag[p] = std::abs(d) > 1e-300 ? 1.0 / d : 1.0;
      b[p] = -ev.residual.v[p];
    }
    inv_diag[N] = 1.0;
    b[N] = 0.0;
    std::fill(dx.begin(), dx.end(), 0.0);

    KrylovControls kc;
    kc.rtol = ctl.krylov_rtol;
    kc.restart = ctl.restart;
    kc.max_iters = ctl.krylov_cap;
    KrylovResult kr = gmres(N + 1, apply, b.data(), dx.data(),
                            inv_diag.data(), kc);
    out.krylov_iters_total += kr.iters;

    double s = 1.0;
    bool accepted = false;
    while (s >= ctl.ls_floor) {
      for (std::size_t p = 0; p < N; ++p)
        trial.v[p] = out.u.v[p] + s * dx[p];
      double mt = mean(trial);
      for (double& x : trial.v) x -= mt;
      double ct = out.c + s * dx[N];
      StateEval et =
          evaluate(prob, rhs_base, trial, ct, s == 1.0 ? full : light);
      if (et.admissible && et.residual_sup < ev.residual_sup) {
        if (s != 1.0) et = evaluate(prob, rhs_base, trial, ct, full);
        out.u.v.swap(trial.v);
        out.c = ct;
        ev = std::move(et);
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    ++out.iters;
    if (!accepted) {
      out.fail_reason =
          "line search stalled (no admissible residual decrease above step " +
          std::to_string(ctl.ls_floor) + ")";
      return out;
    }
    out.residual_sup = ev.residual_sup;
  }
}

} // namespace ahs::solver
