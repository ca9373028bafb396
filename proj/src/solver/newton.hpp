#pragma once

#include "krylov.hpp"
#include "problem.hpp"

namespace ahs::solver {

struct NewtonControls {
  double tol = 1e-10;       // residual sup target
  int max_iters = 30;
  double krylov_rtol = 1e-10;
  int restart = 150;
  long krylov_cap = 0;      // 0 means 10 sqrt(N+1) per linear solve
  double ls_floor = 1e-4;   // smallest backtracking step
};

struct NewtonResult {
  ScalarField u;
  double c = 0.0;
  int iters = 0;
  double residual_sup = 0.0;
  bool converged = false;
  std::string fail_reason;       // empty when converged
  long krylov_iters_total = 0;
};

/// Damped Newton for the augmented system
///   [ residual(u + psi, c + cdot) = 0, mean(u + psi) = 0 ]
/// in the unknowns (psi, cdot). Each step solves the exact linearization
/// with restarted GMRES under a diagonal preconditioner and backtracks by
/// halves until the trial state is admissible and strictly reduces the
/// residual sup. The iterate is kept on the mean-zero slice (constant
/// shifts do not change the residual, so this is a pure gauge choice).
/// A start that already meets tol returns converged with zero iterations.
/// Failures (inadmissible start, stalled line search, iteration budget)
/// come back in fail_reason with converged = false; no exception is
/// thrown for them, so path control can react.
NewtonResult newton_solve(const ProblemSpec& prob, const ScalarField& rhs_base,
                          ScalarField u0, double c0,
                          const NewtonControls& ctl);

} // namespace ahs::solver
