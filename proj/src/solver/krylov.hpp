#pragma once

#include <cstddef>
#include <functional>

namespace ahs::solver {

struct KrylovControls {
  double rtol = 1e-10;
  int restart = 150;
  long max_iters = 0;  // 0 means ceil(10 sqrt(N))
};

struct KrylovResult {
  long iters = 0;
  double rel_residual = 0.0;  // preconditioned residual over preconditioned b
  bool converged = false;
};

using ApplyFn = std::function<void(const double*, double*)>;

/// Restarted GMRES for A x = b with left diagonal preconditioning:
/// inv_diag[i] multiplies row i of every residual. x carries the initial
/// guess in and the best iterate out. Arnoldi uses modified Gram-Schmidt
/// with Givens rotations on the Hessenberg; a lucky breakdown terminates
/// the cycle with the exact subspace solution.
KrylovResult gmres(std::size_t N, const ApplyFn& apply, const double* b,
                   double* x, const double* inv_diag,
                   const KrylovControls& ctl);

} // namespace ahs::solver
