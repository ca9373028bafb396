#include "krylov.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ahs::solver {

namespace {

double dot(std::size_t N, const double* a, const double* b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

} // namespace

KrylovResult gmres(std::size_t N, const ApplyFn& apply, const double* b,
                   double* x, const double* inv_diag,
                   const KrylovControls& ctl) {
  const int m = std::max(1, ctl.restart);
  const long cap = ctl.max_iters > 0
                       ? ctl.max_iters
                       : static_cast<long>(
                             std::ceil(10.0 * std::sqrt(double(N))));

  KrylovResult res;

  double bnorm = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double z = b[i] * inv_diag[i];
    bnorm += z * z;
  }
  bnorm = std::sqrt(bnorm);
  if (bnorm == 0.0) {
    std::fill(x, x + N, 0.0);
    res.converged = true;
    return res;
  }
  const double tol_abs = ctl.rtol * bnorm;

  std::vector<double> V(std::size_t(m + 1) * N);
  std::vector<double> H(std::size_t(m + 1) * m, 0.0);  // H(i,j) = H[i+(m+1)j]
  std::vector<double> gc(m), gs(m), g(m + 1), y(m), w(N);

  for (;;) {
    apply(x, w.data());
    double rnorm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      double z = (b[i] - w[i]) * inv_diag[i];
      V[i] = z;
      rnorm += z * z;
    }
    rnorm = std::sqrt(rnorm);
    res.rel_residual = rnorm / bnorm;
    if (rnorm <= tol_abs) {
      res.converged = true;
      return res;
    }
    if (res.iters >= cap) return res;

    for (std::size_t i = 0; i < N; ++i) V[i] /= rnorm;
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = rnorm;

    int j = 0;
    bool stop = false;
    while (j < m && res.iters < cap && !stop) {
      apply(&V[std::size_t(j) * N], w.data());
      for (std::size_t i = 0; i < N; ++i) w[i] *= inv_diag[i];
      for (int i2 = 0; i2 <= j; ++i2) {
        double hij = dot(N, &V[std::size_t(i2) * N], w.data());
        H[i2 + (m + 1) * j] = hij;
        const double* vi = &V[std::size_t(i2) * N];
        for (std::size_t i = 0; i < N; ++i) w[i] -= hij * vi[i];
      }
      double hj1 = std::sqrt(dot(N, w.data(), w.data()));
      H[j + 1 + (m + 1) * j] = hj1;
      if (hj1 > 0.0) {
        double* vj1 = &V[std::size_t(j + 1) * N];
        for (std::size_t i = 0; i < N; ++i) vj1[i] = w[i] / hj1;
      }
      for (int i2 = 0; i2 < j; ++i2) {
        double t1 = gc[i2] * H[i2 + (m + 1) * j] +
                    gs[i2] * H[i2 + 1 + (m + 1) * j];
        double t2 = -gs[i2] * H[i2 + (m + 1) * j] +
                    gc[i2] * H[i2 + 1 + (m + 1) * j];
        H[i2 + (m + 1) * j] = t1;
        H[i2 + 1 + (m + 1) * j] = t2;
      }
      double ha = H[j + (m + 1) * j], hb = H[j + 1 + (m + 1) * j];
      double rr = std::hypot(ha, hb);
      if (rr == 0.0) {
        gc[j] = 1.0;
        gs[j] = 0.0;
      } else {
        gc[j] = ha / rr;
        gs[j] = hb / rr;
      }
      H[j + (m + 1) * j] = rr;
      H[j + 1 + (m + 1) * j] = 0.0;
      double gj = g[j];
      g[j] = gc[j] * gj;
      g[j + 1] = -gs[j] * gj;
      ++res.iters;
      res.rel_residual = std::abs(g[j + 1]) / bnorm;
      if (std::abs(g[j + 1]) <= tol_abs || hj1 == 0.0) stop = true;
      ++j;
    }

    for (int i2 = j - 1; i2 >= 0; --i2) {
      double s = g[i2];
      for (int k2 = i2 + 1; k2 < j; ++k2) s -= H[i2 + (m + 1) * k2] * y[k2];
      y[i2] = H[i2 + (m + 1) * i2] != 0.0 ? s / H[i2 + (m + 1) * i2] : 0.0;
    }
    for (int k2 = 0; k2 < j; ++k2) {
      const double* vk = &V[std::size_t(k2) * N];
      for (std::size_t i = 0; i < N; ++i) x[i] += y[k2] * vk[i];
    }
    // restart: the loop head recomputes the true residual and re-tests
  }
}

} // namespace ahs::solver
