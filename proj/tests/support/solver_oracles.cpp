#include "solver_oracles.hpp"

#include <cmath>

namespace oracle {

using ahs::fields::for_each_point;
using ahs::fields::max_axes;
using ahs::fields::PeriodicGrid;
using ahs::fields::ScalarField;
using ahs::fields::StencilTables;

namespace {

// 1/2 sum_a second difference, the flat canonical Laplacian stencil
void flat_lap(const StencilTables& st, const PeriodicGrid& g,
              const std::vector<double>& u, std::vector<double>& out) {
  for_each_point(g, [&](std::size_t p, const std::array<int, max_axes>& c) {
    double s = 0.0;
    for (int a = 0; a < st.axes; ++a) {
      double fu = u[p + st.up[a][c[a]]], fd = u[p + st.dn[a][c[a]]];
      s += 0.5 * (fu - 2.0 * u[p] + fd) * st.inv_h2[a];
    }
    out[p] = s;
  });
}

void project_mean(std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  m /= double(v.size());
  for (double& x : v) x -= m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace

LinearSigma1 solve_sigma1_flat(const ahs::solver::ProblemSpec& prob,
                               double tol) {
  const auto& geo = prob.geometry;
  if (geo.preset != ahs::fields::GeometryPreset::flat_standard ||
      prob.op.kind != ahs::cone::OperatorKind::log_sigma_k || prob.op.k != 1)
    ahs::fail(ahs::Status::argument_error,
              "sigma_1 oracle needs the flat preset and log sigma_1");

  const std::size_t np = geo.grid.points();
  const int n = geo.n;
  std::vector<double> trg(np);
  for (std::size_t p = 0; p < np; ++p) {
    const auto* blk = prob.background.at(p);
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += blk[i + n * i].real();
    trg[p] = tr;
  }

  double mean_trg = 0.0, mean_eh = 0.0;
  for (std::size_t p = 0; p < np; ++p) {
    mean_trg += trg[p];
    mean_eh += std::exp(prob.h.v[p]);
  }
  mean_trg /= double(np);
  mean_eh /= double(np);

  LinearSigma1 out;
  out.c = std::log(mean_trg) - std::log(mean_eh);

  // -lap u = trg - exp(h + c), solved by CG on the mean-zero subspace
  std::vector<double> b(np);
  for (std::size_t p = 0; p < np; ++p)
    b[p] = trg[p] - std::exp(prob.h.v[p] + out.c);
  project_mean(b);

  StencilTables st(geo.grid);
  std::vector<double> x(np, 0.0), r = b, pv = r, Ap(np);
  double bn = std::sqrt(dot(b, b));
  if (bn == 0.0) bn = 1.0;
  double rs = dot(r, r);
  const long cap = 20000;
  while (std::sqrt(rs) > tol * bn && out.cg_iters < cap) {
    flat_lap(st, geo.grid, pv, Ap);
    for (double& v : Ap) v = -v;
    double alpha = rs / dot(pv, Ap);
    for (std::size_t i = 0; i < np; ++i) {
      x[i] += alpha * pv[i];
      r[i] -= alpha * Ap[i];
    }
    project_mean(r);
    double rs2 = dot(r, r);
    double beta = rs2 / rs;
    rs = rs2;
    for (std::size_t i = 0; i < np; ++i) pv[i] = r[i] + beta * pv[i];
    ++out.cg_iters;
  }
  out.cg_rel_residual = std::sqrt(rs) / bn;
  project_mean(x);

  out.u = ScalarField(geo.grid);
  out.u.v = std::move(x);
  return out;
}

ScalarField random_trig_field(const PeriodicGrid& g, std::mt19937_64& rng,
                              double amp, int modes) {
  const int ax = g.axes();
  const double two_pi = 2.0 * std::acos(-1.0);
  std::uniform_int_distribution<int> freq(-2, 2);
  std::uniform_real_distribution<double> phase(0.0, two_pi);
  std::uniform_real_distribution<double> ampl(0.5, 1.0);

  struct Mode {
    std::array<int, max_axes> m;
    double a, ph;
  };
  std::vector<Mode> waves;
  for (int k = 0; k < modes; ++k) {
    Mode w{};
    bool nonzero = false;
    for (int a = 0; a < ax; ++a) {
      w.m[a] = freq(rng);
      nonzero = nonzero || w.m[a] != 0;
    }
    if (!nonzero) w.m[0] = 1;
    w.a = amp * ampl(rng);
    w.ph = phase(rng);
    waves.push_back(w);
  }

  ScalarField out(g);
  std::array<double, max_axes> x{};
  for_each_point(g, [&](std::size_t p, const std::array<int, max_axes>& c) {
    ahs::fields::grid_x(g, c, x);
    double s = 0.0;
    for (const auto& w : waves) {
      double arg = w.ph;
      for (int a = 0; a < ax; ++a) arg += two_pi * w.m[a] * x[a];
      s += w.a * std::cos(arg);
    }
    out.v[p] = s;
  });
  return out;
}

} // namespace oracle
