#include "monitor.hpp"

#include <cmath>
#include <limits>

namespace ahs::monitor {

using fields::for_each_point;
using fields::gather_jets;
using fields::max_axes;
using fields::PointJets;
using fields::StencilTables;

EstimateSnapshot take_snapshot(const ProblemSpec& prob, const ScalarField& u,
                               double c, double t) {
  const auto& grid = prob.geometry.grid;
  require(u.grid == grid, Status::argument_error, "take_snapshot: grid mismatch");
  EstimateSnapshot s;
  s.t_value = t;
  s.c_value = c;
  s.c0_norm = solver::sup_abs(u);
  s.grad_sup = fields::gradient_sup(grid, u);
  s.K = s.grad_sup * s.grad_sup + 1.0;
  s.hessian_sup = fields::real_hessian_sup(grid, u);
  ScalarField lmin, lmax;
  fields::real_hessian_range(grid, u, lmin, lmax);
  s.lambda1_max = -std::numeric_limits<double>::infinity();
  for (double x : lmax.v) s.lambda1_max = std::max(s.lambda1_max, x);

  const int n = prob.geometry.n;
  std::vector<double> mus = solver::state_eigenvalues(prob, u);
  auto cd = prob.op.cone();
  s.f_sum_min = std::numeric_limits<double>::infinity();
  s.trace_min = std::numeric_limits<double>::infinity();
  std::array<double, cone::max_dim> fg{};
  bool any_bad = false;
  for (std::size_t p = 0; p < grid.points(); ++p) {
    std::span<const double> mu(&mus[p * n], static_cast<std::size_t>(n));
    double tr = 0.0;
    for (double m : mu) tr += m;
    s.trace_min = std::min(s.trace_min, tr);
    if (!cone::in_cone(cd, mu)) {
      any_bad = true;
      continue;
    }
    cone::f_grad(prob.op, mu, std::span<double>(fg.data(), mu.size()));
    double fs = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) fs += fg[i];
    s.f_sum_min = std::min(s.f_sum_min, fs);
  }
  if (any_bad) s.f_sum_min = std::numeric_limits<double>::quiet_NaN();
  return s;
}

QuadraticBoundFit quadratic_bound_fit(
    std::span<const EstimateSnapshot> snaps) {
  require(!snaps.empty(), Status::argument_error,
          "quadratic_bound_fit: no snapshots");
  QuadraticBoundFit fit;
  for (const auto& s : snaps) {
    double r = s.hessian_sup / s.K;  // K >= 1, never divides by zero
    if (r > fit.C_fit) fit.C_fit = r;
  }
  fit.worst_ratio = fit.C_fit;
  return fit;
}

std::vector<DichotomyCase> subsolution_dichotomy_probe(
    const ProblemSpec& prob, const ScalarField& u,
    const ScalarField& u_underline, double theta) {
  const auto& geo = prob.geometry;
  require(u.grid == geo.grid && u_underline.grid == geo.grid,
          Status::argument_error, "dichotomy probe: grid mismatch");
  const int n = geo.n;

  fields::MatrixField Ea, Eb;
  fields::ddbar(geo, u, Ea);
  fields::ddbar(geo, u_underline, Eb);

  pencil::HermitianPencil pen;
  pen.chi = pencil::CMat::Identity(n, n);
  pen.gt.resize(n, n);
  pencil::CMat B(n, n);
  std::array<double, cone::max_dim> fg{};

  std::vector<DichotomyCase> out(geo.grid.points());
  for (std::size_t p = 0; p < geo.grid.points(); ++p) {
    const fields::Complex* g = prob.background.at(p);
    const fields::Complex* ea = Ea.at(p);
    const fields::Complex* eb = Eb.at(p);
    for (int ij = 0; ij < n * n; ++ij) {
      pen.gt.data()[ij] = g[ij] + ea[ij];
      B.data()[ij] = g[ij] + eb[ij];
    }
    auto sd = pencil::pencil_eigen(pen);
    std::span<const double> mu(sd.mu.data(), static_cast<std::size_t>(n));
    require(cone::in_cone(prob.op.cone(), mu), Status::argument_error,
            "dichotomy probe: solved state leaves the cone at point " +
                std::to_string(p));
    cone::f_grad(prob.op, mu, std::span<double>(fg.data(), mu.size()));
    double fsum = 0.0, fmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      fsum += fg[i];
      fmin = std::min(fmin, fg[i]);
    }
    // pairing sum_i f_i (B'_ii - mu_i) in the eigenframe of the state
    double pairing = 0.0;
    for (int i = 0; i < n; ++i) {
      pencil::CVec qi = sd.frame.col(i);
      double bii = (qi.adjoint() * B * qi)(0, 0).real();
      pairing += fg[i] * (bii - sd.mu[i]);
    }
    double gate = theta * fsum;
    if (fmin > gate)
      out[p] = DichotomyCase::UniformCase;
    else if (pairing > gate)
      out[p] = DichotomyCase::GradientCase;
    else
      out[p] = DichotomyCase::Neither;
  }
  return out;
}

QDiagnostics q_field(const ProblemSpec& prob, const ScalarField& u, double A) {
  const auto& grid = prob.geometry.grid;
  require(u.grid == grid, Status::argument_error, "q_field: grid mismatch");
  QDiagnostics d;
  d.A = A;
  double gs = fields::gradient_sup(grid, u);
  d.K = gs * gs + 1.0;
  d.N = fields::real_hessian_sup(grid, u) + 1.0;

  ScalarField lmin, lmax;
  fields::real_hessian_range(grid, u, lmin, lmax);

  const double xi_cap = 5.0 * d.N * d.N;
  const double xi_window = 4.0 * d.N * d.N;
  const int ax = grid.axes();
  StencilTables st(grid);
  PointJets jets;

  for_each_point(grid, [&](std::size_t p, const std::array<int, max_axes>& c) {
    double lam1 = lmax.v[p];
    if (!(lam1 > 0.0)) return;
    gather_jets(st, u.v.data(), p, c, jets);
    double rho2 = 0.0, du2 = 0.0;
    for (int a = 0; a < ax; ++a) {
      du2 += jets.grad[a] * jets.grad[a];
      for (int b = 0; b < ax; ++b) {
        double r = jets.hess[a][b] + (a == b ? d.N : 0.0);
        rho2 += r * r;
      }
    }
    if (rho2 >= xi_cap) {
      ++d.xi_skipped;
      return;
    }
    if (rho2 > xi_window) ++d.xi_flagged;
    if (du2 > d.K) ++d.eta_flagged;
    double lt = std::log(lam1);
    double xt = -0.25 * std::log(xi_cap - rho2);
    double et = -0.25 * std::log(2.0 * d.K - du2);
    double pt = std::exp(-A * u.v[p]);
    double q = lt + xt + et + pt;
    d.points.push_back(p);
    d.log_lam1.push_back(lt);
    d.xi_term.push_back(xt);
    d.eta_term.push_back(et);
    d.exp_term.push_back(pt);
    d.q.push_back(q);
    if (d.empty || q > d.q_max) {
      d.q_max = q;
      d.max_point = p;
    }
    d.empty = false;
  });
  return d;
}

std::vector<std::string> snapshot_columns() {
  return {"c0_norm",     "grad_sup",  "K",         "hessian_sup",
          "lambda1_max", "f_sum_min", "trace_min"};
}

std::vector<double> snapshot_values(const EstimateSnapshot& s) {
  return {s.c0_norm,     s.grad_sup,  s.K,        s.hessian_sup,
          s.lambda1_max, s.f_sum_min, s.trace_min};
}

} // namespace ahs::monitor
