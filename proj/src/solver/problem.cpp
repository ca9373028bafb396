#include "problem.hpp"

#include <cmath>
#include <limits>

namespace ahs::solver {

using fields::for_each_point;
using fields::gather_jets;
using fields::grid_x;
using fields::max_axes;
using fields::PointJets;
using fields::StencilTables;
using fields::ddbar_point;

Normalization normalization_from_name(const std::string& name) {
  if (name == "sup_zero") return Normalization::sup_zero;
  if (name == "mean_zero") return Normalization::mean_zero;
  fail(Status::argument_error,
       "unknown normalization '" + name + "' (expected sup_zero or mean_zero)");
}

std::string normalization_name(Normalization n) {
  return n == Normalization::sup_zero ? "sup_zero" : "mean_zero";
}

MatrixField assemble_background(const GeometryFields& geo,
                                const fields::HermitianBackground& bg,
                                bool eta_reduction) {
  require(bg.n == geo.n, Status::argument_error,
          "background dimension does not match geometry");
  const int n = geo.n;
  MatrixField out(geo.grid, n);
  std::array<double, max_axes> x{};
  std::vector<Complex> eta(n * n);
  for_each_point(geo.grid, [&](std::size_t p,
                               const std::array<int, max_axes>& c) {
    grid_x(geo.grid, c, x);
    Complex* blk = out.at(p);
    if (!eta_reduction) {
      bg.value(x, geo.grid, c, blk);
      return;
    }
    bg.value(x, geo.grid, c, eta.data());
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += eta[i + n * i].real();
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        blk[i + n * j] = -(n - 1.0) * eta[i + n * j];
    for (int i = 0; i < n; ++i) blk[i + n * i] += tr;
  });
  return out;
}

namespace {

// per-point pencil workspace: chi is the identity for every preset
struct PencilScratch {
  pencil::HermitianPencil pen;
  explicit PencilScratch(int n) {
    pen.chi = pencil::CMat::Identity(n, n);
    pen.gt.resize(n, n);
  }
  pencil::SpectralData eigen(const Complex* g, const Complex* e, int nn) {
    Complex* gt = pen.gt.data();
    for (int ij = 0; ij < nn * nn; ++ij) gt[ij] = g[ij] + e[ij];
    return pencil::pencil_eigen(pen);
  }
  pencil::SpectralData eigen(const Complex* g, int nn) {
    Complex* gt = pen.gt.data();
    for (int ij = 0; ij < nn * nn; ++ij) gt[ij] = g[ij];
    return pencil::pencil_eigen(pen);
  }
};

std::span<const double> mu_span(const pencil::SpectralData& sd, int n) {
  return {sd.mu.data(), static_cast<std::size_t>(n)};
}

} // namespace

ScalarField h_zero(const ProblemSpec& prob) {
  const int n = prob.geometry.n;
  ScalarField out(prob.geometry.grid);
  PencilScratch ps(n);
  for (std::size_t p = 0; p < prob.geometry.grid.points(); ++p) {
    auto sd = ps.eigen(prob.background.at(p), n);
    double fv = 0.0;
    int bad = 0;
    if (!cone::try_f_eval(prob.op, mu_span(sd, n), fv, bad))
      fail(Status::config_error,
           "background eigenvalues leave the operator cone at point " +
               std::to_string(p) + " (defining inequality " +
               std::to_string(bad) + " fails); (u, c) = (0, 0) cannot start "
               "the path");
    out.v[p] = fv;
  }
  return out;
}

ScalarField path_rhs(const ProblemSpec& prob, const ScalarField& h0,
                     double t) {
  require(h0.grid == prob.geometry.grid, Status::argument_error,
          "path_rhs: grid mismatch");
  ScalarField out(prob.geometry.grid);
  for (std::size_t p = 0; p < out.v.size(); ++p)
    out.v[p] = t * prob.h.v[p] + (1.0 - t) * h0.v[p];
  return out;
}

std::vector<double> state_eigenvalues(const ProblemSpec& prob,
                                      const ScalarField& u) {
  const GeometryFields& geo = prob.geometry;
  require(u.grid == geo.grid, Status::argument_error,
          "state_eigenvalues: grid mismatch");
  const int n = geo.n;
  std::vector<double> out(geo.grid.points() * n);
  StencilTables st(geo.grid);
  PointJets jets;
  PencilScratch ps(n);
  Complex E[pencil::max_dim * pencil::max_dim];
  double defect = 0.0;
  for_each_point(geo.grid,
                 [&](std::size_t p, const std::array<int, max_axes>& c) {
                   gather_jets(st, u.v.data(), p, c, jets);
                   ddbar_point(geo, p, jets, E, defect);
                   auto sd = ps.eigen(prob.background.at(p), E, n);
                   for (int i = 0; i < n; ++i) out[p * n + i] = sd.mu[i];
                 });
  return out;
}

StateEval evaluate(const ProblemSpec& prob, const ScalarField& rhs_base,
                   const ScalarField& u, double c, const EvalOptions& opt) {
  const GeometryFields& geo = prob.geometry;
  require(u.grid == geo.grid && rhs_base.grid == geo.grid,
          Status::argument_error, "evaluate: grid mismatch");
  const int n = geo.n, ax = geo.ax;
  const std::size_t npts = geo.grid.points();
  const int cs = coeff_stride(ax);

  StateEval ev;
  ev.admissible = true;
  ev.residual = ScalarField(geo.grid);
  if (opt.linearization) {
    ev.fmat.assign(npts * n * n, Complex(0.0));
    ev.coeff.assign(npts * cs, 0.0);
  }
  if (opt.monitors) {
    ev.f_sum_min = std::numeric_limits<double>::infinity();
    ev.trace_min = std::numeric_limits<double>::infinity();
    ev.mu_abs_max = 0.0;
  }

  StencilTables st(geo.grid);
  PointJets jets;
  PencilScratch ps(n);
  Complex E[pencil::max_dim * pencil::max_dim];
  Complex B[pencil::max_dim * max_axes];
  double defect = 0.0;

  for_each_point(geo.grid, [&](std::size_t p,
                               const std::array<int, max_axes>& crd) {
    if (!ev.admissible) return;
    gather_jets(st, u.v.data(), p, crd, jets);
    ddbar_point(geo, p, jets, E, defect);
    auto sd = ps.eigen(prob.background.at(p), E, n);
    auto mu = mu_span(sd, n);
    double fv = 0.0;
    int bad = 0;
    if (!cone::try_f_eval(prob.op, mu, fv, bad)) {
      ev.admissible = false;
      ev.first_bad = p;
      ev.bad_index = bad;
      return;
    }
    double r = fv - rhs_base.v[p] - c;
    ev.residual.v[p] = r;
    if (std::abs(r) > ev.residual_sup) ev.residual_sup = std::abs(r);

    if (opt.monitors) {
      double fs = pencil::mean_f_sum(prob.op, sd);
      if (fs < ev.f_sum_min) ev.f_sum_min = fs;
      double tr = 0.0;
      for (int i = 0; i < n; ++i) {
        tr += sd.mu[i];
        if (std::abs(sd.mu[i]) > ev.mu_abs_max)
          ev.mu_abs_max = std::abs(sd.mu[i]);
      }
      if (tr < ev.trace_min) ev.trace_min = tr;
    }

    if (opt.linearization) {
      pencil::CMat F = pencil::linearization_coeffs(prob.op, sd);
      Complex* fm = &ev.fmat[p * n * n];
      for (int ij = 0; ij < n * n; ++ij) fm[ij] = F.data()[ij];

      // stencil coefficients of the exact derivative
      //   L(psi) = sum_ab Re(M_ab) H_ab(psi) + sum_b Re(cg_b) G_b(psi)
      // with M_ab = sum_ij F_ij a_{j,a} conj(a_{i,b}) (Hermitian) and
      // cg_b = sum_ij F_ij d_{ji,b}
      const Complex* a = geo.frame_at(p);
      const Complex* dd = geo.first_order_at(p);
      for (int i = 0; i < n; ++i)
        for (int al = 0; al < ax; ++al) {
          Complex s(0.0);
          for (int j = 0; j < n; ++j) s += fm[i + n * j] * a[j * ax + al];
          B[i * ax + al] = s;
        }
      double* co = &ev.coeff[p * cs];
      int cross = ax;
      for (int al = 0; al < ax; ++al) {
        for (int be = al; be < ax; ++be) {
          Complex m(0.0);
          for (int i = 0; i < n; ++i)
            m += B[i * ax + al] * std::conj(a[i * ax + be]);
          if (al == be)
            co[al] = m.real();
          else
            co[cross++] = 2.0 * m.real();
        }
      }
      for (int be = 0; be < ax; ++be) {
        Complex s(0.0);
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i)
            s += fm[i + n * j] * dd[(j * n + i) * ax + be];
        co[ax + ax * (ax - 1) / 2 + be] = s.real();
      }
    }
  });
  return ev;
}

void linearized_apply(const ProblemSpec& prob, const StateEval& eval,
                      const double* psi, double c_dot, double* out) {
  const GeometryFields& geo = prob.geometry;
  const int ax = geo.ax;
  const int cs = coeff_stride(ax);
  require(eval.admissible && !eval.coeff.empty(), Status::argument_error,
          "linearized_apply: evaluation has no linearization data");
  StencilTables st(geo.grid);
  PointJets jets;
  for_each_point(geo.grid, [&](std::size_t p,
                               const std::array<int, max_axes>& c) {
    gather_jets(st, psi, p, c, jets);
    const double* co = &eval.coeff[p * cs];
    double s = 0.0;
    for (int al = 0; al < ax; ++al) s += co[al] * jets.hess[al][al];
    int cross = ax;
    for (int al = 0; al < ax; ++al)
      for (int be = al + 1; be < ax; ++be)
        s += co[cross++] * jets.hess[al][be];
    const double* cg = co + ax + ax * (ax - 1) / 2;
    for (int be = 0; be < ax; ++be) s += cg[be] * jets.grad[be];
    out[p] = s - c_dot;
  });
}

void linearized_apply(const ProblemSpec& prob, const StateEval& eval,
                      const ScalarField& psi, double c_dot, ScalarField& out) {
  require(psi.grid == prob.geometry.grid, Status::argument_error,
          "linearized_apply: grid mismatch");
  if (!(out.grid == prob.geometry.grid)) out = ScalarField(prob.geometry.grid);
  linearized_apply(prob, eval, psi.v.data(), c_dot, out.v.data());
}

ManufacturedProblem manufactured_problem(GeometryFields geo, MatrixField bg,
                                         cone::SymmetricOperator op,
                                         const AnalyticScalar& u_star,
                                         MmsMode mode, Normalization norm) {
  require(u_star.axes == geo.ax, Status::argument_error,
          "manufactured_problem: scalar dimension does not match geometry");
  ScalarField us = fields::sample(u_star, geo.grid);
  MatrixField E;
  if (mode == MmsMode::analytic)
    fields::ddbar_analytic(geo, u_star, E);
  else
    fields::ddbar(geo, us, E);

  const int n = geo.n;
  ScalarField h(geo.grid);
  PencilScratch ps(n);
  for (std::size_t p = 0; p < geo.grid.points(); ++p) {
    auto sd = ps.eigen(bg.at(p), E.at(p), n);
    double fv = 0.0;
    int bad = 0;
    if (!cone::try_f_eval(op, mu_span(sd, n), fv, bad))
      fail(Status::argument_error,
           "manufactured state leaves the operator cone at point " +
               std::to_string(p) + " (defining inequality " +
               std::to_string(bad) + " fails); lower the amplitude");
    h.v[p] = fv;
  }
  ManufacturedProblem mp;
  mp.problem = ProblemSpec{std::move(geo), std::move(bg), op, std::move(h),
                           norm};
  mp.u_star = std::move(us);
  return mp;
}

cone::SubsolutionCertificate certify_problem(const ProblemSpec& prob,
                                             const ScalarField& u_underline) {
  std::vector<double> mus = state_eigenvalues(prob, u_underline);
  return cone::check_c_subsolution(prob.op, mus, prob.h.v);
}

double mean(const ScalarField& f) {
  double s = 0.0;
  for (double x : f.v) s += x;
  return s / static_cast<double>(f.v.size());
}

double sup_abs(const ScalarField& f) {
  double s = 0.0;
  for (double x : f.v) s = std::max(s, std::abs(x));
  return s;
}

} // namespace ahs::solver
