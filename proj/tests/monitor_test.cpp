#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "continuity.hpp"
#include "monitor.hpp"
#include "newton.hpp"
#include "support/solver_oracles.hpp"

using namespace ahs;
using namespace ahs::monitor;
using solver::EvalOptions;
using solver::NewtonControls;
using solver::NewtonResult;
using solver::ProblemSpec;
using fields::build_geometry;
using fields::GeometryPreset;
using fields::make_background;
using fields::make_scalar;
using fields::PeriodicGrid;
using fields::sample;
using fields::ScalarField;

namespace {

ProblemSpec identity_sigma2(int size = 8) {
  auto grid = PeriodicGrid::cube(2, size);
  auto geo = build_geometry(grid, GeometryPreset::flat_standard, 0.0);
  auto bg = solver::assemble_background(
      geo, make_background("identity", 2, 0.0), false);
  ProblemSpec prob{std::move(geo), std::move(bg),
                   cone::SymmetricOperator::log_sigma(2, 2),
                   ScalarField(grid), solver::Normalization::mean_zero};
  prob.h = solver::h_zero(prob);
  return prob;
}

} // namespace

TEST_CASE("snapshot of the zero state") {
  auto prob = identity_sigma2();
  ScalarField zero(prob.geometry.grid);
  EstimateSnapshot s = take_snapshot(prob, zero, 0.25, 0.5);
  CHECK(s.t_value == 0.5);
  CHECK(s.c_value == 0.25);
  CHECK(s.c0_norm == 0.0);
  CHECK(s.grad_sup == 0.0);
  CHECK(s.K == 1.0);
  CHECK(s.hessian_sup == 0.0);
  CHECK(s.lambda1_max == 0.0);
  CHECK(s.trace_min == 2.0);   // mu(identity) = (1,1)
  CHECK(s.f_sum_min == 2.0);   // d log sigma_2 at (1,1) is (1,1)
}

TEST_CASE("snapshot homogeneity under doubling") {
  auto prob = identity_sigma2();
  std::mt19937_64 rng(3);
  ScalarField u = oracle::random_trig_field(prob.geometry.grid, rng, 2e-4, 4);
  ScalarField u2 = u;
  for (double& x : u2.v) x *= 2.0;

  EstimateSnapshot a = take_snapshot(prob, u, 0.0, 0.0);
  EstimateSnapshot b = take_snapshot(prob, u2, 0.0, 0.0);
  CHECK(b.c0_norm == 2.0 * a.c0_norm);
  CHECK(b.grad_sup == 2.0 * a.grad_sup);    // doubling is exact in binary FP
  CHECK(b.hessian_sup == 2.0 * a.hessian_sup);
  CHECK(b.lambda1_max ==
        doctest::Approx(2.0 * a.lambda1_max).epsilon(1e-12));
}

TEST_CASE("quadratic bound fit: ratios, degenerate cases, reproducibility") {
  auto prob = identity_sigma2();
  std::mt19937_64 rng(11);
  ScalarField u = oracle::random_trig_field(prob.geometry.grid, rng, 1e-4, 4);

  std::vector<EstimateSnapshot> snaps;
  for (double scale : {1.0, 2.0, 3.0}) {
    ScalarField us = u;
    for (double& x : us.v) x *= scale;
    snaps.push_back(take_snapshot(prob, us, 0.0, 0.0));
  }
  QuadraticBoundFit fit = quadratic_bound_fit(snaps);

  double expect = 0.0;
  for (const auto& s : snaps)
    expect = std::max(expect,
                      s.hessian_sup / (s.grad_sup * s.grad_sup + 1.0));
  CHECK(fit.C_fit == expect);
  CHECK(fit.worst_ratio == expect);
  CHECK(fit.C_fit > 0.0);

  QuadraticBoundFit again = quadratic_bound_fit(snaps);
  CHECK(again.C_fit == fit.C_fit);  // bit-identical recomputation

  ScalarField zero(prob.geometry.grid);
  std::vector<EstimateSnapshot> one{take_snapshot(prob, zero, 0.0, 0.0)};
  CHECK(quadratic_bound_fit(one).C_fit == 0.0);

  try {
    quadratic_bound_fit({});
    FAIL("expected argument_error");
  } catch (const Error& e) {
    CHECK(e.status() == Status::argument_error);
  }
}

TEST_CASE("dichotomy probe: trivial thresholds") {
  auto prob = identity_sigma2();
  std::mt19937_64 rng(23);
  ScalarField u = oracle::random_trig_field(prob.geometry.grid, rng, 2e-4, 3);

  auto all_uniform = subsolution_dichotomy_probe(prob, u, u, 0.0);
  for (auto c : all_uniform) CHECK(c == DichotomyCase::UniformCase);

  auto all_neither = subsolution_dichotomy_probe(prob, u, u, 1e9);
  for (auto c : all_neither) CHECK(c == DichotomyCase::Neither);
}

TEST_CASE("dichotomy probe: engineered gradient case") {
  // constant background diag(3, 0.4): f/sum(f) is 0.1176 for the small
  // eigenvalue, so theta = 0.15 blocks the uniform branch everywhere and
  // the pairing against a one-axis cosine bump decides the rest by sign
  auto grid = PeriodicGrid::cube(2, 8);
  auto geo = build_geometry(grid, GeometryPreset::flat_standard, 0.0);
  fields::MatrixField bg(grid, 2);
  for (std::size_t p = 0; p < grid.points(); ++p) {
    auto* blk = bg.at(p);
    blk[0] = 3.0;
    blk[3] = 0.4;
  }
  ProblemSpec prob{std::move(geo), std::move(bg),
                   cone::SymmetricOperator::log_sigma(2, 2),
                   ScalarField(grid), solver::Normalization::mean_zero};
  prob.h = solver::h_zero(prob);

  ScalarField zero(grid);
  ScalarField bump = sample(make_scalar("cos_x1", 2, 0.3, 1.0), grid);
  auto cls = subsolution_dichotomy_probe(prob, zero, bump, 0.15);

  std::size_t grad = 0, uni = 0, neither = 0;
  for (auto c : cls) {
    if (c == DichotomyCase::GradientCase) ++grad;
    if (c == DichotomyCase::UniformCase) ++uni;
    if (c == DichotomyCase::Neither) ++neither;
  }
  CHECK(uni == 0);
  // cos(2 pi k/8) < 0 at k = 3, 4, 5: three of eight slabs go gradient
  CHECK(grad == 3 * 512);
  CHECK(neither == 5 * 512);

  auto strides = grid.strides();
  CHECK(cls[4 * strides[0]] == DichotomyCase::GradientCase);
  CHECK(cls[0] == DichotomyCase::Neither);
}

TEST_CASE("dichotomy probe on a solved state finds no gap") {
  auto grid = PeriodicGrid::cube(2, 8);
  auto geo = build_geometry(grid, GeometryPreset::flat_standard, 0.0);
  auto bg = solver::assemble_background(
      geo, make_background("identity", 2, 0.0), false);
  auto mp = solver::manufactured_problem(
      std::move(geo), std::move(bg),
      cone::SymmetricOperator::log_sigma(2, 2),
      make_scalar("cos13", 2, 0.02, 1.0), solver::MmsMode::discrete,
      solver::Normalization::mean_zero);
  NewtonControls nc;
  NewtonResult nr = solver::newton_solve(mp.problem, mp.problem.h,
                                         ScalarField(grid), 0.0, nc);
  REQUIRE(nr.converged);

  ScalarField zero(grid);
  auto cls = subsolution_dichotomy_probe(mp.problem, nr.u, zero, 1e-3);
  for (auto c : cls) CHECK(c != DichotomyCase::Neither);

  EstimateSnapshot s = take_snapshot(mp.problem, nr.u, nr.c, 1.0);
  CHECK(s.f_sum_min > 0.0);
  CHECK(s.trace_min > 0.0);
}

TEST_CASE("q diagnostics: empty domain, decomposition, derivative windows") {
  auto prob = identity_sigma2();
  ScalarField zero(prob.geometry.grid);
  QDiagnostics empty = q_field(prob, zero, 1.0);
  CHECK(empty.empty);
  CHECK(empty.points.empty());

  std::mt19937_64 rng(31);
  ScalarField u = oracle::random_trig_field(prob.geometry.grid, rng, 2e-4, 4);
  solver::normalize_state(u, solver::Normalization::sup_zero);  // u <= 0
  QDiagnostics d = q_field(prob, u, 1.0);
  REQUIRE(!d.empty);
  // |rho|^2 = |H|^2 + 2N tr H + 4N^2 in four real dimensions, so any point
  // with positive Hessian trace exceeds the 4N^2 window and must be flagged;
  // a mean-zero trig state has both signs of tr H
  CHECK(d.xi_flagged > 0);
  CHECK(d.xi_flagged < d.points.size());
  // skipping needs tr H of order N/2, far beyond this amplitude
  CHECK(d.xi_skipped == 0);
  CHECK(d.eta_flagged == 0);

  const double xi_lo = 1.0 / (20.0 * d.N * d.N);
  const double xi_hi = 1.0 / (4.0 * d.N * d.N);
  const double eta_lo = 1.0 / (8.0 * d.K);
  const double eta_hi = 1.0 / (4.0 * d.K);
  double qmax = -1e300;
  std::size_t argmax = 0;
  std::size_t above_window = 0;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    CHECK(d.q[i] == d.log_lam1[i] + d.xi_term[i] + d.eta_term[i] +
                        d.exp_term[i]);
    // invert the terms to the derivative values xi' = exp(4 xi)/4
    double xip = 0.25 * std::exp(4.0 * d.xi_term[i]);
    double etp = 0.25 * std::exp(4.0 * d.eta_term[i]);
    CHECK(xip >= xi_lo * (1.0 - 1e-12));  // holds whenever |rho|^2 < 5N^2
    if (xip > xi_hi) ++above_window;
    CHECK(etp >= eta_lo * (1.0 - 1e-12));  // always: |du|^2 <= K - 1
    CHECK(etp <= eta_hi * (1.0 + 1e-12));
    if (d.q[i] > qmax) {
      qmax = d.q[i];
      argmax = d.points[i];
    }
  }
  CHECK(above_window == d.xi_flagged);
  CHECK(d.q_max == qmax);
  CHECK(d.max_point == argmax);

  // larger A grows exp(-A u) pointwise on u <= 0
  QDiagnostics d2 = q_field(prob, u, 2.0);
  REQUIRE(d2.points.size() == d.points.size());
  for (std::size_t i = 0; i < d.points.size(); ++i)
    CHECK(d2.exp_term[i] >= d.exp_term[i]);
}
