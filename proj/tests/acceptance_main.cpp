// Acceptance gate for the solver laboratory: nine numbered criteria, one
// [PASS]/[FAIL] line each, nonzero exit when any fails. Criteria with a
// runtime budget fail when they exceed it, so this binary doubles as the
// performance contract.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "config.hpp"
#include "continuity.hpp"
#include "run.hpp"
#include "support/oracles.hpp"
#include "support/solver_oracles.hpp"

using namespace ahs;
using cone::SymmetricOperator;
using fields::GeometryPreset;
using fields::PeriodicGrid;
using fields::ScalarField;
using solver::EvalOptions;
using solver::NewtonControls;
using solver::PathControls;
using solver::ProblemSpec;
using solver::StateEval;

namespace {

struct Check {
  int failed = 0;
  int passed = 0;
  std::vector<std::string> messages;
  void operator()(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (messages.size() < 8) messages.push_back(what);
  }
};

std::string g3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

ProblemSpec make_problem(GeometryPreset preset, double preset_amp,
                         SymmetricOperator op, const std::string& bg,
                         double eps, bool eta, int size) {
  auto grid = PeriodicGrid::cube(2, size);
  auto geo = fields::build_geometry(grid, preset, preset_amp);
  auto bgf = solver::assemble_background(
      geo, fields::make_background(bg, 2, eps), eta);
  ProblemSpec prob{std::move(geo), std::move(bgf), op, ScalarField(grid),
                   solver::Normalization::mean_zero};
  prob.h = solver::h_zero(prob);
  return prob;
}

// sup |a - b - mean(a - b)|: both solver and reference fix the additive
// constant by a gauge, so comparisons quotient it out.
double centered_sup_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t p = 0; p < a.v.size(); ++p) m += a.v[p] - b.v[p];
  m /= double(a.v.size());
  double s = 0.0;
  for (std::size_t p = 0; p < a.v.size(); ++p)
    s = std::max(s, std::abs(a.v[p] - b.v[p] - m));
  return s;
}

std::string fresh_dir(const std::string& tag) {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / ("ahs_acceptance_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

// Snapshots of every state any criterion solved; criterion 9 checks the
// positivity invariants over all of them.
std::vector<monitor::EstimateSnapshot> g_solved;

void collect_rows(const solver::PathReport& rep) {
  for (const auto& row : rep.rows) g_solved.push_back(row.snap);
}

// ---------------------------------------------------------------------------
// 1. pointwise operator calculus against independent oracles

void criterion_ops(Check& ck) {
  std::vector<SymmetricOperator> ops;
  for (int n : {2, 3, 4})
    for (int k = 1; k <= n; ++k)
      ops.push_back(SymmetricOperator::log_sigma(n, k));
  ops.push_back(SymmetricOperator::nm1(2));
  ops.push_back(SymmetricOperator::nm1(3));

  std::mt19937_64 rng(42);
  for (const auto& op : ops) {
    auto f = [&](std::span<const double> mu) { return cone::f_eval(op, mu); };
    std::vector<double> g(op.n), prev;
    double f_prev = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      auto mu = oracle::sample_cone_point(rng, op.cone(), 2.5, 0.15);
      double fv = f(mu);

      auto perm = mu;
      std::shuffle(perm.begin(), perm.end(), rng);
      ck(std::abs(f(perm) - fv) <= 1e-12 * std::max(1.0, std::abs(fv)),
         cone::operator_name(op) + ": not symmetric under permutation");

      cone::f_grad(op, mu, g);
      bool positive = true;
      for (double gi : g) positive = positive && gi > 0.0;
      ck(positive, cone::operator_name(op) + ": gradient not positive");

      auto fd = oracle::fd_gradient(f, mu, 1e-5);
      bool close = true;
      for (int i = 0; i < op.n; ++i)
        close = close && std::abs(g[i] - fd[i]) <=
                             1e-6 * std::max(1e-3, std::abs(g[i]));
      ck(close, cone::operator_name(op) + ": gradient disagrees with central "
                                          "differences beyond 1e-6");

      if (!prev.empty()) {
        std::vector<double> mid(op.n);
        for (int i = 0; i < op.n; ++i) mid[i] = 0.5 * (mu[i] + prev[i]);
        double lhs = f(mid), rhs = 0.5 * (fv + f_prev);
        ck(lhs - rhs >= -1e-12 * std::max(1.0, std::abs(rhs)),
           cone::operator_name(op) + ": midpoint concavity violated");
      }
      prev = mu;
      f_prev = fv;
    }
  }

  std::uniform_real_distribution<double> box(-2.0, 2.0);
  for (int n = 1; n <= 6; ++n) {
    std::vector<double> mu(n), abs_mu(n), s(n + 1);
    for (int trial = 0; trial < 200; ++trial) {
      for (int i = 0; i < n; ++i) {
        mu[i] = box(rng);
        abs_mu[i] = std::abs(mu[i]);
      }
      cone::sigma_all(mu, s);
      for (int k = 0; k <= n; ++k) {
        double scale = std::max(1.0, oracle::sigma_subset(abs_mu, k));
        ck(std::abs(s[k] - oracle::sigma_subset(mu, k)) <= 1e-12 * scale,
           "sigma_" + std::to_string(k) + " off subset oracle at n = " +
               std::to_string(n));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 2. pencil eigenvalues vs the characteristic-polynomial oracle

pencil::CMat to_cmat(const Eigen::MatrixXcd& m) {
  pencil::CMat out(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) out(i, j) = m(i, j);
  return out;
}

void criterion_pencil(Check& ck) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 4;
    Eigen::MatrixXcd chi = oracle::random_hpd(rng, n);
    Eigen::MatrixXcd gt = oracle::random_hermitian(rng, n);
    auto sd = pencil::pencil_eigen({to_cmat(chi), to_cmat(gt)});
    auto mu_oracle = oracle::pencil_eigen_charpoly(chi, gt);
    for (int j = 0; j < n; ++j) {
      ck(std::abs(sd.mu[j] - mu_oracle[j]) <=
             1e-9 * std::max(1.0, std::abs(mu_oracle[j])),
         "pencil eigenvalue off the charpoly oracle at n = " +
             std::to_string(n));
      if (j + 1 < n)
        ck(sd.mu[j] >= sd.mu[j + 1], "pencil eigenvalues not sorted");
    }
  }

  // prescribed positive spectra: exact recovery plus the coefficient
  // ordering f_1 <= ... <= f_n of the sorted eigenvalues
  std::uniform_real_distribution<double> pos(0.2, 3.0);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + i % 3;
    std::vector<double> mu(n);
    for (auto& v : mu) v = pos(rng);
    std::sort(mu.begin(), mu.end(), std::greater<>());
    Eigen::MatrixXcd chi, gt;
    oracle::random_pencil_with_spectrum(rng, mu, chi, gt);
    auto sd = pencil::pencil_eigen({to_cmat(chi), to_cmat(gt)});
    for (int j = 0; j < n; ++j)
      ck(std::abs(sd.mu[j] - mu[j]) <= 1e-9 * std::max(1.0, mu[j]),
         "pencil misses a prescribed eigenvalue");

    std::vector<SymmetricOperator> ops{SymmetricOperator::log_sigma(n, n),
                                       SymmetricOperator::log_sigma(n, n - 1),
                                       SymmetricOperator::nm1(n)};
    std::vector<double> g(n), mu_lib(n);
    for (int j = 0; j < n; ++j) mu_lib[j] = sd.mu[j];
    for (const auto& op : ops) {
      if (!cone::in_cone(op.cone(), mu_lib)) continue;
      cone::f_grad(op, mu_lib, g);
      for (int j = 0; j + 1 < n; ++j)
        ck(g[j] <= g[j + 1] * (1.0 + 1e-12) + 1e-15,
           cone::operator_name(op) +
               ": gradient coefficients not ascending on sorted eigenvalues");
    }
  }
}

// ---------------------------------------------------------------------------
// 3. the linearization is the exact derivative of the discrete residual

void criterion_linearization(Check& ck) {
  struct Combo {
    GeometryPreset preset;
    double amp;
    SymmetricOperator op;
  };
  const Combo combos[] = {
      {GeometryPreset::flat_standard, 0.0, SymmetricOperator::log_sigma(2, 2)},
      {GeometryPreset::flat_standard, 0.0, SymmetricOperator::nm1(2)},
      {GeometryPreset::perturbed_j, 0.05, SymmetricOperator::log_sigma(2, 2)},
      {GeometryPreset::perturbed_j, 0.05, SymmetricOperator::nm1(2)},
  };
  std::mt19937_64 rng(20250819);
  const double s = 1e-6;
  for (const auto& cb : combos) {
    auto prob =
        make_problem(cb.preset, cb.amp, cb.op, "identity", 0.0, false, 8);
    for (int trial = 0; trial < 5; ++trial) {
      ScalarField u =
          oracle::random_trig_field(prob.geometry.grid, rng, 3e-4, 4);
      double c = std::uniform_real_distribution<double>(-0.5, 0.5)(rng);
      StateEval ev = evaluate(prob, prob.h, u, c, EvalOptions{true, false});
      ck(ev.admissible, "random probe state inadmissible");
      if (!ev.admissible) continue;

      ScalarField psi =
          oracle::random_trig_field(prob.geometry.grid, rng, 8e-4, 3);
      double c_dot = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
      ScalarField lin;
      solver::linearized_apply(prob, ev, psi, c_dot, lin);

      ScalarField up = u;
      for (std::size_t p = 0; p < up.v.size(); ++p) up.v[p] += s * psi.v[p];
      StateEval ep = evaluate(prob, prob.h, up, c + s * c_dot, EvalOptions{});
      ck(ep.admissible, "displaced probe state inadmissible");
      if (!ep.admissible) continue;

      double num = 0.0, den = 0.0;
      for (std::size_t p = 0; p < up.v.size(); ++p) {
        double fd = (ep.residual.v[p] - ev.residual.v[p]) / s;
        num = std::max(num, std::abs(fd - lin.v[p]));
        den = std::max(den, std::abs(lin.v[p]));
      }
      ck(num / den < 1e-5,
         "linearization off directional differences: rel = " + g3(num / den));

      // constants are pure gauge: the linearization annihilates them exactly
      ScalarField ones(prob.geometry.grid);
      std::fill(ones.v.begin(), ones.v.end(), 1.0);
      solver::linearized_apply(prob, ev, ones, 0.0, lin);
      bool exact = true;
      for (double v : lin.v) exact = exact && v == 0.0;
      ck(exact, "constant direction not annihilated exactly");
    }
  }
}

// ---------------------------------------------------------------------------
// 4. manufactured-solution convergence for the n = 2 determinant case

void criterion_mms(Check& ck) {
  auto study = [&](GeometryPreset preset, double preset_amp, double& order,
                   double& err_fine, double& c_fine) {
    double errs[2] = {0.0, 0.0};
    int idx = 0;
    for (int size : {8, 16}) {
      auto grid = PeriodicGrid::cube(2, size);
      auto geo = fields::build_geometry(grid, preset, preset_amp);
      auto bg = solver::assemble_background(
          geo, fields::make_background("identity", 2, 0.0), false);
      auto mp = solver::manufactured_problem(
          std::move(geo), std::move(bg), SymmetricOperator::log_sigma(2, 2),
          fields::make_scalar("cos13", 2, 0.01, 1), solver::MmsMode::analytic,
          solver::Normalization::mean_zero);
      auto nr = solver::newton_solve(mp.problem, mp.problem.h,
                                     ScalarField(grid), 0.0, NewtonControls{});
      ck(nr.converged, "manufactured solve failed at size " +
                            std::to_string(size) + ": " + nr.fail_reason);
      if (!nr.converged) return;
      errs[idx++] = centered_sup_diff(nr.u, mp.u_star);
      c_fine = std::abs(nr.c);
      g_solved.push_back(monitor::take_snapshot(mp.problem, nr.u, nr.c, 1.0));
    }
    err_fine = errs[1];
    order = std::log(errs[0] / errs[1]) / std::log(2.0);
  };

  double order = 0.0, err16 = 0.0, c16 = 0.0;
  study(GeometryPreset::flat_standard, 0.0, order, err16, c16);
  ck(order >= 1.5 && order <= 2.5,
     "flat preset: observed order " + g3(order) + " outside [1.5, 2.5]");
  ck(c16 <= 10.0 * err16, "flat preset: recovered constant " + g3(c16) +
                              " exceeds 10x the finest error " + g3(err16));

  double order_pj = 0.0, err_pj = 0.0, c_pj = 0.0;
  study(GeometryPreset::perturbed_j, 0.05, order_pj, err_pj, c_pj);
  ck(order_pj >= 1.5, "perturbed preset: observed order " + g3(order_pj) +
                          " below 1.5");
}

// ---------------------------------------------------------------------------
// 5. the sigma_1 equation is linear: cross-check against plain CG

void criterion_sigma1(Check& ck) {
  auto prob = make_problem(GeometryPreset::flat_standard, 0.0,
                           SymmetricOperator::log_sigma(2, 1), "identity",
                           0.0, false, 12);
  ScalarField off = fields::sample(
      fields::make_scalar("trig_mix", 2, 0.5, 1), prob.geometry.grid);
  for (std::size_t p = 0; p < prob.h.v.size(); ++p) prob.h.v[p] += off.v[p];

  auto rep = solver::continuity_solve(prob, PathControls{});
  ck(rep.reached_target, "path did not reach t = 1: " + rep.message);
  if (!rep.reached_target) return;
  collect_rows(rep);

  auto lin = oracle::solve_sigma1_flat(prob, 1e-13);
  double du = centered_sup_diff(rep.u, lin.u);
  double dc = std::abs(rep.c - lin.c);
  ck(du < 1e-8, "solution differs from the direct linear solve by " + g3(du));
  ck(dc < 1e-8, "constant differs from the direct linear solve by " + g3(dc));
}

// ---------------------------------------------------------------------------
// 6. continuity-path contract: target reached, constant bound, admissibility

void criterion_path(Check& ck) {
  auto prob = make_problem(GeometryPreset::flat_standard, 0.0,
                           SymmetricOperator::log_sigma(2, 2), "identity",
                           0.0, false, 12);
  ScalarField off = fields::sample(
      fields::make_scalar("trig_mix", 2, 1.0, 1), prob.geometry.grid);
  double sup_off = solver::sup_abs(off);
  for (std::size_t p = 0; p < prob.h.v.size(); ++p) prob.h.v[p] += off.v[p];

  auto rep = solver::continuity_solve(prob, PathControls{});
  ck(rep.reached_target, "path did not reach t = 1: " + rep.message);
  if (!rep.reached_target) return;
  collect_rows(rep);

  for (const auto& row : rep.rows) {
    ck(std::abs(row.c) <= row.t * sup_off + 1e-8,
       "constant bound violated at t = " + g3(row.t) + ": |c| = " +
           g3(std::abs(row.c)) + " > " + g3(row.t * sup_off));
    ck(row.snap.f_sum_min > 0.0 && row.snap.trace_min > 0.0,
       "accepted state at t = " + g3(row.t) + " lost positivity");
  }

  // final state admissible at every grid point, checked from the cone side
  auto mus = solver::state_eigenvalues(prob, rep.u);
  auto cd = prob.op.cone();
  const int n = prob.geometry.n;
  bool all_in = true;
  for (std::size_t p = 0; p < prob.geometry.grid.points(); ++p) {
    std::span<const double> mu(mus.data() + p * n, std::size_t(n));
    all_in = all_in && cone::in_cone(cd, mu);
  }
  ck(all_in, "final state leaves the cone somewhere");
}

// ---------------------------------------------------------------------------
// 7. two admissible starts reach the same normalized solution

void criterion_uniqueness(Check& ck) {
  auto prob = make_problem(GeometryPreset::flat_standard, 0.0,
                           SymmetricOperator::log_sigma(2, 2), "identity",
                           0.0, false, 8);
  ScalarField off = fields::sample(
      fields::make_scalar("trig_mix", 2, 0.5, 1), prob.geometry.grid);
  for (std::size_t p = 0; p < prob.h.v.size(); ++p) prob.h.v[p] += off.v[p];

  auto a = solver::newton_solve(prob, prob.h,
                                ScalarField(prob.geometry.grid), 0.0,
                                NewtonControls{});
  ck(a.converged, "start A did not converge: " + a.fail_reason);

  // second start: a random admissible state, shrunk until it is inside the
  // cone (trig modes reach frequency 2, so the Hessian is ~(4 pi)^2 x amp)
  std::mt19937_64 rng(99);
  ScalarField u0;
  bool found = false;
  for (double amp = 0.02; amp > 1e-7; amp *= 0.5) {
    u0 = oracle::random_trig_field(prob.geometry.grid, rng, amp, 3);
    StateEval ev = evaluate(prob, prob.h, u0, 0.0, EvalOptions{});
    if (ev.admissible) {
      found = true;
      break;
    }
  }
  ck(found, "no admissible second start found");
  if (!found) return;
  auto b = solver::newton_solve(prob, prob.h, u0, -0.2, NewtonControls{});
  ck(b.converged, "start B did not converge: " + b.fail_reason);
  if (!a.converged || !b.converged) return;

  g_solved.push_back(monitor::take_snapshot(prob, a.u, a.c, 1.0));
  g_solved.push_back(monitor::take_snapshot(prob, b.u, b.c, 1.0));
  double du = centered_sup_diff(a.u, b.u);
  double dc = std::abs(a.c - b.c);
  ck(du < 1e-7, "normalized solutions differ by " + g3(du));
  ck(dc < 1e-7, "constants differ by " + g3(dc));
}

// ---------------------------------------------------------------------------
// 8. subsolution certification over the background catalog

void criterion_certification(Check& ck) {
  struct Case {
    const char* kind;
    double eps;
    const char* op;
    int k;
    bool eta;
  };
  const Case cases[] = {
      {"identity", 0.0, "log_sigma", 1, false},
      {"identity", 0.0, "log_sigma", 2, false},
      {"identity", 0.0, "nm1", 2, false},
      {"diag_cos", 0.3, "log_sigma", 1, false},
      {"diag_cos", 0.3, "log_sigma", 2, false},
      {"diag_cos", 0.3, "nm1", 2, false},
      {"herm_cos", 0.3, "log_sigma", 1, false},
      {"herm_cos", 0.3, "log_sigma", 2, false},
      {"herm_cos", 0.3, "nm1", 2, false},
      {"herm_cos", 0.3, "nm1", 2, true},  // positive form, reduced blocks
  };
  int i = 0;
  for (const auto& cs : cases) {
    io::Config cfg;
    cfg.background_kind = cs.kind;
    cfg.background_epsilon = cs.eps;
    cfg.background_eta_reduction = cs.eta;
    cfg.operator_kind = cs.op;
    cfg.operator_k = cs.k;
    cfg.run_out = fresh_dir("cert" + std::to_string(i++));
    auto oc = run::run_check_subsolution(cfg);
    ck(oc.status == Status::ok &&
           run::outcome_scalar(oc, "certified") == 1.0,
       std::string("zero candidate not certified for ") + cs.kind + " / " +
           cs.op + " k=" + std::to_string(cs.k) + ": " + oc.message);
  }

  io::Config bad;
  bad.background_kind = "bad_point";
  bad.run_out = fresh_dir("cert_bad");
  auto oc = run::run_check_subsolution(bad);
  ck(oc.status == Status::not_certified, "violating background not rejected");

  auto grid = PeriodicGrid::cube(2, 8);
  auto cell = fields::HermitianBackground::bad_cell(grid);
  auto str = grid.strides();
  long long flat = 0;
  for (int a = 0; a < grid.axes(); ++a) flat += cell[a] * str[a];
  ck(run::outcome_scalar(oc, "witness_point") == double(flat),
     "witness is not the constructed violation point");
  ck(oc.message.find("point " + std::to_string(flat)) != std::string::npos,
     "rejection message does not name the violation point");
}

// ---------------------------------------------------------------------------
// 9. estimate monitors: positivity everywhere, stable quadratic-bound fit

void criterion_monitors(Check& ck) {
  const double amps[] = {0.2, 0.4, 0.6, 0.8, 1.0};
  double fit_min = std::numeric_limits<double>::infinity();
  double fit_max = 0.0;
  for (int size : {8, 12, 16}) {
    std::vector<monitor::EstimateSnapshot> finals;
    for (double amp : amps) {
      auto prob = make_problem(GeometryPreset::flat_standard, 0.0,
                               SymmetricOperator::log_sigma(2, 2), "identity",
                               0.0, false, size);
      ScalarField off = fields::sample(
          fields::make_scalar("trig_mix", 2, amp, 1), prob.geometry.grid);
      for (std::size_t p = 0; p < prob.h.v.size(); ++p)
        prob.h.v[p] += off.v[p];
      auto rep = solver::continuity_solve(prob, PathControls{});
      ck(rep.reached_target,
         "family solve failed at size " + std::to_string(size) +
             ", amplitude " + g3(amp) + ": " + rep.message);
      if (!rep.reached_target) return;
      collect_rows(rep);
      finals.push_back(rep.rows.back().snap);
    }
    auto fit = monitor::quadratic_bound_fit(finals);
    ck(std::isfinite(fit.C_fit) && fit.C_fit > 0.0,
       "quadratic bound fit not finite at size " + std::to_string(size));
    fit_min = std::min(fit_min, fit.C_fit);
    fit_max = std::max(fit_max, fit.C_fit);
  }
  ck(fit_max <= 2.0 * fit_min,
     "quadratic bound fit unstable across grids: " + g3(fit_min) + " .. " +
         g3(fit_max));

  // positivity of the trace and of the ellipticity weight on every state
  // solved anywhere in this suite
  ck(!g_solved.empty(), "no solved states were collected");
  bool positive = true;
  for (const auto& s : g_solved)
    positive = positive && s.trace_min > 0.0 && s.f_sum_min > 0.0;
  ck(positive, "a solved state lost trace or ellipticity positivity");
}

struct Criterion {
  int id;
  const char* label;
  double budget_s;  // 0: no runtime budget
  void (*body)(Check&);
};

} // namespace

int main() {
  const Criterion criteria[] = {
      {1,
       "operator calculus: symmetry, monotonicity, concavity, gradients, "
       "subset-enumeration oracle",
       10.0, criterion_ops},
      {2,
       "pencil eigenvalues match the characteristic-polynomial oracle, "
       "coefficients ordered",
       5.0, criterion_pencil},
      {3,
       "linearization matches directional finite differences, constants "
       "annihilated",
       120.0, criterion_linearization},
      {4,
       "manufactured convergence: flat order in [1.5, 2.5], perturbed "
       "order >= 1.5, constant recovered",
       900.0, criterion_mms},
      {5, "sigma_1 solve matches an independent direct linear solve", 120.0,
       criterion_sigma1},
      {6, "continuity path reaches the target under the constant bound, "
          "states stay admissible",
       600.0, criterion_path},
      {7, "two admissible starts give the same normalized solution", 0.0,
       criterion_uniqueness},
      {8, "zero candidate certified on the catalog, violating background "
          "rejected with its witness",
       0.0, criterion_certification},
      {9, "monitor positivity on all solved states, quadratic-bound fit "
          "stable across grids",
       0.0, criterion_monitors},
  };

  int failed_criteria = 0;
  for (const auto& cr : criteria) {
    Check ck;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(ck);
    } catch (const std::exception& e) {
      ck(false, std::string("unhandled exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool over_budget = cr.budget_s > 0.0 && elapsed > cr.budget_s;
    bool pass = ck.failed == 0 && !over_budget;
    if (!pass) ++failed_criteria;

    std::string timing = g3(elapsed) + " s";
    if (cr.budget_s > 0.0) timing += ", budget " + g3(cr.budget_s) + " s";
    std::printf("[%s] %d. %s (%s)\n", pass ? "PASS" : "FAIL", cr.id, cr.label,
                timing.c_str());
    if (over_budget) std::printf("       over budget\n");
    for (const auto& m : ck.messages) std::printf("       %s\n", m.c_str());
    if (ck.failed > int(ck.messages.size()))
      std::printf("       ... and %d more failed checks\n",
                  ck.failed - int(ck.messages.size()));
    std::fflush(stdout);
  }

  std::printf("%d of 9 criteria passed\n", 9 - failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
