#include "run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <span>

#include "artifacts.hpp"
#include "continuity.hpp"

namespace ahs::run {

namespace {

using fields::ScalarField;
using io::Config;
using io::format_g17;

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

struct Built {
  solver::ProblemSpec prob;
  solver::PathControls controls;
};

cone::SymmetricOperator make_operator(const Config& cfg) {
  int n = cfg.grid_cdim;
  if (cfg.operator_kind == "log_sigma") {
    require(cfg.operator_k >= 1 && cfg.operator_k <= n, Status::config_error,
            "operator.k must lie in 1.." + std::to_string(n) +
                " for log_sigma on complex dimension " + std::to_string(n));
    return cone::SymmetricOperator::log_sigma(n, cfg.operator_k);
  }
  if (cfg.operator_kind == "nm1") {
    require(n >= 2, Status::config_error,
            "operator.kind = nm1 needs grid.cdim = 2");
    return cone::SymmetricOperator::nm1(n);
  }
  fail(Status::config_error, "unknown operator.kind '" + cfg.operator_kind +
                                 "' (log_sigma | nm1)");
}

solver::PathControls path_controls(const Config& cfg) {
  require(cfg.path_t_target > 0.0 && cfg.path_t_target <= 1.0,
          Status::config_error, "path.t_target must lie in (0, 1]");
  require(cfg.path_dt_init > 0.0 && cfg.path_dt_min > 0.0 &&
              cfg.path_dt_max >= cfg.path_dt_init,
          Status::config_error,
          "path step sizes must satisfy 0 < dt_init <= dt_max, dt_min > 0");
  require(cfg.path_newton_tol > 0.0, Status::config_error,
          "path.newton_tol must be positive");
  require(cfg.path_newton_max_iters >= 1, Status::config_error,
          "path.newton_max_iters must be at least 1");
  require(cfg.path_krylov_rtol > 0.0 && cfg.path_krylov_restart >= 1 &&
              cfg.path_krylov_cap >= 0,
          Status::config_error, "invalid Krylov controls");
  solver::PathControls ctl;
  ctl.t_target = cfg.path_t_target;
  ctl.dt_init = cfg.path_dt_init;
  ctl.dt_min = cfg.path_dt_min;
  ctl.dt_max = cfg.path_dt_max;
  ctl.newton.tol = cfg.path_newton_tol;
  ctl.newton.max_iters = cfg.path_newton_max_iters;
  ctl.newton.krylov_rtol = cfg.path_krylov_rtol;
  ctl.newton.restart = cfg.path_krylov_restart;
  ctl.newton.krylov_cap = cfg.path_krylov_cap;
  ctl.take_snapshots = cfg.path_take_snapshots;
  ctl.allow_uncertified = cfg.path_allow_uncertified;
  return ctl;
}

// Stationary right-hand side F at the background. Lenient mode marks points
// where the background leaves the cone with NaN instead of failing, so the
// certification scan can reach them and name them as witnesses.
ScalarField h_background(const solver::ProblemSpec& prob, bool lenient) {
  if (!lenient) return solver::h_zero(prob);
  const int n = prob.geometry.n;
  std::vector<double> mus =
      solver::state_eigenvalues(prob, ScalarField(prob.geometry.grid));
  ScalarField out(prob.geometry.grid);
  for (std::size_t p = 0; p < out.v.size(); ++p) {
    double fv = 0.0;
    int bad = 0;
    std::span<const double> mu(mus.data() + p * static_cast<std::size_t>(n),
                               static_cast<std::size_t>(n));
    out.v[p] = cone::try_f_eval(prob.op, mu, fv, bad) ? fv : nan_v;
  }
  return out;
}

ScalarField target_h(const Config& cfg, const solver::ProblemSpec& prob,
                     bool lenient = false) {
  const auto& grid = prob.geometry.grid;
  if (cfg.rhs_mode == "zero") return h_background(prob, lenient);
  if (cfg.rhs_mode == "offset") {
    ScalarField h = h_background(prob, lenient);
    ScalarField f = fields::sample(
        fields::make_scalar(cfg.rhs_field, cfg.grid_cdim, cfg.rhs_amplitude,
                            cfg.rhs_frequency),
        grid);
    for (std::size_t p = 0; p < h.v.size(); ++p) h.v[p] += f.v[p];
    return h;
  }
  if (cfg.rhs_mode == "direct")
    return fields::sample(
        fields::make_scalar(cfg.rhs_field, cfg.grid_cdim, cfg.rhs_amplitude,
                            cfg.rhs_frequency),
        grid);
  if (cfg.rhs_mode == "snapshot") {
    require(!cfg.rhs_snapshot.empty(), Status::config_error,
            "rhs.mode = snapshot needs rhs.snapshot = <path>");
    io::FieldSnapshot snap = io::read_field_snapshot(cfg.rhs_snapshot);
    require(snap.field.grid == grid, Status::config_error,
            "rhs snapshot grid does not match the configured grid");
    return std::move(snap.field);
  }
  fail(Status::config_error, "unknown rhs.mode '" + cfg.rhs_mode +
                                 "' (zero | offset | direct | snapshot)");
}

// Catalog and range mistakes surface as argument_error from the field and
// cone layers; coming from a problem file they are configuration errors.
Built build_problem(const Config& cfg, bool lenient_h = false) {
  try {
    auto grid = fields::PeriodicGrid::cube(cfg.grid_cdim, cfg.grid_size);
    auto geo = fields::build_geometry(
        grid, fields::preset_from_name(cfg.geometry_preset),
        cfg.geometry_amplitude);
    auto bg = solver::assemble_background(
        geo,
        fields::make_background(cfg.background_kind, cfg.grid_cdim,
                                cfg.background_epsilon),
        cfg.background_eta_reduction);
    Built b{solver::ProblemSpec{
                std::move(geo), std::move(bg), make_operator(cfg),
                ScalarField(grid),
                solver::normalization_from_name(cfg.normalization_mode)},
            path_controls(cfg)};
    b.prob.h = target_h(cfg, b.prob, lenient_h);
    return b;
  } catch (const Error& e) {
    if (e.status() == Status::argument_error)
      fail(Status::config_error, e.what());
    throw;
  }
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  require(!ec, Status::io_error,
          "cannot create output directory '" + dir + "': " + ec.message());
}

std::string operator_label(const Config& cfg) {
  if (cfg.operator_kind == "log_sigma")
    return "log_sigma k=" + std::to_string(cfg.operator_k);
  return cfg.operator_kind;
}

double centered_sup_diff(const ScalarField& a, const ScalarField& b) {
  double ma = solver::mean(a), mb = solver::mean(b), s = 0.0;
  for (std::size_t p = 0; p < a.v.size(); ++p)
    s = std::max(s, std::fabs((a.v[p] - ma) - (b.v[p] - mb)));
  return s;
}

struct SolveResult {
  Status status = Status::ok;
  std::string message;
  bool have_report = false;
  solver::PathReport rep;
  double c_fit = nan_v;
};

SolveResult solve_core(const Config& cfg) {
  SolveResult r;
  try {
    Built b = build_problem(cfg);
    r.rep = solver::continuity_solve(b.prob, b.controls);
    r.have_report = true;
    if (b.controls.take_snapshots && !r.rep.rows.empty()) {
      std::vector<monitor::EstimateSnapshot> snaps;
      snaps.reserve(r.rep.rows.size());
      for (const auto& row : r.rep.rows) snaps.push_back(row.snap);
      r.c_fit = monitor::quadratic_bound_fit(snaps).C_fit;
    }
    if (r.rep.reached_target) {
      r.message = "reached t = " + format_g17(r.rep.t_final) + " in " +
                  std::to_string(r.rep.rows.size()) + " accepted steps, c = " +
                  format_g17(r.rep.c);
    } else {
      r.status = Status::path_failure;
      r.message = r.rep.message;
    }
  } catch (const Error& e) {
    r.status = e.status();
    r.message = e.what();
  }
  return r;
}

void add_scalar(RunOutcome& oc, const std::string& name, double v) {
  oc.scalars.emplace_back(name, v);
}

std::vector<std::pair<std::string, std::string>> summary_head(
    const Config& cfg, const char* command, const RunOutcome& oc) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("command", command);
  kv.emplace_back("status", status_name(oc.status));
  kv.emplace_back("message", oc.message);
  kv.emplace_back("grid_size", std::to_string(cfg.grid_size));
  kv.emplace_back("grid_cdim", std::to_string(cfg.grid_cdim));
  kv.emplace_back("preset", cfg.geometry_preset);
  kv.emplace_back("operator", operator_label(cfg));
  kv.emplace_back("seed", std::to_string(cfg.run_seed));
  return kv;
}

void append_scalars(std::vector<std::pair<std::string, std::string>>& kv,
                    const RunOutcome& oc) {
  for (const auto& [name, value] : oc.scalars)
    kv.emplace_back(name, format_g17(value));
}

} // namespace

RunOutcome run_solve(const Config& cfg) {
  RunOutcome oc;
  try {
    SolveResult sr = solve_core(cfg);
    oc.status = sr.status;
    oc.message = sr.message;
    if (!sr.have_report) return oc;  // config-class failure: no artifacts

    const auto& rep = sr.rep;
    oc.columns = {"t", "c", "residual_norm", "newton_iters"};
    const bool snaps = cfg.path_take_snapshots;
    const auto snap_cols = monitor::snapshot_columns();
    if (snaps)
      oc.columns.insert(oc.columns.end(), snap_cols.begin(), snap_cols.end());
    long krylov_total = 0;
    int newton_total = 0;
    for (const auto& row : rep.rows) {
      std::vector<std::string> cells{format_g17(row.t), format_g17(row.c),
                                     format_g17(row.residual_sup),
                                     std::to_string(row.newton_iters)};
      if (snaps)
        for (double v : monitor::snapshot_values(row.snap))
          cells.push_back(format_g17(v));
      oc.rows.push_back(std::move(cells));
      krylov_total += row.krylov_iters;
      newton_total += row.newton_iters;
    }

    ensure_dir(cfg.run_out);
    const std::string dir = cfg.run_out + "/";
    io::write_text(dir + "resolved.ini", io::render_config(cfg));
    io::write_csv(dir + "path.csv", oc.columns, oc.rows);
    if (snaps) {
      std::vector<std::string> ecols{"t"};
      ecols.insert(ecols.end(), snap_cols.begin(), snap_cols.end());
      std::vector<std::vector<std::string>> erows;
      for (const auto& row : rep.rows) {
        std::vector<std::string> cells{format_g17(row.t)};
        for (double v : monitor::snapshot_values(row.snap))
          cells.push_back(format_g17(v));
        erows.push_back(std::move(cells));
      }
      io::write_csv(dir + "estimates.csv", ecols, erows);
    }
    io::write_field_snapshot(dir + "u.snap", rep.u, "u", cfg.geometry_preset);

    add_scalar(oc, "reached_target", rep.reached_target ? 1.0 : 0.0);
    add_scalar(oc, "t_final", rep.t_final);
    add_scalar(oc, "final_c", rep.c);
    add_scalar(oc, "final_residual_sup",
               rep.rows.empty() ? nan_v : rep.rows.back().residual_sup);
    add_scalar(oc, "c_fit", sr.c_fit);
    add_scalar(oc, "rows", static_cast<double>(rep.rows.size()));
    add_scalar(oc, "newton_iters_total", newton_total);
    add_scalar(oc, "krylov_iters_total", static_cast<double>(krylov_total));

    auto kv = summary_head(cfg, "solve", oc);
    append_scalars(kv, oc);
    io::write_summary(dir + "summary.txt", kv);
  } catch (const Error& e) {
    oc.status = e.status();
    oc.message = e.what();
  } catch (const std::exception& e) {
    oc.status = Status::internal_error;
    oc.message = e.what();
  }
  return oc;
}

RunOutcome run_mms(const Config& cfg) {
  RunOutcome oc;
  oc.columns = {"grid", "sup_error", "order"};
  try {
    require(!cfg.mms_sizes.empty(), Status::config_error,
            "mms.sizes is empty");
    solver::MmsMode mode;
    if (cfg.mms_mode == "analytic") {
      mode = solver::MmsMode::analytic;
    } else if (cfg.mms_mode == "discrete") {
      mode = solver::MmsMode::discrete;
    } else {
      fail(Status::config_error, "unknown mms.mode '" + cfg.mms_mode +
                                     "' (analytic | discrete)");
    }
    const auto norm =
        solver::normalization_from_name(cfg.normalization_mode);
    solver::NewtonControls nc = path_controls(cfg).newton;

    double prev_err = nan_v, err_last = nan_v, order_last = nan_v;
    double c_abs_max = 0.0;
    int prev_size = 0;
    for (int size : cfg.mms_sizes) {
      solver::ManufacturedProblem mp = [&] {
        try {
          auto grid = fields::PeriodicGrid::cube(cfg.grid_cdim, size);
          auto geo = fields::build_geometry(
              grid, fields::preset_from_name(cfg.geometry_preset),
              cfg.geometry_amplitude);
          auto bg = solver::assemble_background(
              geo,
              fields::make_background(cfg.background_kind, cfg.grid_cdim,
                                      cfg.background_epsilon),
              cfg.background_eta_reduction);
          return solver::manufactured_problem(
              std::move(geo), std::move(bg), make_operator(cfg),
              fields::make_scalar(cfg.mms_u_star, cfg.grid_cdim,
                                  cfg.mms_amplitude, cfg.mms_frequency),
              mode, norm);
        } catch (const Error& e) {
          if (e.status() == Status::argument_error)
            fail(Status::config_error, e.what());
          throw;
        }
      }();
      solver::NewtonResult nr = solver::newton_solve(
          mp.problem, mp.problem.h,
          ScalarField(mp.problem.geometry.grid), 0.0, nc);
      if (!nr.converged) {
        oc.status = Status::path_failure;
        oc.message = "mms level " + std::to_string(size) +
                     " failed to converge: " + nr.fail_reason;
        break;
      }
      double err = centered_sup_diff(nr.u, mp.u_star);
      c_abs_max = std::max(c_abs_max, std::fabs(nr.c));
      std::string order = "-";
      if (mode == solver::MmsMode::discrete) {
        order = "exact";
      } else if (prev_size > 0 && err > 0.0 && prev_err > 0.0) {
        order_last = std::log(prev_err / err) /
                     std::log(double(size) / double(prev_size));
        order = format_g17(order_last);
      }
      oc.rows.push_back({std::to_string(size), format_g17(err), order});
      prev_err = err;
      err_last = err;
      prev_size = size;
    }
    if (oc.status == Status::ok)
      oc.message =
          "completed " + std::to_string(oc.rows.size()) + " levels";

    add_scalar(oc, "levels", static_cast<double>(oc.rows.size()));
    add_scalar(oc, "error_last", err_last);
    add_scalar(oc, "order_last", order_last);
    add_scalar(oc, "c_abs_max", c_abs_max);

    ensure_dir(cfg.run_out);
    const std::string dir = cfg.run_out + "/";
    io::write_text(dir + "resolved.ini", io::render_config(cfg));
    io::write_csv(dir + "mms.csv", oc.columns, oc.rows);
    auto kv = summary_head(cfg, "mms", oc);
    append_scalars(kv, oc);
    io::write_summary(dir + "summary.txt", kv);
  } catch (const Error& e) {
    oc.status = e.status();
    oc.message = e.what();
  } catch (const std::exception& e) {
    oc.status = Status::internal_error;
    oc.message = e.what();
  }
  return oc;
}

RunOutcome run_check_subsolution(const Config& cfg) {
  RunOutcome oc;
  try {
    // Lenient h: a background that leaves the cone must surface as a
    // non-certification naming the point, not as a build failure.
    Built b = build_problem(cfg, /*lenient_h=*/true);
    ScalarField cand = fields::sample(
        fields::make_scalar(cfg.check_candidate, cfg.grid_cdim,
                            cfg.check_amplitude, cfg.check_frequency),
        b.prob.geometry.grid);
    cone::SubsolutionCertificate cert = solver::certify_problem(b.prob, cand);
    if (!cert.certified && cert.witness_point >= 0 &&
        std::isnan(b.prob.h.v[static_cast<std::size_t>(cert.witness_point)]) &&
        cert.message.find("ray limit") != std::string::npos) {
      // The scan tripped on the NaN placeholder, not on the candidate.
      cert.message = "background eigenvalues leave the operator cone at "
                     "point " +
                     std::to_string(cert.witness_point) +
                     ", so the stationary right-hand side is undefined there";
    }
    if (cert.certified) {
      oc.message = "certified: min_slack = " + format_g17(cert.min_slack) +
                   ", delta = " + format_g17(cert.delta);
    } else {
      oc.status = Status::not_certified;
      oc.message = cert.message;
    }
    add_scalar(oc, "certified", cert.certified ? 1.0 : 0.0);
    add_scalar(oc, "min_slack", cert.min_slack);
    add_scalar(oc, "delta", cert.delta);
    add_scalar(oc, "r_reach", cert.r_reach);
    add_scalar(oc, "witness_point", static_cast<double>(cert.witness_point));
    add_scalar(oc, "witness_index", cert.witness_index);

    ensure_dir(cfg.run_out);
    const std::string dir = cfg.run_out + "/";
    io::write_text(dir + "resolved.ini", io::render_config(cfg));
    auto kv = summary_head(cfg, "check-subsolution", oc);
    kv.emplace_back("candidate", cfg.check_candidate);
    append_scalars(kv, oc);
    io::write_summary(dir + "summary.txt", kv);
  } catch (const Error& e) {
    oc.status = e.status();
    oc.message = e.what();
  } catch (const std::exception& e) {
    oc.status = Status::internal_error;
    oc.message = e.what();
  }
  return oc;
}

RunOutcome run_sweep(const Config& cfg) {
  RunOutcome oc;
  oc.columns = {"parameter", "value", "grid",
                "status",    "c",     "residual_sup",
                "c_fit"};
  try {
    require(!cfg.sweep_values.empty(), Status::config_error,
            "sweep.values is empty");
    std::vector<int> sizes =
        cfg.sweep_sizes.empty() ? std::vector<int>{cfg.grid_size}
                                : cfg.sweep_sizes;
    int ok_runs = 0;
    Status first_bad = Status::ok;
    double fit_min = nan_v, fit_max = nan_v;
    for (double value : cfg.sweep_values) {
      for (int size : sizes) {
        Config sub = cfg;
        io::apply_override(sub, cfg.sweep_parameter, format_g17(value));
        sub.grid_size = size;
        SolveResult sr = solve_core(sub);
        if (sr.status == Status::config_error ||
            sr.status == Status::io_error) {
          // the sweep itself is misconfigured; do not loop over it
          fail(sr.status, "sweep sub-run (value = " + format_g17(value) +
                              ", grid = " + std::to_string(size) +
                              "): " + sr.message);
        }
        double c = sr.have_report ? sr.rep.c : nan_v;
        double res = sr.have_report && !sr.rep.rows.empty()
                         ? sr.rep.rows.back().residual_sup
                         : nan_v;
        if (sr.status == Status::ok) {
          ++ok_runs;
          if (!(sr.c_fit != sr.c_fit)) {  // not nan
            fit_min = fit_min == fit_min ? std::min(fit_min, sr.c_fit)
                                         : sr.c_fit;
            fit_max = fit_max == fit_max ? std::max(fit_max, sr.c_fit)
                                         : sr.c_fit;
          }
        } else if (first_bad == Status::ok) {
          first_bad = sr.status;
        }
        oc.rows.push_back({cfg.sweep_parameter, format_g17(value),
                           std::to_string(size), status_name(sr.status),
                           format_g17(c), format_g17(res),
                           format_g17(sr.c_fit)});
      }
    }
    if (ok_runs == 0) {
      oc.status = first_bad;
      oc.message = "no sweep sub-run succeeded";
    } else {
      oc.message = std::to_string(ok_runs) + " of " +
                   std::to_string(oc.rows.size()) +
                   " sweep sub-runs succeeded";
    }
    add_scalar(oc, "runs", static_cast<double>(oc.rows.size()));
    add_scalar(oc, "ok_runs", ok_runs);
    add_scalar(oc, "c_fit_min", fit_min);
    add_scalar(oc, "c_fit_max", fit_max);

    ensure_dir(cfg.run_out);
    const std::string dir = cfg.run_out + "/";
    io::write_text(dir + "resolved.ini", io::render_config(cfg));
    io::write_csv(dir + "sweep.csv", oc.columns, oc.rows);
    auto kv = summary_head(cfg, "sweep", oc);
    append_scalars(kv, oc);
    io::write_summary(dir + "summary.txt", kv);
  } catch (const Error& e) {
    oc.status = e.status();
    oc.message = e.what();
    oc.rows.clear();
  } catch (const std::exception& e) {
    oc.status = Status::internal_error;
    oc.message = e.what();
  }
  return oc;
}

RunOutcome run_report(const Config& cfg) {
  RunOutcome oc;
  oc.columns = {"A",          "omega_points", "q_max",      "max_point",
                "xi_flagged", "xi_skipped",   "eta_flagged"};
  try {
    const std::string dir = cfg.run_out + "/";
    io::FieldSnapshot usnap;
    std::map<std::string, std::string> summ;
    try {
      usnap = io::read_field_snapshot(dir + "u.snap");
      summ = io::read_summary(dir + "summary.txt");
    } catch (const Error& e) {
      fail(Status::io_error,
           std::string(e.what()) +
               " (run 'solve' with the same output directory first)");
    }
    require(summ.count("final_c") != 0, Status::io_error,
            "'" + dir + "summary.txt' lacks final_c");
    double c = std::strtod(summ.at("final_c").c_str(), nullptr);
    double t = summ.count("t_final") != 0
                   ? std::strtod(summ.at("t_final").c_str(), nullptr)
                   : cfg.path_t_target;

    Built b = build_problem(cfg);
    require(usnap.field.grid == b.prob.geometry.grid, Status::config_error,
            "u.snap grid does not match the configured grid (override "
            "grid.size to the solved size)");
    const ScalarField& u = usnap.field;

    monitor::EstimateSnapshot snap = monitor::take_snapshot(b.prob, u, c, t);
    ensure_dir(cfg.run_out);
    for (double A : cfg.monitor_A) {
      monitor::QDiagnostics qd = monitor::q_field(b.prob, u, A);
      oc.rows.push_back(
          {format_g17(A), std::to_string(qd.points.size()),
           qd.empty ? "nan" : format_g17(qd.q_max),
           qd.empty ? "nan" : std::to_string(qd.max_point),
           std::to_string(qd.xi_flagged), std::to_string(qd.xi_skipped),
           std::to_string(qd.eta_flagged)});
      ScalarField qf(b.prob.geometry.grid);
      std::fill(qf.v.begin(), qf.v.end(), nan_v);
      for (std::size_t i = 0; i < qd.points.size(); ++i)
        qf.v[qd.points[i]] = qd.q[i];
      io::write_field_snapshot(dir + "qfield_A" + format_g17(A) + ".snap", qf,
                               "q_A" + format_g17(A), cfg.geometry_preset);
    }

    ScalarField cand = fields::sample(
        fields::make_scalar(cfg.check_candidate, cfg.grid_cdim,
                            cfg.check_amplitude, cfg.check_frequency),
        b.prob.geometry.grid);
    auto cls =
        monitor::subsolution_dichotomy_probe(b.prob, u, cand, cfg.monitor_theta);
    std::size_t uni = 0, grad = 0, neither = 0;
    for (auto cl : cls) {
      if (cl == monitor::DichotomyCase::UniformCase) ++uni;
      else if (cl == monitor::DichotomyCase::GradientCase) ++grad;
      else ++neither;
    }

    oc.message = "report on the solved state at t = " + format_g17(t) +
                 ": " + std::to_string(cfg.monitor_A.size()) +
                 " comparison fields, dichotomy " + std::to_string(uni) +
                 "/" + std::to_string(grad) + "/" + std::to_string(neither) +
                 " (uniform/gradient/neither)";
    add_scalar(oc, "t", t);
    add_scalar(oc, "c", c);
    add_scalar(oc, "c0_norm", snap.c0_norm);
    add_scalar(oc, "grad_sup", snap.grad_sup);
    add_scalar(oc, "K", snap.K);
    add_scalar(oc, "hessian_sup", snap.hessian_sup);
    add_scalar(oc, "lambda1_max", snap.lambda1_max);
    add_scalar(oc, "f_sum_min", snap.f_sum_min);
    add_scalar(oc, "trace_min", snap.trace_min);
    add_scalar(oc, "theta", cfg.monitor_theta);
    add_scalar(oc, "uniform_points", static_cast<double>(uni));
    add_scalar(oc, "gradient_points", static_cast<double>(grad));
    add_scalar(oc, "neither_points", static_cast<double>(neither));

    io::write_csv(dir + "report.csv", oc.columns, oc.rows);
    auto kv = summary_head(cfg, "report", oc);
    kv.emplace_back("dichotomy_candidate", cfg.check_candidate);
    append_scalars(kv, oc);
    io::write_summary(dir + "report.txt", kv);
  } catch (const Error& e) {
    oc.status = e.status();
    oc.message = e.what();
    oc.rows.clear();
  } catch (const std::exception& e) {
    oc.status = Status::internal_error;
    oc.message = e.what();
  }
  return oc;
}

RunOutcome run_command(const Config& cfg, const std::string& command) {
  if (command == "solve") return run_solve(cfg);
  if (command == "sweep") return run_sweep(cfg);
  if (command == "check-subsolution") return run_check_subsolution(cfg);
  if (command == "mms") return run_mms(cfg);
  if (command == "report") return run_report(cfg);
  RunOutcome oc;
  oc.status = Status::argument_error;
  oc.message = "unknown command '" + command +
               "' (solve | sweep | check-subsolution | mms | report)";
  return oc;
}

double outcome_scalar(const RunOutcome& oc, const std::string& name) {
  for (const auto& [k, v] : oc.scalars)
    if (k == name) return v;
  fail(Status::argument_error, "no scalar named '" + name + "' in outcome");
}

} // namespace ahs::run
