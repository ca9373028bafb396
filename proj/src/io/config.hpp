#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace ahs::io {

/// Every key a problem file or a command-line override may set, with its
/// default. Files and overrides go through the same schema, so both reject
/// unknown keys and ill-typed values with config_error naming the key.
///
/// Problem files are annotated text: [section] headers, key = value lines,
/// # or ; comments. Dotted keys ("section.key") address the same fields from
/// overrides. Lists are comma-separated.
struct Config {
  // [grid]
  int grid_size = 8;
  int grid_cdim = 2;

  // [geometry]
  std::string geometry_preset = "flat_standard";  // flat_standard | perturbed_j
  double geometry_amplitude = 0.0;

  // [background]
  std::string background_kind = "identity";
  double background_epsilon = 0.0;
  bool background_eta_reduction = false;

  // [operator]
  std::string operator_kind = "log_sigma";  // log_sigma | nm1
  int operator_k = 2;

  // [rhs]  target h: h_zero, h_zero + catalog field, catalog field alone,
  //        or a field snapshot file
  std::string rhs_mode = "zero";  // zero | offset | direct | snapshot
  std::string rhs_field = "trig_mix";
  double rhs_amplitude = 0.0;
  int rhs_frequency = 1;
  std::string rhs_snapshot;

  // [normalization]
  std::string normalization_mode = "mean_zero";  // mean_zero | sup_zero

  // [path]
  double path_t_target = 1.0;
  double path_dt_init = 0.1;
  double path_dt_min = 1e-4;
  double path_dt_max = 0.5;
  double path_newton_tol = 1e-10;
  int path_newton_max_iters = 30;
  double path_krylov_rtol = 1e-10;
  int path_krylov_restart = 150;
  int path_krylov_cap = 0;  // 0: ceil(10 sqrt(points))
  bool path_take_snapshots = true;
  bool path_allow_uncertified = false;

  // [mms]  manufactured-solution study
  std::string mms_u_star = "cos13";
  double mms_amplitude = 0.02;
  int mms_frequency = 1;
  std::string mms_mode = "analytic";  // analytic | discrete
  std::vector<int> mms_sizes{8, 16};

  // [monitor]
  std::vector<double> monitor_A{1.0};
  double monitor_theta = 0.01;

  // [check]  candidate subsolution for check-subsolution
  std::string check_candidate = "zero";
  double check_amplitude = 0.0;
  int check_frequency = 1;

  // [sweep]  one dotted parameter over a value list, per grid size
  std::string sweep_parameter = "rhs.amplitude";
  std::vector<double> sweep_values;
  std::vector<int> sweep_sizes;

  // [run]
  long long run_seed = 1;
  std::string run_out = "out";
};

/// Parse problem-file text. Throws config_error with the line number and
/// key on any malformed line, unknown key, or ill-typed value.
Config parse_config(const std::string& text);

/// Read and parse a problem file; io_error if it cannot be read.
Config load_config(const std::string& path);

/// Apply one dotted-key override, e.g. ("path.newton_tol", "1e-8").
/// Same schema checks as file parsing.
void apply_override(Config& cfg, const std::string& key,
                    const std::string& value);

/// All dotted keys, sorted; one schema entry each.
std::vector<std::string> config_keys();

/// Canonical text form; parse_config(render_config(c)) reproduces c and the
/// rendering is byte-stable, so it doubles as the resolved-config artifact.
std::string render_config(const Config& cfg);

/// %.17g rendering used by every artifact writer (round-trips doubles).
std::string format_g17(double v);

} // namespace ahs::io
