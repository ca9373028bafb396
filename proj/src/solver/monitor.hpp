#pragma once

#include <span>
#include <vector>

#include "problem.hpp"

namespace ahs::monitor {

using fields::ScalarField;
using solver::ProblemSpec;

/// Scalar health indicators of one solver state, the rows of the path
/// diagnostics. All norms are discrete surrogates: grad/hessian sups use
/// centered differences, hessian_sup the Frobenius norm.
struct EstimateSnapshot {
  double t_value = 0.0;
  double c_value = 0.0;
  double c0_norm = 0.0;     // sup |u|
  double grad_sup = 0.0;    // sup |du|
  double K = 1.0;           // grad_sup^2 + 1
  double hessian_sup = 0.0; // sup Frobenius norm of the real Hessian
  double lambda1_max = 0.0; // max over points of the largest Hessian eigenvalue
  double f_sum_min = 0.0;   // min over points of sum_i f_i (NaN if a point
                            // leaves the cone)
  double trace_min = 0.0;   // min over points of sum_i mu_i
};

EstimateSnapshot take_snapshot(const ProblemSpec& prob, const ScalarField& u,
                               double c, double t);

/// Smallest C with hessian_sup <= C * K over the given snapshots, i.e. the
/// largest ratio; a measurement of the quadratic gradient-to-Hessian bound,
/// not a proof. worst_ratio reports the attained maximum (equal to C_fit by
/// construction; kept separate so consumers need not rederive it).
struct QuadraticBoundFit {
  double C_fit = 0.0;
  double worst_ratio = 0.0;
};
QuadraticBoundFit quadratic_bound_fit(std::span<const EstimateSnapshot> snaps);

/// Pointwise classification of the subsolution pairing dichotomy at
/// threshold theta, in the eigenframe of the solved state A:
///   UniformCase   min_i f_i(A) > theta * sum_i f_i(A)
///   GradientCase  sum_i f_i(A) (B_ii - mu_i(A)) > theta * sum_i f_i(A)
/// checked in that order (theta = 0 must classify every point uniform,
/// since every f_i is positive on the cone).
enum class DichotomyCase { UniformCase, GradientCase, Neither };

std::vector<DichotomyCase> subsolution_dichotomy_probe(
    const ProblemSpec& prob, const ScalarField& u,
    const ScalarField& u_underline, double theta);

/// Pointwise decomposition of the comparison quantity
///   Q = log lambda_1 + xi(|rho|^2) + eta(|du|^2) + exp(-A u)
/// on Omega = {lambda_1 > 0}, with N = hessian_sup + 1, rho = Hess u + N I,
/// xi(s) = -log(5 N^2 - s)/4 and eta(s) = -log(2 K - s)/4. The derivative
/// windows xi' in [1/(20 N^2), 1/(4 N^2)] and eta' in [1/(8K), 1/(4K)]
/// translate to argument windows s <= 4 N^2 and s <= K; points beyond them
/// are flagged, and points where xi's log argument is nonpositive
/// (s >= 5 N^2) are skipped entirely.
struct QDiagnostics {
  bool empty = true;
  double A = 0.0;
  double N = 1.0;
  double K = 1.0;
  std::vector<std::size_t> points;  // flat indices of Omega, ascending
  std::vector<double> log_lam1;
  std::vector<double> xi_term;
  std::vector<double> eta_term;
  std::vector<double> exp_term;
  std::vector<double> q;
  std::size_t max_point = 0;  // flat index attaining q_max
  double q_max = 0.0;
  std::size_t xi_flagged = 0;   // |rho|^2 in (4N^2, 5N^2)
  std::size_t xi_skipped = 0;   // |rho|^2 >= 5N^2, point dropped
  std::size_t eta_flagged = 0;  // |du|^2 > K (cannot occur; counted anyway)
};

QDiagnostics q_field(const ProblemSpec& prob, const ScalarField& u, double A);

/// Column labels and values for appending a snapshot to a CSV row, in a
/// fixed order shared by all report writers.
std::vector<std::string> snapshot_columns();
std::vector<double> snapshot_values(const EstimateSnapshot& s);

} // namespace ahs::monitor
