#pragma once

#include <array>
#include <span>
#include <string>

#include "errors.hpp"

namespace ahs::cone {

/// Calculus of symmetric operators f(mu) on Garding cones.
///
/// Two operator families are supported:
///   * log_sigma_k : f = log sigma_k on Gamma_k = { sigma_1,...,sigma_k > 0 }
///   * nm1_ma      : f = log sigma_n(T(mu)) on T^{-1}(Gamma_n), where
///                   T(mu)_k = (1/(n-1)) sum_{i != k} mu_i
///
/// Both are symmetric, concave, strictly increasing in each eigenvalue on
/// their cones, and blow up along every coordinate ray (ray limit +inf).

inline constexpr int max_dim = 6;

/// Divided-difference quotients switch to the analytic limit when
/// |mu_i - mu_j| < tie_rel_tol * (1 + |mu_i|).
inline constexpr double tie_rel_tol = 1e-8;

enum class OperatorKind { log_sigma_k, nm1_ma };
enum class ConeKind { gamma_k, pullback_by_t };

struct ConeDescriptor {
  ConeKind kind;
  int n;
  int k;  // gamma_k level; n for pullback_by_t
};

struct SymmetricOperator {
  OperatorKind kind;
  int n;
  int k;  // log_sigma_k level; n for nm1_ma

  ConeDescriptor cone() const;
  static SymmetricOperator log_sigma(int n, int k);
  static SymmetricOperator nm1(int n);  // requires n >= 2
};

/// sigma_j(mu) for j = 0..mu.size() via the one-pass recurrence with
/// compensated accumulation. out must have size mu.size()+1.
void sigma_all(std::span<const double> mu, std::span<double> out);

double sigma(std::span<const double> mu, int k);

/// T(mu)_k = (1/(n-1)) sum_{i != k} mu_i (fixes the all-ones vector).
void t_map(std::span<const double> mu, std::span<double> out);

/// Smallest defining inequality: min over sigma_1..sigma_k (gamma_k) or
/// min over T(mu)_k (pullback). Membership in the open cone is margin > 0;
/// boundary points are not members.
double cone_margin(const ConeDescriptor& cone, std::span<const double> mu);
bool in_cone(const ConeDescriptor& cone, std::span<const double> mu);

/// f(mu). Non-throwing variant reports the first failing defining
/// inequality (1-based: sigma_i or T_i) through bad_index.
bool try_f_eval(const SymmetricOperator& op, std::span<const double> mu,
                double& out, int& bad_index);
double f_eval(const SymmetricOperator& op, std::span<const double> mu);

/// Gradient f_i = df/dmu_i; strictly positive on the cone. out size n.
void f_grad(const SymmetricOperator& op, std::span<const double> mu,
            std::span<double> out);

/// Hessian f_ij, row-major n*n. Negative semidefinite (f concave).
void f_hess(const SymmetricOperator& op, std::span<const double> mu,
            std::span<double> out);

/// First- and second-derivative data evaluated at a sorted eigenvalue
/// vector; everything needed to assemble the second derivative of the
/// induced matrix operator.
struct PairCoefficients {
  int n = 0;
  std::array<double, max_dim> grad{};                 // f_i
  std::array<double, max_dim * max_dim> hess{};       // f_ij (row-major)
  std::array<double, max_dim * max_dim> quotient{};   // (f_i-f_j)/(mu_i-mu_j), i != j
  double q(int i, int j) const { return quotient[i * n + j]; }
  double h(int i, int j) const { return hess[i * n + j]; }
};

/// Requires mu sorted descending (mu_1 >= ... >= mu_n). Off-diagonal
/// divided differences use the analytic limit f_ii - f_ij within the tie
/// tolerance. For sorted input the quotients are <= 0 (concavity plus
/// symmetry make the gradient anti-monotone).
PairCoefficients pair_coefficients(const SymmetricOperator& op,
                                   std::span<const double> mu);

/// lim_{t->+inf} f(mu + t e_j) for mu in the cone. Analytically +inf for
/// both operator families: d sigma_k / d mu_j = sigma_{k-1}(mu minus j) > 0
/// on Gamma_k, and all but one T-coordinate grow linearly.
double ray_limit(const SymmetricOperator& op, std::span<const double> mu, int j);

/// Pointwise certificate data for a candidate subsolution eigenvalue
/// vector against a right-hand-side value h.
struct PointCheck {
  double cone_distance;  // largest s with mu - s*ones in the open cone (bisection)
  double min_slack;      // min_j (ray limit - h); +inf for the in-scope operators
  double r_reach;        // max_j |mu + t_j e_j|, t_j the ray/level crossing (clamped level)
};

/// Throws Status::not_certified if mu is outside the cone or some ray
/// slack is non-positive. The crossing level is clamped to f(mu)+40 so
/// absurdly large h cannot overflow the diagnostic.
PointCheck certify_point(const SymmetricOperator& op, std::span<const double> mu,
                         double h);

/// Aggregated certificate over a field of per-point eigenvalue vectors
/// (the candidate subsolution's mu(x)) against a right-hand-side field.
struct SubsolutionCertificate {
  bool certified = false;
  double delta = 0.0;      // half the minimum cone distance over points
  double min_slack = 0.0;  // min over (point, ray) of ray limit minus h
  double r_reach = 0.0;    // max over points of the level-crossing radius
  std::ptrdiff_t witness_point = -1;  // flat index of the failing point
  int witness_index = 0;              // 1-based defining-inequality index
  std::string message;                // empty when certified
};

/// Certifies iff every point is in the cone and every ray slack is
/// positive. mu_field is npoints x n row-major; h_field has npoints
/// entries. Never throws on data that merely fails the criterion; the
/// verdict and witness are in the returned struct.
SubsolutionCertificate check_c_subsolution(const SymmetricOperator& op,
                                           std::span<const double> mu_field,
                                           std::span<const double> h_field);

std::string operator_name(const SymmetricOperator& op);

} // namespace ahs::cone
