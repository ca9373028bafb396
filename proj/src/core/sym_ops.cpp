#include "sym_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ahs::cone {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void check_dim(int n) {
  require(n >= 1 && n <= max_dim, Status::argument_error,
          "eigenvalue dimension must lie in [1," + std::to_string(max_dim) +
              "], got " + std::to_string(n));
}

// Neumaier compensated accumulation: (sum + comp) += t.
inline void comp_add(double& sum, double& comp, double t) {
  double s = sum + t;
  if (std::abs(sum) >= std::abs(t))
    comp += (sum - s) + t;
  else
    comp += (t - s) + sum;
  sum = s;
}

// e_j(mu) for j = 0..n into out. Downward inner loop so each slot sees the
// previous row; compensation is carried per slot and folded in at the end.
void sigma_all_impl(const double* mu, int n, double* out) {
  double e[max_dim + 1] = {0};
  double c[max_dim + 1] = {0};
  e[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = std::min(i + 1, n); j >= 1; --j) {
      comp_add(e[j], c[j], mu[i] * e[j - 1]);
      comp_add(e[j], c[j], mu[i] * c[j - 1]);
    }
  }
  for (int j = 0; j <= n; ++j) out[j] = e[j] + c[j];
}

// sigma of the tuple with one or two positions removed (skip < 0: none).
void sigma_deleted(std::span<const double> mu, int skip1, int skip2,
                   double* out, int& m) {
  double t[max_dim];
  m = 0;
  for (int i = 0; i < static_cast<int>(mu.size()); ++i)
    if (i != skip1 && i != skip2) t[m++] = mu[i];
  sigma_all_impl(t, m, out);
}

void check_op_mu(const SymmetricOperator& op, std::span<const double> mu) {
  require(static_cast<int>(mu.size()) == op.n, Status::argument_error,
          operator_name(op) + ": eigenvalue count " + std::to_string(mu.size()) +
              " does not match operator dimension");
}

[[noreturn]] void fail_cone(const SymmetricOperator& op, int bad_index) {
  const char* what = op.kind == OperatorKind::log_sigma_k ? "sigma_" : "T_";
  fail(Status::argument_error, operator_name(op) + ": cone violation, " + what +
                                   std::to_string(bad_index) + " <= 0");
}

} // namespace

ConeDescriptor SymmetricOperator::cone() const {
  if (kind == OperatorKind::log_sigma_k) return {ConeKind::gamma_k, n, k};
  return {ConeKind::pullback_by_t, n, n};
}

SymmetricOperator SymmetricOperator::log_sigma(int n, int k) {
  check_dim(n);
  require(k >= 1 && k <= n, Status::argument_error,
          "log_sigma_k requires 1 <= k <= n, got k=" + std::to_string(k) +
              ", n=" + std::to_string(n));
  return {OperatorKind::log_sigma_k, n, k};
}

SymmetricOperator SymmetricOperator::nm1(int n) {
  check_dim(n);
  require(n >= 2, Status::argument_error, "nm1_ma requires n >= 2");
  return {OperatorKind::nm1_ma, n, n};
}

std::string operator_name(const SymmetricOperator& op) {
  if (op.kind == OperatorKind::log_sigma_k)
    return "log_sigma_" + std::to_string(op.k) + "(n=" + std::to_string(op.n) + ")";
  return "nm1_ma(n=" + std::to_string(op.n) + ")";
}

void sigma_all(std::span<const double> mu, std::span<double> out) {
  int n = static_cast<int>(mu.size());
  check_dim(n);
  require(static_cast<int>(out.size()) == n + 1, Status::argument_error,
          "sigma_all output must have size n+1");
  sigma_all_impl(mu.data(), n, out.data());
}

double sigma(std::span<const double> mu, int k) {
  int n = static_cast<int>(mu.size());
  check_dim(n);
  require(k >= 0 && k <= n, Status::argument_error,
          "sigma index out of range: k=" + std::to_string(k));
  double s[max_dim + 1];
  sigma_all_impl(mu.data(), n, s);
  return s[k];
}

void t_map(std::span<const double> mu, std::span<double> out) {
  int n = static_cast<int>(mu.size());
  check_dim(n);
  require(n >= 2, Status::argument_error, "t_map requires n >= 2");
  require(out.size() == mu.size(), Status::argument_error, "t_map output size mismatch");
  double s = 0, c = 0;
  for (double v : mu) comp_add(s, c, v);
  double total = s + c;
  for (int i = 0; i < n; ++i) out[i] = (total - mu[i]) / (n - 1);
}

double cone_margin(const ConeDescriptor& cone, std::span<const double> mu) {
  require(static_cast<int>(mu.size()) == cone.n, Status::argument_error,
          "cone_margin: eigenvalue count does not match cone dimension");
  if (cone.kind == ConeKind::gamma_k) {
    double s[max_dim + 1];
    sigma_all_impl(mu.data(), cone.n, s);
    double m = inf;
    for (int i = 1; i <= cone.k; ++i) m = std::min(m, s[i]);
    return m;
  }
  double t[max_dim];
  t_map(mu, std::span<double>(t, mu.size()));
  double m = inf;
  for (int i = 0; i < cone.n; ++i) m = std::min(m, t[i]);
  return m;
}

bool in_cone(const ConeDescriptor& cone, std::span<const double> mu) {
  return cone_margin(cone, mu) > 0.0;
}

bool try_f_eval(const SymmetricOperator& op, std::span<const double> mu,
                double& out, int& bad_index) {
  if (op.kind == OperatorKind::log_sigma_k) {
    double s[max_dim + 1];
    sigma_all_impl(mu.data(), op.n, s);
    for (int i = 1; i <= op.k; ++i) {
      if (!(s[i] > 0)) {
        bad_index = i;
        return false;
      }
    }
    out = std::log(s[op.k]);
    return true;
  }
  double t[max_dim];
  t_map(mu, std::span<double>(t, mu.size()));
  double acc = 0;
  for (int i = 0; i < op.n; ++i) {
    if (!(t[i] > 0)) {
      bad_index = i + 1;
      return false;
    }
    acc += std::log(t[i]);
  }
  out = acc;
  return true;
}

double f_eval(const SymmetricOperator& op, std::span<const double> mu) {
  check_op_mu(op, mu);
  double v;
  int bad;
  if (!try_f_eval(op, mu, v, bad)) fail_cone(op, bad);
  return v;
}

void f_grad(const SymmetricOperator& op, std::span<const double> mu,
            std::span<double> out) {
  check_op_mu(op, mu);
  require(out.size() == mu.size(), Status::argument_error, "f_grad output size mismatch");
  int n = op.n;
  if (op.kind == OperatorKind::log_sigma_k) {
    double s[max_dim + 1];
    sigma_all_impl(mu.data(), n, s);
    for (int i = 1; i <= op.k; ++i)
      if (!(s[i] > 0)) fail_cone(op, i);
    for (int i = 0; i < n; ++i) {
      double sd[max_dim + 1];
      int m;
      sigma_deleted(mu, i, -1, sd, m);
      out[i] = sd[op.k - 1] / s[op.k];
    }
    return;
  }
  double t[max_dim];
  t_map(mu, std::span<double>(t, mu.size()));
  for (int i = 0; i < n; ++i)
    if (!(t[i] > 0)) fail_cone(op, i + 1);
  for (int i = 0; i < n; ++i) {
    double acc = 0;
    for (int k2 = 0; k2 < n; ++k2)
      if (k2 != i) acc += 1.0 / t[k2];
    out[i] = acc / (n - 1);
  }
}

void f_hess(const SymmetricOperator& op, std::span<const double> mu,
            std::span<double> out) {
  check_op_mu(op, mu);
  int n = op.n;
  require(static_cast<int>(out.size()) == n * n, Status::argument_error,
          "f_hess output size mismatch");
  double g[max_dim];
  f_grad(op, mu, std::span<double>(g, n));
  if (op.kind == OperatorKind::log_sigma_k) {
    double s[max_dim + 1];
    sigma_all_impl(mu.data(), n, s);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          out[i * n + i] = -g[i] * g[i];  // sigma_k is affine in each variable
          continue;
        }
        double s2 = 0;
        if (op.k >= 2) {
          double sd[max_dim + 1];
          int m;
          sigma_deleted(mu, i, j, sd, m);
          s2 = sd[op.k - 2];
        }
        out[i * n + j] = s2 / s[op.k] - g[i] * g[j];
      }
    }
    return;
  }
  double t[max_dim];
  t_map(mu, std::span<double>(t, mu.size()));
  double w = 1.0 / ((n - 1.0) * (n - 1.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0;
      for (int k2 = 0; k2 < n; ++k2)
        if (k2 != i && k2 != j) acc += 1.0 / (t[k2] * t[k2]);
      out[i * n + j] = -w * acc;
    }
  }
}

PairCoefficients pair_coefficients(const SymmetricOperator& op,
                                   std::span<const double> mu) {
  check_op_mu(op, mu);
  int n = op.n;
  for (int i = 0; i + 1 < n; ++i)
    require(mu[i] >= mu[i + 1], Status::argument_error,
            "pair_coefficients requires eigenvalues sorted descending");
  PairCoefficients pc;
  pc.n = n;
  double g[max_dim], h[max_dim * max_dim];
  f_grad(op, mu, std::span<double>(g, n));
  f_hess(op, mu, std::span<double>(h, n * n));
  std::copy(g, g + n, pc.grad.begin());
  std::copy(h, h + n * n, pc.hess.begin());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        pc.quotient[i * n + j] = 0;
        continue;
      }
      double gap = mu[i] - mu[j];
      if (std::abs(gap) < tie_rel_tol * (1.0 + std::abs(mu[i])))
        pc.quotient[i * n + j] = h[i * n + i] - h[i * n + j];
      else
        pc.quotient[i * n + j] = (g[i] - g[j]) / gap;
    }
  }
  return pc;
}

double ray_limit(const SymmetricOperator& op, std::span<const double> mu, int j) {
  check_op_mu(op, mu);
  require(j >= 0 && j < op.n, Status::argument_error, "ray_limit: bad direction index");
  int bad;
  double v;
  if (!try_f_eval(op, mu, v, bad)) fail_cone(op, bad);
  // d f / d t > 0 along the ray and the leading coefficient of the defining
  // polynomial data is positive on the cone, so f(mu + t e_j) -> +inf.
  return inf;
}

PointCheck certify_point(const SymmetricOperator& op, std::span<const double> mu,
                         double h) {
  check_op_mu(op, mu);
  auto cd = op.cone();
  if (!in_cone(cd, mu))
    fail(Status::not_certified,
         operator_name(op) + ": candidate eigenvalues outside the cone (margin " +
             std::to_string(cone_margin(cd, mu)) + ")");

  PointCheck pc{};
  int n = op.n;

  // Distance to the boundary along -ones. sigma_1 is a valid bracket upper
  // bound for both cone families (both sit inside Gamma_1).
  double probe[max_dim];
  double lo = 0.0, hi = sigma(mu, 1);
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < n; ++i) probe[i] = mu[i] - mid;
    if (in_cone(cd, std::span<const double>(probe, n)))
      lo = mid;
    else
      hi = mid;
  }
  pc.cone_distance = lo;

  pc.min_slack = inf;
  for (int j = 0; j < n; ++j) {
    double lim = ray_limit(op, mu, j);
    if (!(lim > h))
      fail(Status::not_certified,
           operator_name(op) + ": ray limit along e_" + std::to_string(j + 1) +
               " does not clear the right-hand side");
    pc.min_slack = std::min(pc.min_slack, lim - h);
  }

  // Diagnostic reach: where each coordinate ray crosses the h-level set,
  // with the level clamped in log scale.
  double f0 = f_eval(op, mu);
  double level = std::min(h, f0 + 40.0);
  double reach = 0;
  for (int j = 0; j < n; ++j) {
    double tj = 0;
    if (f0 < level) {
      double t_hi = 1.0;
      auto value_at = [&](double t) {
        double p[max_dim];
        for (int i = 0; i < n; ++i) p[i] = mu[i] + (i == j ? t : 0.0);
        return f_eval(op, std::span<const double>(p, n));
      };
      while (value_at(t_hi) < level) t_hi *= 2.0;
      double t_lo = 0.0;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (t_lo + t_hi);
        (value_at(mid) < level ? t_lo : t_hi) = mid;
      }
      tj = t_hi;
    }
    double nrm2 = 0;
    for (int i = 0; i < n; ++i) {
      double v = mu[i] + (i == j ? tj : 0.0);
      nrm2 += v * v;
    }
    reach = std::max(reach, std::sqrt(nrm2));
  }
  pc.r_reach = reach;
  return pc;
}

SubsolutionCertificate check_c_subsolution(const SymmetricOperator& op,
                                           std::span<const double> mu_field,
                                           std::span<const double> h_field) {
  const int n = op.n;
  require(n >= 1 && h_field.size() >= 1, Status::argument_error,
          "check_c_subsolution: empty field");
  require(mu_field.size() == h_field.size() * static_cast<std::size_t>(n),
          Status::argument_error,
          "check_c_subsolution: eigenvalue field size does not match h");

  SubsolutionCertificate cert;
  cert.delta = inf;
  cert.min_slack = inf;
  cert.r_reach = 0.0;

  for (std::size_t p = 0; p < h_field.size(); ++p) {
    std::span<const double> mu(mu_field.data() + p * n, n);
    double fval = 0.0;
    int bad = 0;
    if (!try_f_eval(op, mu, fval, bad)) {
      cert.certified = false;
      cert.witness_point = static_cast<std::ptrdiff_t>(p);
      cert.witness_index = bad;
      cert.message = operator_name(op) +
                     ": candidate outside the cone at point " +
                     std::to_string(p) + " (defining inequality " +
                     std::to_string(bad) + " fails)";
      return cert;
    }
    PointCheck pc;
    try {
      pc = certify_point(op, mu, h_field[p]);
    } catch (const Error& e) {
      cert.certified = false;
      cert.witness_point = static_cast<std::ptrdiff_t>(p);
      cert.message = std::string(e.what()) + " at point " + std::to_string(p);
      return cert;
    }
    cert.delta = std::min(cert.delta, 0.5 * pc.cone_distance);
    cert.min_slack = std::min(cert.min_slack, pc.min_slack);
    cert.r_reach = std::max(cert.r_reach, pc.r_reach);
  }
  cert.certified = true;
  return cert;
}

} // namespace ahs::cone
