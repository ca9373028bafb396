#include "pencil.hpp"

#include <algorithm>
#include <cmath>

namespace ahs::pencil {

namespace {

double max_abs(const CMat& m) {
  double v = 0;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) v = std::max(v, std::abs(m(i, j)));
  return v;
}

void check_hermitian(const CMat& m, const char* name) {
  double scale = std::max(1.0, max_abs(m));
  double defect = max_abs(CMat(m - m.adjoint()));
  require(defect <= hermiticity_tol * scale, Status::argument_error,
          std::string(name) + " is not Hermitian within tolerance");
}

// Closed-form Hermitian 2x2 eigendecomposition, eigenvalues descending.
void eig2(const CMat& b, RVec& mu, CMat& u) {
  double a = b(0, 0).real(), c = b(1, 1).real();
  Complex off = b(0, 1);
  double d = 0.5 * (a - c);
  double r = std::hypot(d, std::abs(off));
  mu.resize(2);
  mu[0] = 0.5 * (a + c) + r;
  mu[1] = 0.5 * (a + c) - r;
  u.resize(2, 2);
  if (r == 0.0) {
    u.setIdentity();
    return;
  }
  // the better-conditioned null-vector candidate for the top eigenvalue
  CVec v(2);
  if (d >= 0) {
    v[0] = Complex(d + r, 0.0);
    v[1] = std::conj(off);
  } else {
    v[0] = off;
    v[1] = Complex(r - d, 0.0);
  }
  v /= v.norm();
  u.col(0) = v;
  u(0, 1) = -std::conj(v[1]);
  u(1, 1) = std::conj(v[0]);
}

} // namespace

SpectralData pencil_eigen(const HermitianPencil& p) {
  int n = static_cast<int>(p.chi.rows());
  require(n >= 1 && n <= max_dim, Status::argument_error,
          "pencil dimension must lie in [1,4]");
  require(p.chi.cols() == n && p.gt.rows() == n && p.gt.cols() == n,
          Status::argument_error, "pencil matrices must be square of equal size");
  check_hermitian(p.chi, "chi");
  check_hermitian(p.gt, "gt");

  const bool chi_is_identity = p.chi.isIdentity(0.0);
  CMat b;
  Eigen::LLT<CMat> llt;
  if (chi_is_identity) {
    b = p.gt;
  } else {
    llt.compute(p.chi);
    require(llt.info() == Eigen::Success, Status::argument_error,
            "chi is not positive definite");
    // L^{-1} gt L^{-*}
    CMat tmp = llt.matrixL().solve(p.gt);
    b = llt.matrixL().solve(tmp.adjoint()).adjoint();
  }
  b = 0.5 * (b + b.adjoint());

  SpectralData sd;
  if (n == 2) {
    eig2(b, sd.mu, sd.frame);
  } else {
    Eigen::SelfAdjointEigenSolver<CMat> es(b);
    require(es.info() == Eigen::Success, Status::internal_error,
            "Hermitian eigensolver failed");
    sd.mu.resize(n);
    sd.frame.resize(n, n);
    for (int i = 0; i < n; ++i) {  // ascending -> descending
      sd.mu[i] = es.eigenvalues()[n - 1 - i];
      sd.frame.col(i) = es.eigenvectors().col(n - 1 - i);
    }
  }
  if (!chi_is_identity)
    sd.frame = llt.matrixU().solve(sd.frame);  // back to the ambient gauge

  double scale = std::max(1.0, max_abs(p.gt));
  CMat resid = sd.frame.adjoint() * p.gt * sd.frame;
  for (int i = 0; i < n; ++i) resid(i, i) -= sd.mu[i];
  require(max_abs(resid) <= diag_residual_tol * scale, Status::internal_error,
          "pencil diagonalization residual exceeds tolerance");
  return sd;
}

CMat linearization_coeffs(const cone::SymmetricOperator& op,
                          const SpectralData& sd) {
  int n = static_cast<int>(sd.mu.size());
  require(op.n == n, Status::argument_error,
          "operator dimension does not match spectral data");
  double g[cone::max_dim];
  f_grad(op, std::span<const double>(sd.mu.data(), n), std::span<double>(g, n));
  CMat f = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    f += g[i] * (sd.frame.col(i) * sd.frame.col(i).adjoint());
  return 0.5 * (f + f.adjoint());
}

double mean_f_sum(const cone::SymmetricOperator& op, const SpectralData& sd) {
  int n = static_cast<int>(sd.mu.size());
  require(op.n == n, Status::argument_error,
          "operator dimension does not match spectral data");
  double g[cone::max_dim];
  f_grad(op, std::span<const double>(sd.mu.data(), n), std::span<double>(g, n));
  double s = 0;
  for (int i = 0; i < n; ++i) s += g[i];
  return s;
}

} // namespace ahs::pencil
