#include "support/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

double sigma_subset(std::span<const double> mu, int k) {
  int n = static_cast<int>(mu.size());
  if (k == 0) return 1.0;
  if (k < 0 || k > n) return 0.0;
  long double acc = 0.0L;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    long double prod = 1.0L;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= static_cast<long double>(mu[i]);
    acc += prod;
  }
  return static_cast<double>(acc);
}

std::vector<double> fd_gradient(const ScalarFn& f, std::span<const double> mu,
                                double h) {
  std::vector<double> g(mu.size());
  std::vector<double> p(mu.begin(), mu.end());
  for (size_t i = 0; i < mu.size(); ++i) {
    p[i] = mu[i] + h;
    double fp = f(p);
    p[i] = mu[i] - h;
    double fm = f(p);
    p[i] = mu[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

double fd_second_directional(const ScalarFn& f, std::span<const double> mu,
                             std::span<const double> dir, double h) {
  std::vector<double> p(mu.size());
  auto at = [&](double t) {
    for (size_t i = 0; i < mu.size(); ++i) p[i] = mu[i] + t * dir[i];
    return f(p);
  };
  return (at(h) - 2.0 * at(0.0) + at(-h)) / (h * h);
}

std::vector<double> sample_cone_point(std::mt19937_64& rng,
                                      const ahs::cone::ConeDescriptor& cone,
                                      double box, double margin) {
  std::uniform_real_distribution<double> u(-box, box);
  std::vector<double> mu(cone.n);
  for (int attempt = 0; attempt < 200000; ++attempt) {
    for (auto& v : mu) v = u(rng);
    if (ahs::cone::cone_margin(cone, mu) >= margin) return mu;
  }
  throw std::runtime_error("sample_cone_point: rejection sampling failed");
}

std::vector<double> pencil_eigen_charpoly(const Eigen::MatrixXcd& chi,
                                          const Eigen::MatrixXcd& gt) {
  int n = static_cast<int>(chi.rows());
  // p(x) = det(gt - x chi) is a real polynomial of degree n for Hermitian
  // input; recover its coefficients from n+1 integer-node evaluations.
  Eigen::VectorXd nodes(n + 1), values(n + 1);
  Eigen::MatrixXd vander(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    double x = j - n / 2.0;
    nodes[j] = x;
    values[j] = (gt - x * chi).determinant().real();
    double p = 1.0;
    for (int d = 0; d <= n; ++d) {
      vander(j, d) = p;
      p *= x;
    }
  }
  Eigen::VectorXd coeff = vander.fullPivLu().solve(values);
  // Monic companion matrix.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeff[i] / coeff[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<double> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = es.eigenvalues()[i].real();
  std::sort(mu.begin(), mu.end(), std::greater<double>());
  return mu;
}

Eigen::MatrixXcd random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

Eigen::MatrixXcd random_hpd(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
  Eigen::MatrixXcd h = a * a.adjoint();
  return h + 0.3 * static_cast<double>(n) * Eigen::MatrixXcd::Identity(n, n);
}

void random_pencil_with_spectrum(std::mt19937_64& rng, std::span<const double> mu,
                                 Eigen::MatrixXcd& chi, Eigen::MatrixXcd& gt) {
  int n = static_cast<int>(mu.size());
  chi = random_hpd(rng, n);
  // chi-orthonormal frame by Gram-Schmidt on random complex vectors.
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd f(n, n);
  for (int c = 0; c < n; ++c) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = std::complex<double>(g(rng), g(rng));
    for (int p = 0; p < c; ++p)
      v -= (f.col(p).adjoint() * chi * v)(0) * f.col(p);
    double nrm = std::sqrt((v.adjoint() * chi * v)(0).real());
    f.col(c) = v / nrm;
  }
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d[i] = mu[i];
  Eigen::MatrixXcd finv = f.inverse();
  gt = finv.adjoint() * d.asDiagonal() * finv;
  gt = 0.5 * (gt + gt.adjoint());
}

} // namespace oracle
