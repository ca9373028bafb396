#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "grid.hpp"

namespace ahs::fields {

using Complex = std::complex<double>;

/// One separable term  coeff * prod_a factor_a(2 pi freq_a x_a)  where each
/// factor is 1, cos or sin. Sums of such terms give every analytic scalar in
/// the catalog, with closed-form gradients and Hessians.
struct TrigTerm {
  enum class Factor : std::uint8_t { one, cos, sin };
  double coeff = 0.0;
  std::array<Factor, max_axes> factor{Factor::one, Factor::one, Factor::one,
                                      Factor::one};
  std::array<int, max_axes> freq{};
};

struct AnalyticScalar {
  std::string name;
  int axes = 0;
  std::vector<TrigTerm> terms;

  double value(const std::array<double, max_axes>& x) const;
  void gradient(const std::array<double, max_axes>& x,
                std::array<double, max_axes>& out) const;
  void hessian(const std::array<double, max_axes>& x,
               std::array<std::array<double, max_axes>, max_axes>& out) const;

  /// Evaluate value, gradient and Hessian together (for geometry pairings).
  void jets(const std::array<double, max_axes>& x, double& val,
            std::array<double, max_axes>& grad,
            std::array<std::array<double, max_axes>, max_axes>& hess) const;

  bool is_zero() const { return terms.empty(); }
};

/// Named catalog entries. `amplitude` scales the whole field, `frequency`
/// multiplies the base wave numbers. Names:
///   zero        0
///   cos_x1      a cos(2 pi f x0)
///   cos_x2      a cos(2 pi f x1)
///   cos13       a cos(2 pi f x0) cos(2 pi f x2)            (cdim 2)
///   cos12       a cos(2 pi f x0) cos(2 pi f x1)
///   trig_mix    a [cos cos(0,2) + 1/2 sin sin(1,3) + 1/4 cos(2 pi f x1)]
///               for cdim 2; a [cos(2 pi f x0) + 1/2 sin(2 pi f x1)] for cdim 1
AnalyticScalar make_scalar(const std::string& name, int cdim, double amplitude,
                           int frequency);

std::vector<std::string> scalar_catalog_names();

/// Sample onto a grid.
ScalarField sample(const AnalyticScalar& s, const PeriodicGrid& g);

inline void grid_x(const PeriodicGrid& g, const std::array<int, max_axes>& c,
                   std::array<double, max_axes>& x) {
  for (int a = 0; a < g.axes(); ++a) x[a] = c[a] * g.spacing(a);
}

/// Hermitian n x n background matrix field, evaluated pointwise. Entries are
/// given in the standard frame slots (the problem layer pairs them with grid
/// geometry). Names:
///   identity    delta_ij
///   diag_cos    diag(1 + eps cos(2 pi x0), 1 + eps cos(2 pi x2))
///   herm_cos    identity + eps/2 * offdiag(cos(2 pi x0) + i sin(2 pi x2))
///   bad_point   identity, except one marked grid cell where the matrix is
///               diag(-n, 1, ...): outside every admissibility cone there.
struct HermitianBackground {
  std::string name;
  int n = 0;
  double eps = 0.0;

  /// out is n x n column-major.
  void value(const std::array<double, max_axes>& x,
             const PeriodicGrid& g, const std::array<int, max_axes>& c,
             Complex* out) const;

  /// Coordinates of the marked cell for bad_point (size[a]/3 on each axis).
  static std::array<int, max_axes> bad_cell(const PeriodicGrid& g);
};

HermitianBackground make_background(const std::string& name, int cdim,
                                    double eps);

std::vector<std::string> background_catalog_names();

} // namespace ahs::fields
