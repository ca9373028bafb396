#pragma once

#include <string>
#include <vector>

#include "analytic.hpp"
#include "grid.hpp"

namespace ahs::fields {

enum class GeometryPreset { flat_standard, perturbed_j };

GeometryPreset preset_from_name(const std::string& name);
std::string preset_name(GeometryPreset p);

struct GeometryOptions {
  /// Step for the frame-coefficient derivatives entering bracket and
  /// first-order fields. 0 means the grid spacing on each axis, which makes
  /// those derivatives stencil-consistent; a small positive value gives a
  /// near-exact reference geometry for convergence studies.
  double fd_step = 0.0;
};

/// Pointwise geometric data of a model almost Hermitian structure on the
/// torus. The metric is the standard one (chi = identity in coordinates) for
/// every preset; the almost complex structure and the induced unitary frame
/// vary. Per point, for complex dimension n on 2n real axes:
///   jmat         J as a real 2n x 2n matrix, column-major
///   frame        a[i][alpha]: e_i = sum_alpha a_{i,alpha} d/dx_alpha,
///                rows i = 0..n-1 contiguous in alpha, J e_i = i e_i,
///                chi(e_i, conj(e_j)) = delta_ij
///   bracket      c[i][j][l]: [e_i, conj(e_j)]^(0,1) = sum_l c_l conj(e_l)
///   first_order  d[i][j][beta]: coordinate coefficients of the first-order
///                part of the discrete complex Hessian pairing (i, conj j)
/// Flat preset (and amplitude 0) stores one shared block for all points.
struct GeometryFields {
  PeriodicGrid grid;
  GeometryPreset preset = GeometryPreset::flat_standard;
  double amplitude = 0.0;
  int n = 0;
  int ax = 0;
  bool uniform = false;

  std::vector<double> jmat;
  std::vector<Complex> frame;
  std::vector<Complex> bracket;
  std::vector<Complex> first_order;

  std::size_t block(std::size_t p) const { return uniform ? 0 : p; }
  const double* J(std::size_t p) const { return &jmat[block(p) * ax * ax]; }
  const Complex* frame_at(std::size_t p) const {
    return &frame[block(p) * n * ax];
  }
  const Complex* bracket_at(std::size_t p) const {
    return &bracket[block(p) * n * n * n];
  }
  const Complex* first_order_at(std::size_t p) const {
    return &first_order[block(p) * n * n * ax];
  }
};

GeometryFields build_geometry(const PeriodicGrid& grid, GeometryPreset preset,
                              double amplitude,
                              const GeometryOptions& opt = {});

/// One-point contraction underlying ddbar: builds
///   E_ij = sum_ab a_{i,a} conj(a_{j,b}) H_ab + sum_b d_{ij,b} G_b
/// from the coordinate jets (G, H) of u at point p, Hermitizes into out
/// (n x n col-major) and grows defect by the symmetrization distance.
inline void ddbar_point(const GeometryFields& geo, std::size_t p,
                        const PointJets& jets, Complex* out, double& defect) {
  const int n = geo.n, ax = geo.ax;
  const Complex* a = geo.frame_at(p);
  const Complex* dd = geo.first_order_at(p);
  Complex E[4];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex s(0.0);
      for (int al = 0; al < ax; ++al) {
        Complex row(0.0);
        for (int be = 0; be < ax; ++be)
          row += std::conj(a[j * ax + be]) * jets.hess[al][be];
        s += a[i * ax + al] * row;
      }
      for (int be = 0; be < ax; ++be)
        s += dd[(i * n + j) * ax + be] * jets.grad[be];
      E[i + n * j] = s;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Complex eij = E[i + n * j], eji = E[j + n * i];
      Complex avg = 0.5 * (eij + std::conj(eji));
      double d = 0.5 * std::abs(eij - std::conj(eji));
      if (d > defect) defect = d;
      out[i + n * j] = avg;
      out[j + n * i] = std::conj(avg);
    }
  }
}

/// Hermitian n x n matrix attached to every grid point, column-major blocks.
struct MatrixField {
  PeriodicGrid grid;
  int n = 0;
  std::vector<Complex> m;

  MatrixField() = default;
  MatrixField(const PeriodicGrid& g, int n_)
      : grid(g), n(n_), m(g.points() * n_ * n_, Complex(0.0)) {}

  Complex* at(std::size_t p) { return &m[p * n * n]; }
  const Complex* at(std::size_t p) const { return &m[p * n * n]; }
};

/// Pencil blocks (chi, g + ddbar(u)) for the eigenvalue map: chi is the
/// identity for every preset, so only the right block is materialized.
/// Returns the ddbar symmetrization defect.
double omega_u(const GeometryFields& geo, const MatrixField& g,
               const ScalarField& u, MatrixField& out);

/// Discrete complex Hessian in the unitary frame:
///   out(i,j) = e_i(conj(e_j)(u)) - [e_i, conj(e_j)]^(0,1)(u)
/// with coordinate derivatives replaced by centered differences. The result
/// is Hermitized; the returned value is the largest entrywise distance to
/// the Hermitization, which measures how far the discrete bracket identity
/// is from exact (rounding-level by construction).
double ddbar(const GeometryFields& geo, const ScalarField& u, MatrixField& out);

/// Same pairing with exact coordinate derivatives of an analytic scalar.
/// Geometry coefficients still come from `geo`, so with a small fd_step this
/// is a near-exact reference for the grid operator.
double ddbar_analytic(const GeometryFields& geo, const AnalyticScalar& u,
                      MatrixField& out);

/// Real trace of the discrete complex Hessian, sum_i out(i,i).
ScalarField canonical_laplacian(const GeometryFields& geo,
                                const ScalarField& u);

/// Sup over grid points of the Euclidean norm of the centered coordinate
/// gradient.
double gradient_sup(const PeriodicGrid& g, const ScalarField& u);

/// Eigenvalue range of the centered-difference real Hessian at every point.
void real_hessian_range(const PeriodicGrid& g, const ScalarField& u,
                        ScalarField& lam_min, ScalarField& lam_max);

/// Sup over grid points of the Frobenius norm of the real Hessian.
double real_hessian_sup(const PeriodicGrid& g, const ScalarField& u);

} // namespace ahs::fields
