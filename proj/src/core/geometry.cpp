#include "geometry.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace ahs::fields {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

inline double& ent(double* m, int ax, int i, int j) { return m[i + ax * j]; }
inline double cent(const double* m, int ax, int i, int j) {
  return m[i + ax * j];
}

// Perturbation angles: one rotation plane per complex direction pair. The
// generator commutes plane-wise, so its exponential is the product of the
// two plane rotations written in closed form.
struct Rotation {
  GeometryPreset preset;
  double amp;
  int ax;

  void eval(const std::array<double, max_axes>& x, double* R) const {
    for (int i = 0; i < ax * ax; ++i) R[i] = 0.0;
    for (int i = 0; i < ax; ++i) ent(R, ax, i, i) = 1.0;
    if (preset == GeometryPreset::flat_standard || amp == 0.0) return;
    auto plane = [&](int i, int j, double phi) {
      double c = std::cos(phi), s = std::sin(phi);
      ent(R, ax, i, i) = c;
      ent(R, ax, j, j) = c;
      ent(R, ax, i, j) = s;
      ent(R, ax, j, i) = -s;
    };
    if (ax == 4) {
      double p = std::sin(two_pi * x[0]) * std::cos(two_pi * x[3]);
      double q = std::cos(two_pi * x[1]) * std::sin(two_pi * x[2]);
      plane(0, 2, amp * p);
      plane(1, 3, amp * q);
    } else {
      double p = std::sin(two_pi * x[0]) * std::cos(two_pi * x[1]);
      plane(0, 1, amp * p);
    }
  }
};

// J0 maps d/dx_{2i} to d/dx_{2i+1}.
void standard_j(int ax, double* J) {
  for (int i = 0; i < ax * ax; ++i) J[i] = 0.0;
  for (int i = 0; i < ax / 2; ++i) {
    ent(J, ax, 2 * i + 1, 2 * i) = 1.0;
    ent(J, ax, 2 * i, 2 * i + 1) = -1.0;
  }
}

// frame rows from a rotation matrix: a_i = R a0_i with
// a0_i = (delta_{2i} - i delta_{2i+1}) / sqrt(2), then one Gram-Schmidt
// pass in the standard Hermitian product (a no-op up to rounding, kept so
// stored frames are unitary to machine precision).
void frame_rows(const double* R, int n, int ax, Complex* a) {
  const double inv_sqrt2 = 0.70710678118654752440;
  for (int i = 0; i < n; ++i)
    for (int al = 0; al < ax; ++al)
      a[i * ax + al] = Complex(cent(R, ax, al, 2 * i) * inv_sqrt2,
                               -cent(R, ax, al, 2 * i + 1) * inv_sqrt2);
  for (int i = 0; i < n; ++i) {
    Complex* vi = a + i * ax;
    for (int p = 0; p < i; ++p) {
      const Complex* vp = a + p * ax;
      Complex proj(0.0);
      for (int al = 0; al < ax; ++al) proj += vi[al] * std::conj(vp[al]);
      for (int al = 0; al < ax; ++al) vi[al] -= proj * vp[al];
    }
    double nrm2 = 0.0;
    for (int al = 0; al < ax; ++al) nrm2 += std::norm(vi[al]);
    double inv = 1.0 / std::sqrt(nrm2);
    for (int al = 0; al < ax; ++al) vi[al] *= inv;
  }
}

void j_matrix(const double* R, int ax, double* J) {
  double J0[16], tmp[16];
  standard_j(ax, J0);
  // J = R J0 R^T
  for (int i = 0; i < ax; ++i)
    for (int j = 0; j < ax; ++j) {
      double s = 0.0;
      for (int k = 0; k < ax; ++k) s += cent(R, ax, i, k) * cent(J0, ax, k, j);
      ent(tmp, ax, i, j) = s;
    }
  for (int i = 0; i < ax; ++i)
    for (int j = 0; j < ax; ++j) {
      double s = 0.0;
      for (int k = 0; k < ax; ++k) s += cent(tmp, ax, i, k) * cent(R, ax, j, k);
      ent(J, ax, i, j) = s;
    }
}

// post-construction checks: J^2 = -Id and J^T J = Id (compatibility with
// the identity metric) to 1e-12, frame unitarity to 1e-10.
void verify_geometry(const GeometryFields& geo) {
  const int n = geo.n, ax = geo.ax;
  std::size_t nb = geo.uniform ? 1 : geo.grid.points();
  for (std::size_t b = 0; b < nb; ++b) {
    const double* J = &geo.jmat[b * ax * ax];
    for (int i = 0; i < ax; ++i) {
      for (int j = 0; j < ax; ++j) {
        double jj = 0.0, jtj = 0.0;
        for (int k = 0; k < ax; ++k) {
          jj += cent(J, ax, i, k) * cent(J, ax, k, j);
          jtj += cent(J, ax, k, i) * cent(J, ax, k, j);
        }
        double id = (i == j) ? 1.0 : 0.0;
        require(std::abs(jj + id) <= 1e-12, Status::internal_error,
                "geometry construction: J^2 differs from -Id");
        require(std::abs(jtj - id) <= 1e-12, Status::internal_error,
                "geometry construction: J breaks metric compatibility");
      }
    }
    const Complex* a = &geo.frame[b * n * ax];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Complex s(0.0);
        for (int al = 0; al < ax; ++al)
          s += a[i * ax + al] * std::conj(a[j * ax + al]);
        double id = (i == j) ? 1.0 : 0.0;
        require(std::abs(s - id) <= 1e-10, Status::internal_error,
                "geometry construction: frame is not unitary");
      }
    }
  }
}

} // namespace

GeometryPreset preset_from_name(const std::string& name) {
  if (name == "flat_standard" || name == "flat")
    return GeometryPreset::flat_standard;
  if (name == "perturbed_j") return GeometryPreset::perturbed_j;
  fail(Status::argument_error, "unknown geometry preset: " + name);
}

std::string preset_name(GeometryPreset p) {
  return p == GeometryPreset::flat_standard ? "flat_standard" : "perturbed_j";
}

GeometryFields build_geometry(const PeriodicGrid& grid, GeometryPreset preset,
                              double amplitude, const GeometryOptions& opt) {
  grid.validate();
  require(std::abs(amplitude) <= 10.0, Status::argument_error,
          "geometry amplitude out of range (|amp| <= 10)");

  GeometryFields geo;
  geo.grid = grid;
  geo.preset = preset;
  geo.amplitude = amplitude;
  geo.n = grid.cdim;
  geo.ax = grid.axes();
  geo.uniform =
      (preset == GeometryPreset::flat_standard) || amplitude == 0.0;

  const int n = geo.n, ax = geo.ax;
  std::size_t nb = geo.uniform ? 1 : grid.points();
  geo.jmat.assign(nb * ax * ax, 0.0);
  geo.frame.assign(nb * n * ax, Complex(0.0));
  geo.bracket.assign(nb * n * n * n, Complex(0.0));
  geo.first_order.assign(nb * n * n * ax, Complex(0.0));

  Rotation rot{preset, amplitude, ax};
  double R[16];

  if (geo.uniform) {
    std::array<double, max_axes> x{};
    rot.eval(x, R);
    j_matrix(R, ax, geo.jmat.data());
    frame_rows(R, n, ax, geo.frame.data());
    verify_geometry(geo);
    return geo;
  }

  std::array<double, max_axes> x{};
  for_each_point(grid, [&](std::size_t p, const std::array<int, max_axes>& c) {
    grid_x(grid, c, x);
    rot.eval(x, R);
    j_matrix(R, ax, &geo.jmat[p * ax * ax]);
    frame_rows(R, n, ax, &geo.frame[p * n * ax]);
  });

  // Frame-coefficient derivatives: centered differences at the grid spacing
  // (reusing stored neighbor frames) or at an explicit step for reference
  // geometries.
  StencilTables st(grid);
  bool on_grid = opt.fd_step <= 0.0;
  std::vector<Complex> up_buf(static_cast<std::size_t>(n) * ax),
      dn_buf(static_cast<std::size_t>(n) * ax);

  for_each_point(grid, [&](std::size_t p, const std::array<int, max_axes>& c) {
    const Complex* a = &geo.frame[p * n * ax];
    const double* J = &geo.jmat[p * ax * ax];
    grid_x(grid, c, x);

    Complex Da[max_axes][2 * max_axes]; // Da[al][j*ax+beta]
    for (int al = 0; al < ax; ++al) {
      const Complex *fu, *fd;
      double step;
      if (on_grid) {
        fu = &geo.frame[(p + st.up[al][c[al]]) * n * ax];
        fd = &geo.frame[(p + st.dn[al][c[al]]) * n * ax];
        step = grid.spacing(al);
      } else {
        auto xs = x;
        xs[al] = x[al] + opt.fd_step;
        rot.eval(xs, R);
        frame_rows(R, n, ax, up_buf.data());
        xs[al] = x[al] - opt.fd_step;
        rot.eval(xs, R);
        frame_rows(R, n, ax, dn_buf.data());
        fu = up_buf.data();
        fd = dn_buf.data();
        step = opt.fd_step;
      }
      double inv2s = 1.0 / (2.0 * step);
      for (int k = 0; k < n * ax; ++k) Da[al][k] = (fu[k] - fd[k]) * inv2s;
    }

    Complex* cc = &geo.bracket[p * n * n * n];
    Complex* dd = &geo.first_order[p * n * n * ax];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Complex full[max_axes], jf[max_axes], w[max_axes];
        Complex lead[max_axes]; // sum_al a_{i,al} D_al conj(a_{j,beta})
        for (int be = 0; be < ax; ++be) {
          Complex s1(0.0), s2(0.0);
          for (int al = 0; al < ax; ++al) {
            s1 += a[i * ax + al] * std::conj(Da[al][j * ax + be]);
            s2 += std::conj(a[j * ax + al]) * Da[al][i * ax + be];
          }
          lead[be] = s1;
          full[be] = s1 - s2;
        }
        for (int be = 0; be < ax; ++be) {
          Complex s(0.0);
          for (int ga = 0; ga < ax; ++ga) s += cent(J, ax, be, ga) * full[ga];
          jf[be] = s;
        }
        for (int be = 0; be < ax; ++be)
          w[be] = 0.5 * (full[be] + Complex(0.0, 1.0) * jf[be]);
        for (int l = 0; l < n; ++l) {
          Complex s(0.0);
          for (int be = 0; be < ax; ++be) s += a[l * ax + be] * w[be];
          cc[(i * n + j) * n + l] = s;
        }
        for (int be = 0; be < ax; ++be)
          dd[(i * n + j) * ax + be] = lead[be] - w[be];
      }
    }
  });

  verify_geometry(geo);
  return geo;
}

double ddbar(const GeometryFields& geo, const ScalarField& u,
             MatrixField& out) {
  require(u.grid == geo.grid, Status::argument_error,
          "ddbar: field grid does not match geometry grid");
  if (!(out.grid == geo.grid) || out.n != geo.n) out = MatrixField(geo.grid, geo.n);
  StencilTables st(geo.grid);
  PointJets jets;
  double defect = 0.0;
  const double* uv = u.v.data();
  for_each_point(geo.grid,
                 [&](std::size_t p, const std::array<int, max_axes>& c) {
                   gather_jets(st, uv, p, c, jets);
                   ddbar_point(geo, p, jets, out.at(p), defect);
                 });
  return defect;
}

double ddbar_analytic(const GeometryFields& geo, const AnalyticScalar& u,
                      MatrixField& out) {
  require(u.axes == geo.ax, Status::argument_error,
          "ddbar_analytic: scalar dimension does not match geometry");
  if (!(out.grid == geo.grid) || out.n != geo.n) out = MatrixField(geo.grid, geo.n);
  PointJets jets;
  double defect = 0.0;
  std::array<double, max_axes> x{};
  double val = 0.0;
  for_each_point(geo.grid,
                 [&](std::size_t p, const std::array<int, max_axes>& c) {
                   grid_x(geo.grid, c, x);
                   u.jets(x, val, jets.grad, jets.hess);
                   ddbar_point(geo, p, jets, out.at(p), defect);
                 });
  return defect;
}

ScalarField canonical_laplacian(const GeometryFields& geo,
                                const ScalarField& u) {
  MatrixField e;
  ddbar(geo, u, e);
  ScalarField out(geo.grid);
  const int n = geo.n;
  for (std::size_t p = 0; p < geo.grid.points(); ++p) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += e.at(p)[i + n * i].real();
    out[p] = s;
  }
  return out;
}

double gradient_sup(const PeriodicGrid& g, const ScalarField& u) {
  require(u.grid == g, Status::argument_error,
          "gradient_sup: field grid mismatch");
  StencilTables st(g);
  const double* uv = u.v.data();
  double best = 0.0;
  for_each_point(g, [&](std::size_t p, const std::array<int, max_axes>& c) {
    double s = 0.0;
    for (int a = 0; a < g.axes(); ++a) {
      double d = (uv[p + st.up[a][c[a]]] - uv[p + st.dn[a][c[a]]]) * st.inv_2h[a];
      s += d * d;
    }
    if (s > best) best = s;
  });
  return std::sqrt(best);
}

void real_hessian_range(const PeriodicGrid& g, const ScalarField& u,
                        ScalarField& lam_min, ScalarField& lam_max) {
  require(u.grid == g, Status::argument_error,
          "real_hessian_range: field grid mismatch");
  lam_min = ScalarField(g);
  lam_max = ScalarField(g);
  StencilTables st(g);
  PointJets jets;
  const double* uv = u.v.data();
  const int ax = g.axes();
  Eigen::Matrix4d H4;
  for_each_point(g, [&](std::size_t p, const std::array<int, max_axes>& c) {
    gather_jets(st, uv, p, c, jets);
    if (ax == 2) {
      Eigen::Matrix2d H;
      H << jets.hess[0][0], jets.hess[0][1], jets.hess[1][0], jets.hess[1][1];
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(H,
                                                        Eigen::EigenvaluesOnly);
      lam_min[p] = es.eigenvalues()(0);
      lam_max[p] = es.eigenvalues()(1);
    } else {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) H4(a, b) = jets.hess[a][b];
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(H4,
                                                        Eigen::EigenvaluesOnly);
      lam_min[p] = es.eigenvalues()(0);
      lam_max[p] = es.eigenvalues()(3);
    }
  });
}

double real_hessian_sup(const PeriodicGrid& g, const ScalarField& u) {
  require(u.grid == g, Status::argument_error,
          "real_hessian_sup: field grid mismatch");
  StencilTables st(g);
  PointJets jets;
  const double* uv = u.v.data();
  const int ax = g.axes();
  double best = 0.0;
  for_each_point(g, [&](std::size_t p, const std::array<int, max_axes>& c) {
    gather_jets(st, uv, p, c, jets);
    double s = 0.0;
    for (int a = 0; a < ax; ++a)
      for (int b = 0; b < ax; ++b) s += jets.hess[a][b] * jets.hess[a][b];
    if (s > best) best = s;
  });
  return std::sqrt(best);
}

double omega_u(const GeometryFields& geo, const MatrixField& g,
               const ScalarField& u, MatrixField& out) {
  require(g.grid == geo.grid && g.n == geo.n, Status::argument_error,
          "omega_u: background field does not match geometry");
  double defect = ddbar(geo, u, out);
  const std::size_t nn = static_cast<std::size_t>(geo.n) * geo.n;
  for (std::size_t p = 0; p < geo.grid.points(); ++p) {
    const Complex* gp = g.at(p);
    Complex* op = out.at(p);
    for (std::size_t k = 0; k < nn; ++k) op[k] += gp[k];
  }
  return defect;
}

} // namespace ahs::fields
