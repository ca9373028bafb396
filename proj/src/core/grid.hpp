#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace ahs::fields {

inline constexpr int max_axes = 4;

/// Uniform periodic grid on a torus of complex dimension 1 or 2 (2 or 4
/// real axes). Row-major storage, axis 0 slowest, last axis contiguous.
struct PeriodicGrid {
  int cdim = 0;
  std::array<int, max_axes> size{};
  std::array<double, max_axes> period{1.0, 1.0, 1.0, 1.0};

  int axes() const { return 2 * cdim; }
  double spacing(int a) const { return period[a] / size[a]; }

  std::size_t points() const {
    std::size_t n = 1;
    for (int a = 0; a < axes(); ++a) n *= static_cast<std::size_t>(size[a]);
    return n;
  }

  std::array<std::int64_t, max_axes> strides() const {
    std::array<std::int64_t, max_axes> s{};
    int ax = axes();
    s[ax - 1] = 1;
    for (int a = ax - 2; a >= 0; --a) s[a] = s[a + 1] * size[a + 1];
    return s;
  }

  void validate() const {
    require(cdim == 1 || cdim == 2, Status::argument_error,
            "grid complex dimension must be 1 or 2");
    for (int a = 0; a < axes(); ++a) {
      require(size[a] >= 4 && size[a] % 2 == 0, Status::argument_error,
              "grid sizes must be even and at least 4");
      require(period[a] > 0, Status::argument_error, "grid periods must be positive");
    }
  }

  static PeriodicGrid cube(int cdim, int n) {
    PeriodicGrid g;
    g.cdim = cdim;
    for (int a = 0; a < 2 * cdim; ++a) g.size[a] = n;
    g.validate();
    return g;
  }

  bool operator==(const PeriodicGrid& o) const {
    if (cdim != o.cdim) return false;
    for (int a = 0; a < axes(); ++a)
      if (size[a] != o.size[a] || period[a] != o.period[a]) return false;
    return true;
  }
};

struct ScalarField {
  PeriodicGrid grid;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const PeriodicGrid& g) : grid(g), v(g.points(), 0.0) {}

  double& operator[](std::size_t p) { return v[p]; }
  double operator[](std::size_t p) const { return v[p]; }
};

/// Visit every point; f(flat_index, coords).
template <class F>
void for_each_point(const PeriodicGrid& g, F&& f) {
  int ax = g.axes();
  std::array<int, max_axes> c{};
  std::size_t np = g.points();
  for (std::size_t p = 0; p < np; ++p) {
    f(p, c);
    for (int a = ax - 1; a >= 0; --a) {
      if (++c[a] < g.size[a]) break;
      c[a] = 0;
    }
  }
}

/// Periodic neighbor offset tables: flat-index delta for a +/-1 step along
/// each axis as a function of the coordinate on that axis.
struct StencilTables {
  std::array<std::vector<std::int64_t>, max_axes> up, dn;
  std::array<double, max_axes> inv_2h{}, inv_h2{};
  int axes = 0;

  explicit StencilTables(const PeriodicGrid& g) : axes(g.axes()) {
    auto str = g.strides();
    for (int a = 0; a < axes; ++a) {
      int n = g.size[a];
      up[a].resize(n);
      dn[a].resize(n);
      for (int c = 0; c < n; ++c) {
        up[a][c] = (c + 1 == n ? 1 - n : 1) * str[a];
        dn[a][c] = (c == 0 ? n - 1 : -1) * str[a];
      }
      double h = g.spacing(a);
      inv_2h[a] = 1.0 / (2.0 * h);
      inv_h2[a] = 1.0 / (h * h);
    }
  }
};

/// All centered first and second differences of u at one point.
/// hess is symmetric; the cross terms use the 4-point centered stencil.
struct PointJets {
  std::array<double, max_axes> grad{};
  std::array<std::array<double, max_axes>, max_axes> hess{};
};

inline void gather_jets(const StencilTables& st, const double* u, std::size_t p,
                        const std::array<int, max_axes>& c, PointJets& out) {
  double center = u[p];
  std::array<std::int64_t, max_axes> o_up, o_dn;
  for (int a = 0; a < st.axes; ++a) {
    o_up[a] = st.up[a][c[a]];
    o_dn[a] = st.dn[a][c[a]];
    double fu = u[p + o_up[a]], fd = u[p + o_dn[a]];
    out.grad[a] = (fu - fd) * st.inv_2h[a];
    out.hess[a][a] = (fu - 2.0 * center + fd) * st.inv_h2[a];
  }
  for (int a = 0; a < st.axes; ++a) {
    for (int b = a + 1; b < st.axes; ++b) {
      // (u(++) - u(+-) - u(-+) + u(--)) / (4 h_a h_b)
      double v = (u[p + o_up[a] + o_up[b]] - u[p + o_up[a] + o_dn[b]] -
                  u[p + o_dn[a] + o_up[b]] + u[p + o_dn[a] + o_dn[b]]) *
                 st.inv_2h[a] * st.inv_2h[b];
      out.hess[a][b] = v;
      out.hess[b][a] = v;
    }
  }
}

} // namespace ahs::fields
