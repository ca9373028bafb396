#include "analytic.hpp"

#include <cmath>

namespace ahs::fields {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

// factor value and its first/second derivatives w.r.t. x (not the angle)
struct FactorJet {
  double v, d1, d2;
};

FactorJet factor_jet(TrigTerm::Factor f, int freq, double x) {
  if (f == TrigTerm::Factor::one) return {1.0, 0.0, 0.0};
  double w = two_pi * freq;
  double s = std::sin(w * x), c = std::cos(w * x);
  if (f == TrigTerm::Factor::cos) return {c, -w * s, -w * w * c};
  return {s, w * c, -w * w * s};
}

} // namespace

double AnalyticScalar::value(const std::array<double, max_axes>& x) const {
  double total = 0.0;
  for (const auto& t : terms) {
    double p = t.coeff;
    for (int a = 0; a < axes; ++a) p *= factor_jet(t.factor[a], t.freq[a], x[a]).v;
    total += p;
  }
  return total;
}

void AnalyticScalar::gradient(const std::array<double, max_axes>& x,
                              std::array<double, max_axes>& out) const {
  out.fill(0.0);
  for (const auto& t : terms) {
    std::array<FactorJet, max_axes> j;
    for (int a = 0; a < axes; ++a) j[a] = factor_jet(t.factor[a], t.freq[a], x[a]);
    for (int a = 0; a < axes; ++a) {
      double p = t.coeff * j[a].d1;
      for (int b = 0; b < axes; ++b)
        if (b != a) p *= j[b].v;
      out[a] += p;
    }
  }
}

void AnalyticScalar::hessian(
    const std::array<double, max_axes>& x,
    std::array<std::array<double, max_axes>, max_axes>& out) const {
  for (auto& row : out) row.fill(0.0);
  for (const auto& t : terms) {
    std::array<FactorJet, max_axes> j;
    for (int a = 0; a < axes; ++a) j[a] = factor_jet(t.factor[a], t.freq[a], x[a]);
    for (int a = 0; a < axes; ++a) {
      for (int b = a; b < axes; ++b) {
        double p = t.coeff;
        if (a == b) {
          p *= j[a].d2;
          for (int g = 0; g < axes; ++g)
            if (g != a) p *= j[g].v;
        } else {
          p *= j[a].d1 * j[b].d1;
          for (int g = 0; g < axes; ++g)
            if (g != a && g != b) p *= j[g].v;
        }
        out[a][b] += p;
        if (a != b) out[b][a] += p;
      }
    }
  }
}

void AnalyticScalar::jets(
    const std::array<double, max_axes>& x, double& val,
    std::array<double, max_axes>& grad,
    std::array<std::array<double, max_axes>, max_axes>& hess) const {
  val = value(x);
  gradient(x, grad);
  hessian(x, hess);
}

namespace {

TrigTerm term(double coeff, std::initializer_list<std::pair<int, TrigTerm::Factor>> parts,
              int frequency) {
  TrigTerm t;
  t.coeff = coeff;
  for (auto& [axis, f] : parts) {
    t.factor[axis] = f;
    t.freq[axis] = frequency;
  }
  return t;
}

} // namespace

AnalyticScalar make_scalar(const std::string& name, int cdim, double amplitude,
                           int frequency) {
  require(cdim == 1 || cdim == 2, Status::argument_error,
          "scalar catalog: complex dimension must be 1 or 2");
  require(frequency >= 1, Status::argument_error,
          "scalar catalog: frequency must be a positive integer");
  using F = TrigTerm::Factor;
  AnalyticScalar s;
  s.name = name;
  s.axes = 2 * cdim;
  double a = amplitude;
  if (name == "zero") {
    return s;
  }
  if (name == "cos_x1") {
    s.terms = {term(a, {{0, F::cos}}, frequency)};
    return s;
  }
  if (name == "cos_x2") {
    s.terms = {term(a, {{1, F::cos}}, frequency)};
    return s;
  }
  if (name == "cos12") {
    s.terms = {term(a, {{0, F::cos}, {1, F::cos}}, frequency)};
    return s;
  }
  if (name == "cos13") {
    require(cdim == 2, Status::argument_error,
            "scalar catalog: cos13 needs complex dimension 2");
    s.terms = {term(a, {{0, F::cos}, {2, F::cos}}, frequency)};
    return s;
  }
  if (name == "trig_mix") {
    if (cdim == 2) {
      s.terms = {term(a, {{0, F::cos}, {2, F::cos}}, frequency),
                 term(0.5 * a, {{1, F::sin}, {3, F::sin}}, frequency),
                 term(0.25 * a, {{1, F::cos}}, frequency)};
    } else {
      s.terms = {term(a, {{0, F::cos}}, frequency),
                 term(0.5 * a, {{1, F::sin}}, frequency)};
    }
    return s;
  }
  fail(Status::argument_error, "unknown scalar catalog entry: " + name);
}

std::vector<std::string> scalar_catalog_names() {
  return {"zero", "cos_x1", "cos_x2", "cos12", "cos13", "trig_mix"};
}

ScalarField sample(const AnalyticScalar& s, const PeriodicGrid& g) {
  require(s.axes == g.axes(), Status::argument_error,
          "scalar field and grid dimensions disagree");
  ScalarField out(g);
  std::array<double, max_axes> x{};
  for_each_point(g, [&](std::size_t p, const std::array<int, max_axes>& c) {
    grid_x(g, c, x);
    out[p] = s.value(x);
  });
  return out;
}

void HermitianBackground::value(const std::array<double, max_axes>& x,
                                const PeriodicGrid& g,
                                const std::array<int, max_axes>& c,
                                Complex* out) const {
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[j * n + i] = (i == j) ? 1.0 : 0.0;
  if (name == "identity") return;
  if (name == "diag_cos") {
    out[0] = 1.0 + eps * std::cos(two_pi * x[0]);
    if (n == 2) out[3] = 1.0 + eps * std::cos(two_pi * x[2]);
    return;
  }
  if (name == "herm_cos") {
    Complex z(std::cos(two_pi * x[0]), std::sin(two_pi * x[2]));
    out[2] = 0.5 * eps * z; // column-major (0,1) entry
    out[1] = std::conj(out[2]);
    return;
  }
  if (name == "bad_point") {
    auto bad = bad_cell(g);
    bool here = true;
    for (int a = 0; a < g.axes(); ++a)
      if (c[a] != bad[a]) here = false;
    if (here) out[0] = -static_cast<double>(n);
    return;
  }
  fail(Status::argument_error, "unknown background catalog entry: " + name);
}

std::array<int, max_axes> HermitianBackground::bad_cell(const PeriodicGrid& g) {
  std::array<int, max_axes> c{};
  for (int a = 0; a < g.axes(); ++a) c[a] = g.size[a] / 3;
  return c;
}

HermitianBackground make_background(const std::string& name, int cdim,
                                    double eps) {
  require(cdim == 1 || cdim == 2, Status::argument_error,
          "background catalog: complex dimension must be 1 or 2");
  bool known = false;
  for (const auto& k : background_catalog_names())
    if (k == name) known = true;
  require(known, Status::argument_error,
          "unknown background catalog entry: " + name);
  require(!(name == "herm_cos" && cdim != 2), Status::argument_error,
          "background catalog: herm_cos needs complex dimension 2");
  HermitianBackground b;
  b.name = name;
  b.n = cdim;
  b.eps = eps;
  return b;
}

std::vector<std::string> background_catalog_names() {
  return {"identity", "diag_cos", "herm_cos", "bad_point"};
}

} // namespace ahs::fields
