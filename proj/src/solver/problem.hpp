#pragma once

#include <vector>

#include "analytic.hpp"
#include "geometry.hpp"
#include "pencil.hpp"
#include "sym_ops.hpp"

namespace ahs::solver {

using fields::AnalyticScalar;
using fields::Complex;
using fields::GeometryFields;
using fields::MatrixField;
using fields::PeriodicGrid;
using fields::ScalarField;

enum class Normalization { sup_zero, mean_zero };

Normalization normalization_from_name(const std::string& name);
std::string normalization_name(Normalization n);

/// The discrete equation F(omega_u) = f(mu(g + ddbar u)) = rhs + c on the
/// model manifold. chi is the identity for every geometry preset, so the
/// pencil at each point is (I, g(x) + ddbar(u)(x)).
struct ProblemSpec {
  GeometryFields geometry;
  MatrixField background;  // g blocks; for nm1_ma this is the reduced omega
  cone::SymmetricOperator op;
  ScalarField h;
  Normalization normalization = Normalization::sup_zero;
};

/// Samples a catalog background. With eta_reduction (the nm1_ma pipeline)
/// the catalog entry is the form eta and the returned blocks are
/// (tr eta) I - (n-1) eta, whose eigenvalue map satisfies
/// T(mu(omega)) = eigenvalues(eta).
MatrixField assemble_background(const GeometryFields& geo,
                                const fields::HermitianBackground& bg,
                                bool eta_reduction);

/// f(mu(g)) per point: the right-hand side making (u,c) = (0,0) an exact
/// solution at t = 0. Throws config_error naming the first point whose
/// background eigenvalues leave the cone.
ScalarField h_zero(const ProblemSpec& prob);

/// rhs_base = t*h + (1-t)*h0.
ScalarField path_rhs(const ProblemSpec& prob, const ScalarField& h0, double t);

/// Eigenvalues of (I, g + ddbar u) at every point, npoints x n row-major.
std::vector<double> state_eigenvalues(const ProblemSpec& prob,
                                      const ScalarField& u);

inline constexpr int coeff_stride(int ax) {
  return ax + ax * (ax - 1) / 2 + ax;
}

struct EvalOptions {
  bool linearization = false;
  bool monitors = false;
};

/// One full pass over the grid at state (u, c). If some point's eigenvalues
/// leave the cone the pass stops with admissible = false and the witness
/// point; residual and the optional blocks are only meaningful when
/// admissible.
struct StateEval {
  bool admissible = false;
  std::size_t first_bad = static_cast<std::size_t>(-1);
  int bad_index = 0;
  ScalarField residual;
  double residual_sup = 0.0;

  // with EvalOptions.linearization: pairing matrices F (n x n col-major
  // per point) and real stencil coefficients of L, laid out per point as
  // [second-difference diagonals (ax), cross terms in pair order (0,1),
  // (0,2), ..., doubled], then first-difference coefficients (ax)]
  std::vector<Complex> fmat;
  std::vector<double> coeff;

  // with EvalOptions.monitors
  double f_sum_min = 0.0;
  double trace_min = 0.0;
  double mu_abs_max = 0.0;
};

StateEval evaluate(const ProblemSpec& prob, const ScalarField& rhs_base,
                   const ScalarField& u, double c, const EvalOptions& opt);

/// L(psi) - c_dot using the coefficients of a prior full evaluation. This
/// is the exact derivative of the residual map psi -> residual(u + psi, c)
/// at the evaluated state, up to rounding.
void linearized_apply(const ProblemSpec& prob, const StateEval& eval,
                      const double* psi, double c_dot, double* out);
void linearized_apply(const ProblemSpec& prob, const StateEval& eval,
                      const ScalarField& psi, double c_dot, ScalarField& out);

enum class MmsMode { analytic, discrete };

/// Manufactured problem: h := f(mu(g + ddbar u*)) pointwise, c_true = 0.
/// analytic mode uses exact coordinate derivatives of u* (the solver then
/// recovers u* up to stencil error); discrete mode uses the grid operator,
/// making the sampled u* an exact discrete solution. Throws argument_error
/// if u* is inadmissible for the background.
struct ManufacturedProblem {
  ProblemSpec problem;
  ScalarField u_star;
};
ManufacturedProblem manufactured_problem(GeometryFields geo, MatrixField bg,
                                         cone::SymmetricOperator op,
                                         const AnalyticScalar& u_star,
                                         MmsMode mode, Normalization norm);

/// Certification of a candidate subsolution for this problem's target h.
cone::SubsolutionCertificate certify_problem(const ProblemSpec& prob,
                                             const ScalarField& u_underline);

double mean(const ScalarField& f);
double sup_abs(const ScalarField& f);

} // namespace ahs::solver
