#pragma once

#include <Eigen/Dense>
#include <complex>

#include "errors.hpp"
#include "sym_ops.hpp"

namespace ahs::pencil {

/// Dense Hermitian pencil algebra for the pointwise eigenvalue problem
/// gt v = mu chi v with chi Hermitian positive definite. Dimensions are
/// tiny (n <= 4), so everything lives on the stack.

using Complex = std::complex<double>;
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::ColMajor, 4, 4>;
using CVec = Eigen::Matrix<Complex, Eigen::Dynamic, 1, Eigen::ColMajor, 4, 1>;
using RVec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 4, 1>;

inline constexpr int max_dim = 4;
inline constexpr double hermiticity_tol = 1e-12;
inline constexpr double diag_residual_tol = 1e-10;

struct HermitianPencil {
  CMat chi;  // Hermitian positive definite
  CMat gt;   // Hermitian within hermiticity_tol
};

/// Eigenvalues sorted descending and a chi-orthonormal eigenframe:
/// frame^* chi frame = I, frame^* gt frame = diag(mu).
struct SpectralData {
  RVec mu;
  CMat frame;
};

/// Cholesky reduction to a standard Hermitian problem. Throws on
/// non-Hermitian input beyond tolerance or indefinite chi; the
/// diagonalization residual is verified to diag_residual_tol.
SpectralData pencil_eigen(const HermitianPencil& p);

/// First-derivative coefficient matrix of gt -> f(mu(gt)) in the ambient
/// gauge: frame diag(f_i) frame^*. The pairing with a Hermitian direction
/// H is tr(F H), which is gauge-free. Positive definite on the cone.
CMat linearization_coeffs(const cone::SymmetricOperator& op,
                          const SpectralData& sd);

/// sum_i f_i(mu) > 0; equals tr(chi F) for F = linearization_coeffs.
double mean_f_sum(const cone::SymmetricOperator& op, const SpectralData& sd);

} // namespace ahs::pencil
