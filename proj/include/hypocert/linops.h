#pragma once

#include <complex>

#include <Eigen/Dense>

namespace hypocert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultAccretivityTol = 1e-10;

/// An accretive operator C together with its Hermitian part R = (C + C*)/2
/// and J = -(C - C*)/2, so that C = R - J and J* = -J.
struct OperatorSplit {
  ComplexMatrix C;
  ComplexMatrix R;
  ComplexMatrix J;
  double norm_R = 0.0;

  Eigen::Index dim() const { return C.rows(); }
};

/// Splits C into Hermitian and skew parts.
///
/// Throws kNotSquare for non-square input, kNonFinite for NaN/Inf entries and
/// kNotAccretive when lambda_min(R) < -accretivity_tol * ||R||.
OperatorSplit hermitian_split(const ComplexMatrix& C,
                              double accretivity_tol = kDefaultAccretivityTol);

/// Assembles a split from a Hermitian R and skew-Hermitian J (C = R - J).
/// Both inputs are symmetrized first, so small assembly errors are absorbed.
OperatorSplit split_from_parts(const ComplexMatrix& R, const ComplexMatrix& J,
                               double accretivity_tol = kDefaultAccretivityTol);

/// C_eta = R - eta * J for eta >= 1 (kEtaOutOfRange otherwise).
ComplexMatrix build_C_eta(const OperatorSplit& split, double eta);

/// Same split with the skew part multiplied by eta.
OperatorSplit scale_skew(const OperatorSplit& split, double eta);

/// Matrix exponential by scaling and squaring with the [13/13] Pade
/// approximant. Throws kNonFinite if the result overflows.
ComplexMatrix expm(const ComplexMatrix& A);

/// The propagator e^{-tC}.
ComplexMatrix propagator(const ComplexMatrix& C, double t);

/// ||e^{-tC}||_2, the largest singular value of the propagator.
double propagator_norm(const ComplexMatrix& C, double t);

/// Largest singular value.
double operator_norm(const ComplexMatrix& A);
/// Smallest singular value.
double min_singular_value(const ComplexMatrix& A);

ComplexMatrix hermitian_part(const ComplexMatrix& A);

/// Eigenvalues of the Hermitian part of H in increasing order.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& H);
double min_eigenvalue(const ComplexMatrix& H);
double max_eigenvalue(const ComplexMatrix& H);

bool all_finite(const ComplexMatrix& A);

}  // namespace hypocert
