#include "hypocert/linops.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypocert/error.h"

namespace hypocert {

namespace {

// Coefficients of the [13/13] Pade approximant to exp and the 1-norm bound
// below which it is accurate to double precision (Higham 2005).
constexpr double kPade13[] = {64764752532480000.0,
                              32382376266240000.0,
                              7771770303897600.0,
                              1187353796428800.0,
                              129060195264000.0,
                              10559470521600.0,
                              670442572800.0,
                              33522128640.0,
                              1323241920.0,
                              40840800.0,
                              960960.0,
                              16380.0,
                              182.0,
                              1.0};
constexpr double kTheta13 = 5.371920351148152;

double one_norm(const ComplexMatrix& A) {
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

bool all_finite(const ComplexMatrix& A) {
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      const Complex z = A(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

ComplexMatrix hermitian_part(const ComplexMatrix& A) {
  return 0.5 * (A + A.adjoint());
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& H) {
  if (H.size() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(H),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& H) {
  return hermitian_eigenvalues(H).minCoeff();
}

double max_eigenvalue(const ComplexMatrix& H) {
  return hermitian_eigenvalues(H).maxCoeff();
}

// The largest singular value is taken as sqrt(lambda_max(A* A)) from the
// Hermitian eigensolver: accurate to a few ulps relative and much faster than
// a Jacobi SVD. The divide-and-conquer SVD was observed to underestimate the
// norm of near-unitary propagators by up to 2e-4, which would make envelope
// checks optimistic, so it is not used.
double operator_norm(const ComplexMatrix& A) {
  if (A.size() == 0) return 0.0;
  const ComplexMatrix gram = A.adjoint() * A;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(gram),
                                                      Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(solver.eigenvalues().maxCoeff(), 0.0));
}

// Squaring would lose the small singular values, so this one keeps the
// Jacobi SVD.
double min_singular_value(const ComplexMatrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  return svd.singularValues().minCoeff();
}

OperatorSplit hermitian_split(const ComplexMatrix& C, double accretivity_tol) {
  if (C.rows() != C.cols() || C.rows() == 0) {
    throw Error(ErrorCode::kNotSquare,
                "operator must be square, got " + std::to_string(C.rows()) +
                    "x" + std::to_string(C.cols()));
  }
  if (!all_finite(C)) {
    throw Error(ErrorCode::kNonFinite, "operator has non-finite entries");
  }
  OperatorSplit split;
  split.C = C;
  split.R = 0.5 * (C + C.adjoint());
  split.J = -0.5 * (C - C.adjoint());
  const Eigen::VectorXd eigs = hermitian_eigenvalues(split.R);
  split.norm_R = std::max(std::abs(eigs(0)), std::abs(eigs(eigs.size() - 1)));
  if (eigs(0) < -accretivity_tol * split.norm_R) {
    throw Error(ErrorCode::kNotAccretive,
                "Hermitian part has eigenvalue " + std::to_string(eigs(0)));
  }
  return split;
}

OperatorSplit split_from_parts(const ComplexMatrix& R, const ComplexMatrix& J,
                               double accretivity_tol) {
  if (R.rows() != J.rows() || R.cols() != J.cols()) {
    throw Error(ErrorCode::kNotSquare, "R and J shapes differ");
  }
  const ComplexMatrix R_sym = hermitian_part(R);
  const ComplexMatrix J_skew = 0.5 * (J - J.adjoint());
  return hermitian_split(R_sym - J_skew, accretivity_tol);
}

ComplexMatrix build_C_eta(const OperatorSplit& split, double eta) {
  if (!(eta >= 1.0)) {
    throw Error(ErrorCode::kEtaOutOfRange,
                "eta must be >= 1, got " + std::to_string(eta));
  }
  if (eta == 1.0) return split.C;
  return split.R - eta * split.J;
}

OperatorSplit scale_skew(const OperatorSplit& split, double eta) {
  OperatorSplit scaled;
  scaled.C = build_C_eta(split, eta);
  scaled.R = split.R;
  scaled.J = eta * split.J;
  scaled.norm_R = split.norm_R;
  return scaled;
}

ComplexMatrix expm(const ComplexMatrix& A) {
  const Eigen::Index n = A.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
  if (n == 0) return A;

  const double norm = one_norm(A);
  if (!std::isfinite(norm)) {
    throw Error(ErrorCode::kNonFinite, "expm argument is not finite");
  }
  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  const ComplexMatrix As = A * std::ldexp(1.0, -squarings);

  const double* b = kPade13;
  const ComplexMatrix A2 = As * As;
  const ComplexMatrix A4 = A2 * A2;
  const ComplexMatrix A6 = A4 * A2;
  ComplexMatrix inner = b[13] * A6 + b[11] * A4 + b[9] * A2;
  ComplexMatrix U = A6 * inner;
  U += b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I;
  U = As * U;
  inner = b[12] * A6 + b[10] * A4 + b[8] * A2;
  ComplexMatrix V = A6 * inner;
  V += b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;

  ComplexMatrix result = (V - U).partialPivLu().solve(V + U);
  for (int k = 0; k < squarings; ++k) result = result * result;

  if (!all_finite(result)) {
    throw Error(ErrorCode::kNonFinite, "matrix exponential overflowed");
  }
  return result;
}

ComplexMatrix propagator(const ComplexMatrix& C, double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "time must be nonnegative");
  }
  if (t == 0.0) return ComplexMatrix::Identity(C.rows(), C.cols());
  return expm(-t * C);
}

double propagator_norm(const ComplexMatrix& C, double t) {
  if (t == 0.0) return 1.0;
  return operator_norm(propagator(C, t));
}

}  // namespace hypocert
