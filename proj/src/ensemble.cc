#include "hypocert/ensemble.h"

#include <cmath>

namespace hypocert {

namespace {

ComplexMatrix gaussian(std::mt19937_64& rng, Eigen::Index rows,
                       Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix G(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      G(i, j) = Complex(re, normal(rng));
    }
  }
  return G;
}

// Hermitian with eigenvalues in [lo, 1] and the largest equal to 1.
ComplexMatrix random_spd_block(std::mt19937_64& rng, Eigen::Index n, double lo) {
  if (n == 0) return ComplexMatrix(0, 0);
  std::uniform_real_distribution<double> uniform(lo, 1.0);
  Eigen::VectorXd eigs(n);
  for (Eigen::Index i = 0; i < n; ++i) eigs(i) = uniform(rng);
  eigs(0) = 1.0;
  const ComplexMatrix Q = random_unitary(rng, n);
  return hermitian_part(Q * eigs.cast<Complex>().asDiagonal() * Q.adjoint());
}

}  // namespace

ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  const ComplexMatrix G = gaussian(rng, n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(G);
  ComplexMatrix Q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mag = std::abs(R(i, i));
    if (mag > 0.0) Q.col(i) *= R(i, i) / mag;
  }
  return Q;
}

OperatorSplit random_accretive_split(std::mt19937_64& rng, Eigen::Index n,
                                     double norm_bound) {
  const ComplexMatrix A = gaussian(rng, n, n);
  // Positive semidefinite part of rank about n/2 plus a skew part.
  const ComplexMatrix B = gaussian(rng, n, (n + 1) / 2);
  ComplexMatrix R = hermitian_part(B * B.adjoint());
  ComplexMatrix J = 0.5 * (A - A.adjoint());
  ComplexMatrix C = R - J;
  C *= norm_bound / operator_norm(C);
  return hermitian_split(C);
}

OperatorSplit random_index_one_split(std::mt19937_64& rng, Eigen::Index n0,
                                     Eigen::Index n1, double gamma_min) {
  const Eigen::Index n2 = n1;
  const Eigen::Index n = n0 + n1 + n2;
  const Eigen::Index o1 = n0;
  const Eigen::Index o2 = n0 + n1;

  ComplexMatrix R = ComplexMatrix::Zero(n, n);
  R.block(0, 0, n0, n0) = random_spd_block(rng, n0, gamma_min);
  R.block(o1, o1, n1, n1) = random_spd_block(rng, n1, gamma_min);
  if (n0 > 0 && n1 > 0) {
    // Only one of the two blocks may carry the eigenvalue 1.
    R.block(o1, o1, n1, n1) *= std::uniform_real_distribution<double>(
        std::max(gamma_min, 0.5), 1.0)(rng);
  }

  ComplexMatrix J21;
  do {
    J21 = gaussian(rng, n2, n1);
  } while (min_singular_value(J21) < 0.1);

  const ComplexMatrix A = gaussian(rng, n, n);
  ComplexMatrix J = 0.5 * (A - A.adjoint());
  J.block(o2, 0, n2, n0).setZero();
  J.block(0, o2, n0, n2).setZero();
  J.block(o2, o1, n2, n1) = J21;
  J.block(o1, o2, n1, n2) = -J21.adjoint();

  const ComplexMatrix W = random_unitary(rng, n);
  return split_from_parts(W * R * W.adjoint(), W * J * W.adjoint());
}

}  // namespace hypocert
