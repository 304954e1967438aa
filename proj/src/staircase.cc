#include "hypocert/staircase.h"

#include <string>

#include "hypocert/error.h"

namespace hypocert {

KernelSplit kernel_split(const ComplexMatrix& R, double rank_tol) {
  const Eigen::Index n = R.rows();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(R));
  const Eigen::VectorXd& eigs = solver.eigenvalues();
  const ComplexMatrix& vecs = solver.eigenvectors();

  const double lam_max = eigs(n - 1);
  const double threshold = rank_tol * std::max(lam_max, 0.0);

  Eigen::Index kernel_dim = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = eigs(i);
    if (lam > threshold / 10.0 && lam < threshold * 10.0) {
      throw Error(ErrorCode::kNoGap,
                  "eigenvalue " + std::to_string(lam) +
                      " is too close to the kernel threshold " +
                      std::to_string(threshold));
    }
    if (lam <= threshold) ++kernel_dim;
  }

  KernelSplit out;
  // Eigenvalues are sorted ascending, so the kernel comes first.
  out.kernel_basis = vecs.leftCols(kernel_dim);
  out.range_basis = vecs.rightCols(n - kernel_dim);
  out.gamma = kernel_dim < n ? eigs(kernel_dim) : 0.0;
  return out;
}

StaircaseForm staircase_form(const OperatorSplit& split, double rank_tol) {
  const KernelSplit ks = kernel_split(split.R, rank_tol);
  const Eigen::Index k = ks.kernel_basis.cols();
  const Eigen::Index r = ks.range_basis.cols();
  if (k == 0) {
    throw Error(ErrorCode::kCoerciveCase,
                "Hermitian part is coercive; no staircase form needed");
  }

  // Coupling from (ker R)^perp into ker R.
  const ComplexMatrix coupling =
      ks.kernel_basis.adjoint() * split.J * ks.range_basis;

  Eigen::Index rank = 0;
  ComplexMatrix left, right;
  if (r > 0) {
    Eigen::JacobiSVD<ComplexMatrix> svd(coupling,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cutoff = rank_tol * (sv.size() > 0 ? sv(0) : 0.0);
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > cutoff && sv(i) > 0.0) ++rank;
    }
    left = svd.matrixU();
    right = svd.matrixV();
  }
  if (rank < k) {
    throw Error(ErrorCode::kNotIndexOne,
                "coupling into ker R has rank " + std::to_string(rank) +
                    " < dim ker R = " + std::to_string(k));
  }

  StaircaseForm sf;
  sf.rank_tol = rank_tol;
  sf.n1 = rank;
  sf.n2 = k;
  sf.n0 = r - rank;
  sf.gamma = ks.gamma;

  const Eigen::Index n = split.dim();
  sf.U.resize(n, n);
  sf.U.leftCols(sf.n0) = ks.range_basis * right.rightCols(sf.n0);
  sf.U.middleCols(sf.n0, sf.n1) = ks.range_basis * right.leftCols(sf.n1);
  sf.U.rightCols(sf.n2) = ks.kernel_basis * left;

  const ComplexMatrix Rs = sf.U.adjoint() * split.R * sf.U;
  const ComplexMatrix Js = sf.U.adjoint() * split.J * sf.U;
  const Eigen::Index o1 = sf.n0;
  const Eigen::Index o2 = sf.n0 + sf.n1;

  sf.R00 = hermitian_part(Rs.block(0, 0, sf.n0, sf.n0));
  sf.R11 = hermitian_part(Rs.block(o1, o1, sf.n1, sf.n1));
  sf.J00 = Js.block(0, 0, sf.n0, sf.n0);
  sf.J10 = Js.block(o1, 0, sf.n1, sf.n0);
  sf.J11 = Js.block(o1, o1, sf.n1, sf.n1);
  sf.J21 = Js.block(o2, o1, sf.n2, sf.n1);
  sf.J22 = Js.block(o2, o2, sf.n2, sf.n2);
  return sf;
}

ComplexMatrix StaircaseForm::R_blocks() const {
  const Eigen::Index n = dim();
  ComplexMatrix M = ComplexMatrix::Zero(n, n);
  M.block(0, 0, n0, n0) = R00;
  M.block(n0, n0, n1, n1) = R11;
  return M;
}

ComplexMatrix StaircaseForm::J_blocks() const {
  const Eigen::Index n = dim();
  const Eigen::Index o1 = n0;
  const Eigen::Index o2 = n0 + n1;
  ComplexMatrix M = ComplexMatrix::Zero(n, n);
  M.block(0, 0, n0, n0) = J00;
  M.block(0, o1, n0, n1) = -J10.adjoint();
  M.block(o1, 0, n1, n0) = J10;
  M.block(o1, o1, n1, n1) = J11;
  M.block(o1, o2, n1, n2) = -J21.adjoint();
  M.block(o2, o1, n2, n1) = J21;
  M.block(o2, o2, n2, n2) = J22;
  return M;
}

Eigen::VectorXd StaircaseForm::J21_gram_eigenvalues() const {
  return hermitian_eigenvalues(J21 * J21.adjoint());
}

ComplexMatrix StaircaseForm::to_input_basis(const ComplexMatrix& M) const {
  return U * M * U.adjoint();
}

}  // namespace hypocert
