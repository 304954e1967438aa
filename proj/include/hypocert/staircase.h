#pragma once

#include "hypocert/linops.h"

namespace hypocert {

inline constexpr double kDefaultRankTol = 1e-9;

/// Orthonormal bases of ker R and (ker R)^perp.
struct KernelSplit {
  ComplexMatrix kernel_basis;  // n x dim ker R
  ComplexMatrix range_basis;   // n x (n - dim ker R)
  /// Smallest eigenvalue of R on (ker R)^perp; 0 when the range is empty.
  double gamma = 0.0;
};

/// Eigenvectors of R with eigenvalue below rank_tol * lambda_max(R) span the
/// kernel. Throws kNoGap if an eigenvalue lies within a factor 10 of that
/// threshold.
KernelSplit kernel_split(const ComplexMatrix& R,
                         double rank_tol = kDefaultRankTol);

/// The refined staircase form H = H0 (+) H1 (+) H2 of an index-one operator.
///
/// In the basis U = [H0 | H1 | H2],
///   U* R U = diag(R00, R11, 0),
///   U* J U = [[J00, -J10*,   0  ],
///             [J10,  J11, -J21* ],
///             [ 0,   J21,  J22  ]],
/// with J21 square, nonsingular and, by choice of basis, diagonal with
/// positive entries in decreasing order.
struct StaircaseForm {
  ComplexMatrix U;
  Eigen::Index n0 = 0;
  Eigen::Index n1 = 0;
  Eigen::Index n2 = 0;
  ComplexMatrix R00, R11;
  ComplexMatrix J00, J10, J11, J21, J22;
  double gamma = 0.0;
  double rank_tol = kDefaultRankTol;

  Eigen::Index dim() const { return n0 + n1 + n2; }
  /// R and J reassembled in the staircase basis from the stored blocks.
  ComplexMatrix R_blocks() const;
  ComplexMatrix J_blocks() const;
  /// Eigenvalues of J21 J21* in increasing order.
  Eigen::VectorXd J21_gram_eigenvalues() const;
  /// U M U*, mapping a staircase-basis matrix back to the input basis.
  ComplexMatrix to_input_basis(const ComplexMatrix& M) const;
};

/// Throws kCoerciveCase when ker R = {0} and kNotIndexOne when the coupling
/// ker R <- (ker R)^perp has rank below dim ker R.
StaircaseForm staircase_form(const OperatorSplit& split,
                             double rank_tol = kDefaultRankTol);

}  // namespace hypocert
