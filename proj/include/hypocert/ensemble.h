#pragma once

#include <random>

#include "hypocert/linops.h"

namespace hypocert {

/// Haar-distributed unitary (QR of a complex Gaussian matrix with the
/// phases of R's diagonal removed).
ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n);

/// Random accretive split of size n with ||C||_2 <= norm_bound.
OperatorSplit random_accretive_split(std::mt19937_64& rng, Eigen::Index n,
                                     double norm_bound);

/// Random split with hypocoercivity index one, built in staircase
/// coordinates: dims (n0, n1, n1), spectral gap >= gamma_min, ||R|| = 1,
/// sigma_min(J21) >= 0.1, then conjugated by a random unitary.
OperatorSplit random_index_one_split(std::mt19937_64& rng, Eigen::Index n0,
                                     Eigen::Index n1, double gamma_min = 0.2);

}  // namespace hypocert
