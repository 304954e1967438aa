#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hypocert/ensemble.h"
#include "hypocert/linops.h"

namespace hypocert::testing {

/// C = [[1, -1], [1, 0]]: R = diag(1, 0), J = [[0, 1], [-1, 0]].
inline ComplexMatrix paper_example() {
  ComplexMatrix C(2, 2);
  C << 1.0, -1.0, 1.0, 0.0;
  return C;
}

inline OperatorSplit paper_split() { return hermitian_split(paper_example()); }

/// Ten seeded 6 x 6 index-one splits cycling through the staircase shapes
/// (n0, n1, n1) = (4, 1, 1), (2, 2, 2), (0, 3, 3).
inline std::vector<OperatorSplit> random_index_one_ensemble(
    std::size_t count = 10, std::uint64_t seed = 20240611) {
  constexpr Eigen::Index kShapes[3][2] = {{4, 1}, {2, 2}, {0, 3}};
  std::vector<OperatorSplit> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed + i);
    const auto& shape = kShapes[i % 3];
    out.push_back(random_index_one_split(rng, shape[0], shape[1]));
  }
  return out;
}

inline const std::vector<double>& criterion_etas() {
  static const std::vector<double> etas{1.0, 1.5, 2.0, 5.0, 10.0, 100.0};
  return etas;
}

inline const std::vector<double>& envelope_etas() {
  static const std::vector<double> etas{1.0, 2.0, 4.0, 8.0, 16.0};
  return etas;
}

}  // namespace hypocert::testing
