#pragma once

#include <optional>
#include <vector>

#include "hypocert/linops.h"

namespace hypocert {

inline constexpr double kDefaultCoercivityTol = 1e-9;

/// Which of the two equivalent coercivity conditions defines the index.
///   kCBased: sum_j (C*)^j C_H C^j
///   kSBased: sum_j C_S^j C_H (C_S*)^j
enum class HcVariant { kCBased, kSBased };

const char* to_string(HcVariant variant);

struct HcIndexResult {
  /// Empty when no m <= max_m gives a coercive sum.
  std::optional<int> m_hc;
  /// lambda_min of the sum at m = m_hc (at max_m when the index is infinite).
  double kappa = 0.0;
  HcVariant variant = HcVariant::kCBased;
  /// lambda_min of the partial sum after each j = 0..max_m.
  std::vector<double> partial_sums_min_eigs;

  bool finite() const { return m_hc.has_value(); }
};

HcIndexResult hc_index(const OperatorSplit& split, HcVariant variant,
                       int max_m, double coercivity_tol = kDefaultCoercivityTol);

/// lambda_min(R + J R J*). Throws kIndexTooHigh when it is not positive.
double kappa1(const OperatorSplit& split,
              double coercivity_tol = kDefaultCoercivityTol);

/// The Lyapunov operator P = sum_{j<=m} (C*)^j C^j and the decay rate of
/// ||x||_P it implies, kappa / ||P||, under both index conditions.
struct LyapunovP {
  ComplexMatrix P;
  double norm_P = 0.0;
  double kappa_C = 0.0;
  double kappa_S = 0.0;
  double rate_C = 0.0;
  double rate_S = 0.0;
};

LyapunovP build_P(const OperatorSplit& split, int m);

}  // namespace hypocert
