#pragma once

#include <span>
#include <vector>

#include "hypocert/linops.h"
#include "hypocert/staircase.h"

namespace hypocert {

inline constexpr double kDefaultEpsilonSafety = 0.99;

/// {0.1, 0.2, ..., 0.9}
std::vector<double> default_delta_schur_grid();

/// Eta-uniform exponential decay certificate built from the weighted norm
/// <x, Y_eta x>, Y_eta = I + (eps/eta) [[0, J21*], [J21, 0]] on H1 (+) H2.
struct LongTimeCertificate {
  double eps = 0.0;
  double delta_schur = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double omega = 0.0;
  double gamma = 0.0;
  double lam_min_J21 = 0.0;  // lambda_min(J21 J21*)
  double lam_max_J21 = 0.0;  // lambda_max(J21 J21*)
  double alpha = 0.0;        // eps * sqrt(lam_max_J21), at most 1/2
  double lambda0 = 0.0;      // kappa2 / (1 + alpha)
  Eigen::Index n0 = 0, n1 = 0, n2 = 0;
  std::vector<double> delta_grid;

  /// kappa2 / lambda_max(Y_eta) bound, kappa2 / (1 + alpha/eta).
  double lambda_eta(double eta) const;
};

/// ||W(s)||^2 with W(s) = [-J21 J10, J21(-J11 + s R11) + J22 J21].
double omega_at(const StaircaseForm& sf, double s);

/// sup over s = 1/eta in [0, 1] of ||W(s)||^2. The map s -> ||W(s)|| is
/// convex, so the supremum sits at an endpoint.
double compute_omega(const StaircaseForm& sf);

/// Left-hand side of the sufficient LMI condition,
///   2 gamma - eps (2 lmax + 2 delta lmin + omega / (2 (1 - delta) lmin)).
double condition2(const StaircaseForm& sf, double omega, double delta_schur,
                  double eps);

/// Largest admissible eps: min(1 / (2 sqrt(lmax)), safety * eps2), where eps2
/// zeroes condition2.
double select_epsilon(const StaircaseForm& sf, double delta_schur,
                      double safety = kDefaultEpsilonSafety);
double select_epsilon(const StaircaseForm& sf, double omega,
                      double delta_schur, double safety);

/// Y_eta in the staircase basis.
ComplexMatrix build_Y_eta(const StaircaseForm& sf, double eps, double eta);

/// Runs select_epsilon over the delta grid and keeps the largest lambda0.
LongTimeCertificate long_time_certificate(
    const OperatorSplit& split, const StaircaseForm& sf,
    std::span<const double> delta_schur_grid);
LongTimeCertificate long_time_certificate(const OperatorSplit& split,
                                          const StaircaseForm& sf);

/// lambda_min(C_eta* Y_eta + Y_eta C_eta - 2 kappa2 I), assembled in the
/// input basis. Nonnegative for a sound certificate.
double verify_lmi(const OperatorSplit& split, const LongTimeCertificate& cert,
                  const StaircaseForm& sf, double eta);

/// min(1, sqrt((eta + alpha) / (eta - alpha)) exp(-lambda_eta t)).
double envelope_long(const LongTimeCertificate& cert, double eta, double t);

}  // namespace hypocert
