#pragma once

#include <span>

#include "hypocert/linops.h"
#include "hypocert/longtime.h"

namespace hypocert {

/// Eta-uniform short-time bound ||P_eta(t)|| <= 1 - c t^3 on [0, tau].
///
/// delta_short is unrelated to LongTimeCertificate::delta_schur.
struct ShortTimeCertificate {
  double beta = 0.0;   // ||J||
  double theta = 0.0;  // 1 + beta
  double kappa1 = 0.0;
  double kappa3 = 0.0;
  double delta_short = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double tau3 = 0.0;
  double tau = 0.0;
  double r = 1.0;
  /// False when the r-equation has no root above 1 (alpha = 0); r is then 1.
  bool r_found = true;
  double c = 0.0;
  double alpha = 0.0;
  double lambda0 = 0.0;

  /// tau/eta + ln(1 + 2 alpha / (eta - alpha)) / (2 lambda0).
  double t_eta(double eta) const;
};

/// ((3 - sqrt 5) / 2) * kappa1.
double kappa3(double kappa1);

/// 1 + eta^2/2 - sqrt(1 + eta^4/4), evaluated without cancellation.
double epsilon_curve(double eta);

/// min over etas of lambda_min(R + C_eta* R C_eta) - kappa3. Requires
/// ||R|| = 1 (kNotNormalized otherwise).
double verify_kappa3(const OperatorSplit& split, double kappa3,
                     std::span<const double> etas);

/// (e^{2 theta tau} - 1 - 2 theta tau) / (theta tau)
double delta1(double theta, double tau);
/// (e^{2 theta tau} - 1 - 2 theta tau - 2 theta^2 tau^2
///  - (4/3) theta^3 tau^3) / (theta tau^3)
double delta3(double theta, double tau);

/// Roots of delta1(theta, .) = delta and delta3(theta, .) = target.
double solve_tau1(double theta, double delta);
double solve_tau3(double theta, double target);

/// Infimum of ||sqrt(R) J x|| over unit x with ||sqrt(R) x||^2 <= delta,
/// from the Lagrangian dual max_{mu >= 0} lambda_min(J* R J + mu R) - mu delta.
struct Tau2Result {
  double infimum = 0.0;  // of ||sqrt(R) J x||, not squared
  double mu = 0.0;       // maximizing multiplier
  double tau2 = 0.0;     // sqrt(12 delta) / (infimum + sqrt(delta))
};

Tau2Result tau2_dual(const OperatorSplit& split, double delta);
double tau2(const OperatorSplit& split, double delta);

/// sqrt(1 + 2 alpha / (r - alpha)) * exp(-lambda0 tau (r - 1) / r).
double r_equation_lhs(double alpha, double lambda0, double tau, double r);

/// Requires ||R|| = 1.
ShortTimeCertificate short_time_certificate(
    const OperatorSplit& split, const LongTimeCertificate& long_cert);

/// 1 - c t^3 on [0, tau]; kOutOfWindow beyond tau.
double envelope_short(const ShortTimeCertificate& cert, double t);

/// The three per-eta bounds whose combination yields 1 - c t^3.
double phase1_bound(const ShortTimeCertificate& cert, double eta, double t);
double phase2_bound(const ShortTimeCertificate& cert, double eta);
double phase3_bound(const ShortTimeCertificate& cert, double eta, double t);

}  // namespace hypocert
