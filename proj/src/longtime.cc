#include "hypocert/longtime.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypocert/error.h"
#include "hypocert/hcindex.h"

namespace hypocert {

std::vector<double> default_delta_schur_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(0.1 * i);
  return grid;
}

double LongTimeCertificate::lambda_eta(double eta) const {
  return kappa2 / (1.0 + alpha / eta);
}

double omega_at(const StaircaseForm& sf, double s) {
  ComplexMatrix W(sf.n2, sf.n0 + sf.n1);
  W.leftCols(sf.n0) = -sf.J21 * sf.J10;
  W.rightCols(sf.n1) = sf.J21 * (-sf.J11 + s * sf.R11) + sf.J22 * sf.J21;
  const double norm = operator_norm(W);
  return norm * norm;
}

double compute_omega(const StaircaseForm& sf) {
  return std::max(omega_at(sf, 0.0), omega_at(sf, 1.0));
}

double condition2(const StaircaseForm& sf, double omega, double delta_schur,
                  double eps) {
  const Eigen::VectorXd gram = sf.J21_gram_eigenvalues();
  const double lmin = gram(0);
  const double lmax = gram(gram.size() - 1);
  return 2.0 * sf.gamma -
         eps * (2.0 * lmax + 2.0 * delta_schur * lmin +
                omega / (2.0 * (1.0 - delta_schur) * lmin));
}

double select_epsilon(const StaircaseForm& sf, double omega,
                      double delta_schur, double safety) {
  if (!(delta_schur > 0.0 && delta_schur < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "delta_schur must lie in (0, 1), got " +
                    std::to_string(delta_schur));
  }
  if (!(safety > 0.0 && safety < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "safety must lie in (0, 1)");
  }
  const Eigen::VectorXd gram = sf.J21_gram_eigenvalues();
  const double lmin = gram(0);
  const double lmax = gram(gram.size() - 1);
  if (!(lmin > 0.0)) {
    throw Error(ErrorCode::kInfeasible, "J21 is singular");
  }
  // condition2 is affine in eps: 2 gamma - eps * slope.
  const double slope = 2.0 * lmax + 2.0 * delta_schur * lmin +
                       omega / (2.0 * (1.0 - delta_schur) * lmin);
  const double eps2 = 2.0 * sf.gamma / slope;
  if (!(eps2 > 0.0) || !std::isfinite(eps2)) {
    throw Error(ErrorCode::kInfeasible,
                "no positive eps satisfies the LMI condition (gamma = " +
                    std::to_string(sf.gamma) + ")");
  }
  const double eps0 = 0.5 / std::sqrt(lmax);
  return std::min(eps0, safety * eps2);
}

double select_epsilon(const StaircaseForm& sf, double delta_schur,
                      double safety) {
  return select_epsilon(sf, compute_omega(sf), delta_schur, safety);
}

ComplexMatrix build_Y_eta(const StaircaseForm& sf, double eps, double eta) {
  const Eigen::Index n = sf.dim();
  const Eigen::Index o1 = sf.n0;
  const Eigen::Index o2 = sf.n0 + sf.n1;
  ComplexMatrix Y = ComplexMatrix::Identity(n, n);
  Y.block(o1, o2, sf.n1, sf.n2) = (eps / eta) * sf.J21.adjoint();
  Y.block(o2, o1, sf.n2, sf.n1) = (eps / eta) * sf.J21;
  return Y;
}

LongTimeCertificate long_time_certificate(
    const OperatorSplit& split, const StaircaseForm& sf,
    std::span<const double> delta_schur_grid) {
  if (delta_schur_grid.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty delta_schur grid");
  }
  const Eigen::VectorXd gram = sf.J21_gram_eigenvalues();

  LongTimeCertificate base;
  base.kappa1 = kappa1(split);
  base.omega = compute_omega(sf);
  base.gamma = sf.gamma;
  base.lam_min_J21 = gram(0);
  base.lam_max_J21 = gram(gram.size() - 1);
  base.n0 = sf.n0;
  base.n1 = sf.n1;
  base.n2 = sf.n2;
  base.delta_grid.assign(delta_schur_grid.begin(), delta_schur_grid.end());

  LongTimeCertificate best = base;
  best.lambda0 = -1.0;
  for (double delta : delta_schur_grid) {
    LongTimeCertificate cert = base;
    cert.delta_schur = delta;
    cert.eps = select_epsilon(sf, base.omega, delta, kDefaultEpsilonSafety);
    cert.kappa2 = delta * cert.eps * cert.lam_min_J21;
    cert.alpha = cert.eps * std::sqrt(cert.lam_max_J21);
    cert.lambda0 = cert.kappa2 / (1.0 + cert.alpha);
    if (cert.lambda0 > best.lambda0) best = cert;
  }
  return best;
}

LongTimeCertificate long_time_certificate(const OperatorSplit& split,
                                          const StaircaseForm& sf) {
  const std::vector<double> grid = default_delta_schur_grid();
  return long_time_certificate(split, sf, grid);
}

double verify_lmi(const OperatorSplit& split, const LongTimeCertificate& cert,
                  const StaircaseForm& sf, double eta) {
  const ComplexMatrix C_eta = build_C_eta(split, eta);
  const ComplexMatrix Y = sf.to_input_basis(build_Y_eta(sf, cert.eps, eta));
  const Eigen::Index n = split.dim();
  const ComplexMatrix Q = C_eta.adjoint() * Y + Y * C_eta -
                          2.0 * cert.kappa2 * ComplexMatrix::Identity(n, n);
  return min_eigenvalue(Q);
}

double envelope_long(const LongTimeCertificate& cert, double eta, double t) {
  const double prefactor =
      std::sqrt((eta + cert.alpha) / (eta - cert.alpha));
  return std::min(1.0, prefactor * std::exp(-cert.lambda_eta(eta) * t));
}

}  // namespace hypocert
