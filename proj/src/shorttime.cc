#include "hypocert/shorttime.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "hypocert/error.h"

namespace hypocert {

namespace {

constexpr double kNormalizationTol = 1e-8;
constexpr double kTauBracketLimit = 1e3;

void require_normalized(const OperatorSplit& split) {
  if (std::abs(split.norm_R - 1.0) > kNormalizationTol) {
    throw Error(ErrorCode::kNotNormalized,
                "expected ||R|| = 1, got " + std::to_string(split.norm_R));
  }
}

// sum_{k > order} x^k / k!
double exp_remainder(double x, int order) {
  if (std::abs(x) < 2.0) {
    double term = 1.0;
    for (int k = 1; k <= order; ++k) term *= x / k;
    double sum = 0.0;
    for (int k = order + 1; k < 200; ++k) {
      term *= x / k;
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  double partial = 0.0;
  double term = 1.0;
  for (int k = 1; k <= order; ++k) {
    term *= x / k;
    partial += term;
  }
  return std::expm1(x) - partial;
}

// Root of an increasing f with f(0+) < target, bracket grown by doubling.
double bisect_increasing(const std::function<double(double)>& f, double target,
                         double limit) {
  double lo = 0.0;
  double hi = 1.0;
  while (f(hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (hi > limit) {
      throw Error(ErrorCode::kBracketFailure,
                  "no root below " + std::to_string(limit));
    }
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double f_lo = std::abs(f(lo) - target);
  const double f_hi = std::abs(f(hi) - target);
  return f_lo < f_hi ? lo : hi;
}

}  // namespace

double ShortTimeCertificate::t_eta(double eta) const {
  return tau / eta + std::log1p(2.0 * alpha / (eta - alpha)) / (2.0 * lambda0);
}

double kappa3(double kappa1) {
  if (!(kappa1 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kappa1 must be positive");
  }
  return 0.5 * (3.0 - std::sqrt(5.0)) * kappa1;
}

double epsilon_curve(double eta) {
  if (!(eta >= 1.0)) {
    throw Error(ErrorCode::kEtaOutOfRange, "eta must be >= 1");
  }
  // (1 + eta^2/2)^2 - (1 + eta^4/4) = eta^2
  const double a = 1.0 + 0.5 * eta * eta;
  const double b = std::sqrt(1.0 + 0.25 * eta * eta * eta * eta);
  return eta * eta / (a + b);
}

double verify_kappa3(const OperatorSplit& split, double kappa3,
                     std::span<const double> etas) {
  require_normalized(split);
  double margin = std::numeric_limits<double>::infinity();
  for (double eta : etas) {
    const ComplexMatrix C_eta = build_C_eta(split, eta);
    const ComplexMatrix M = split.R + C_eta.adjoint() * split.R * C_eta;
    margin = std::min(margin, min_eigenvalue(M) - kappa3);
  }
  return margin;
}

double delta1(double theta, double tau) {
  const double x = 2.0 * theta * tau;
  return exp_remainder(x, 1) / (theta * tau);
}

double delta3(double theta, double tau) {
  const double x = 2.0 * theta * tau;
  return exp_remainder(x, 3) / (theta * tau * tau * tau);
}

double solve_tau1(double theta, double delta) {
  if (!(theta >= 1.0) || !(delta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "solve_tau1 needs theta >= 1 and delta > 0");
  }
  return bisect_increasing([theta](double t) { return delta1(theta, t); },
                           delta, kTauBracketLimit);
}

double solve_tau3(double theta, double target) {
  if (!(theta >= 1.0) || !(target > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "solve_tau3 needs theta >= 1 and target > 0");
  }
  return bisect_increasing([theta](double t) { return delta3(theta, t); },
                           target, kTauBracketLimit);
}

Tau2Result tau2_dual(const OperatorSplit& split, double delta) {
  if (!(delta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must be positive");
  }
  if (min_eigenvalue(split.R) > delta) {
    throw Error(ErrorCode::kEmptyFeasible,
                "no unit vector satisfies <x, R x> <= delta");
  }
  const ComplexMatrix A =
      hermitian_part(split.J.adjoint() * split.R * split.J);
  const ComplexMatrix& R = split.R;
  // Concave in mu.
  auto dual = [&](double mu) {
    return min_eigenvalue(A + mu * R) - mu * delta;
  };

  double hi = 1.0;
  double f_prev = dual(0.0);
  double f_hi = dual(hi);
  while (f_hi > f_prev && hi < 1e12) {
    hi *= 2.0;
    f_prev = f_hi;
    f_hi = dual(hi);
  }

  constexpr double kInvPhi = 0.6180339887498949;
  double a = 0.0;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = dual(x1);
  double f2 = dual(x2);
  for (int it = 0; it < 300 && (b - a) > 1e-14 * (1.0 + b); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = dual(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = dual(x1);
    }
  }
  Tau2Result out;
  out.mu = f1 > f2 ? x1 : x2;
  double best = std::max(f1, f2);
  // The endpoint mu = 0 is not probed by the interior iteration.
  const double f0 = dual(0.0);
  if (f0 >= best) {
    best = f0;
    out.mu = 0.0;
  }
  out.infimum = std::sqrt(std::max(0.0, best));
  out.tau2 = std::sqrt(12.0 * delta) / (out.infimum + std::sqrt(delta));
  return out;
}

double tau2(const OperatorSplit& split, double delta) {
  return tau2_dual(split, delta).tau2;
}

double r_equation_lhs(double alpha, double lambda0, double tau, double r) {
  return std::sqrt(1.0 + 2.0 * alpha / (r - alpha)) *
         std::exp(-lambda0 * tau * (r - 1.0) / r);
}

ShortTimeCertificate short_time_certificate(
    const OperatorSplit& split, const LongTimeCertificate& long_cert) {
  require_normalized(split);
  ShortTimeCertificate cert;
  cert.alpha = long_cert.alpha;
  cert.lambda0 = long_cert.lambda0;
  cert.beta = operator_norm(split.J);
  cert.theta = 1.0 + cert.beta;
  cert.kappa1 = long_cert.kappa1;
  cert.kappa3 = kappa3(cert.kappa1);
  cert.delta_short = std::min(cert.kappa1 / 5.0, cert.kappa3 / 2.0);

  cert.tau1 = solve_tau1(cert.theta, cert.delta_short);
  cert.tau2 = tau2(split, cert.delta_short);
  cert.tau3 = solve_tau3(cert.theta, cert.delta_short / 12.0);
  cert.tau = std::min({cert.tau1, cert.tau2, cert.tau3, 1.0});

  // log of the r-equation left-hand side; strictly decreasing in r.
  const double lt = cert.lambda0 * cert.tau;
  const double alpha = cert.alpha;
  auto g = [alpha, lt](double r) {
    return 0.5 * std::log1p(2.0 * alpha / (r - alpha)) - lt * (r - 1.0) / r;
  };
  if (!(g(1.0) > 0.0)) {
    cert.r_found = false;
    cert.r = 1.0;
  } else {
    double lo = 1.0;
    double hi = 2.0;
    while (g(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) {
        throw Error(ErrorCode::kBracketFailure, "r-equation has no root");
      }
    }
    for (int it = 0; it < 2000; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (g(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    cert.r = std::abs(g(lo)) < std::abs(g(hi)) ? lo : hi;
  }

  const double growth = 1.0 + 1.0 / lt;
  cert.c = cert.delta_short / 12.0 *
           std::min(1.0 / (growth * growth * growth), 1.0 / cert.r);
  return cert;
}

double envelope_short(const ShortTimeCertificate& cert, double t) {
  if (t < 0.0 || t > cert.tau) {
    throw Error(ErrorCode::kOutOfWindow,
                "t = " + std::to_string(t) + " outside [0, tau = " +
                    std::to_string(cert.tau) + "]");
  }
  return 1.0 - cert.c * t * t * t;
}

double phase1_bound(const ShortTimeCertificate& cert, double eta, double t) {
  return 1.0 - eta * eta * cert.delta_short / 12.0 * t * t * t;
}

double phase2_bound(const ShortTimeCertificate& cert, double eta) {
  return 1.0 - cert.delta_short * cert.tau * cert.tau * cert.tau / (12.0 * eta);
}

double phase3_bound(const ShortTimeCertificate& cert, double eta, double t) {
  return phase2_bound(cert, eta) *
         std::sqrt(1.0 + 2.0 * cert.alpha / (eta - cert.alpha)) *
         std::exp(-cert.lambda0 * (t - cert.tau / eta));
}

}  // namespace hypocert
