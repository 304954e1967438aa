#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hypocert/envelope.h"
#include "hypocert/error.h"
#include "hypocert/pipeline.h"
#include "hypocert/shorttime.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace hypocert {
namespace {

const double kGolden = (3.0 - std::sqrt(5.0)) / 2.0;

TEST(ShortTime, Kappa3AndEpsilonCurve) {
  EXPECT_NEAR(kappa3(1.0), kGolden, 1e-15);
  EXPECT_NEAR(epsilon_curve(1.0), kGolden, 1e-15);
  double prev = epsilon_curve(1.0);
  for (int i = 1; i < 100; ++i) {
    const double eta = 1.0 + i * 0.5;
    const double e = epsilon_curve(eta);
    EXPECT_GT(e, prev);
    prev = e;
  }
  EXPECT_LT(epsilon_curve(1e3), 1.0);
  EXPECT_NEAR(epsilon_curve(1e3), 1.0, 1e-5);
  EXPECT_THROW(epsilon_curve(0.9), Error);
  EXPECT_THROW(kappa3(0.0), Error);
}

TEST(ShortTime, VerifyKappa3OnEnsemble) {
  std::vector<OperatorSplit> splits{testing::paper_split()};
  for (const OperatorSplit& s : testing::random_index_one_ensemble()) splits.push_back(s);
  for (const OperatorSplit& s : splits) {
    const OperatorSplit n = normalize(s, nullptr);
    EXPECT_GE(verify_kappa3(n, kappa3(kappa1(n)), testing::criterion_etas()), -1e-10);
  }
}

TEST(ShortTime, VerifyKappa3RequiresNormalization) {
  OperatorSplit s = hermitian_split(2.0 * testing::paper_example());
  try {
    verify_kappa3(s, 0.1, testing::criterion_etas());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNormalized);
  }
}

TEST(ShortTime, DeltaFunctionsSeriesLimitsAndMonotonicity) {
  const double theta = 2.0;
  // delta1 ~ 2 theta tau and delta3 ~ (2/3) theta^3 tau for small tau.
  EXPECT_NEAR(delta1(theta, 1e-6) / (2.0 * theta * 1e-6), 1.0, 1e-5);
  EXPECT_NEAR(delta3(theta, 1e-6) / (2.0 / 3.0 * theta * theta * theta * 1e-6), 1.0, 1e-5);
  for (double tau : {1e-4, 1e-2, 0.1, 0.5, 2.0}) {
    const double d1 = testing::central_difference(
        [&](double t) { return delta1(theta, t); }, tau, tau * 1e-4);
    const double d3 = testing::central_difference(
        [&](double t) { return delta3(theta, t); }, tau, tau * 1e-4);
    EXPECT_GT(d1, 0.0);
    EXPECT_GT(d3, 0.0);
  }
  // Direct formula at moderate arguments.
  const double tau = 0.4;
  const double x = 2.0 * theta * tau;
  EXPECT_NEAR(delta1(theta, tau), (std::exp(x) - 1 - x) / (theta * tau), 1e-13);
  EXPECT_NEAR(delta3(theta, tau),
              (std::exp(x) - 1 - x - x * x / 2 - x * x * x / 6) / (theta * tau * tau * tau),
              1e-11);
}

TEST(ShortTime, RootResiduals) {
  for (double theta : {1.0, 2.0, 5.0}) {
    for (double delta : {1e-3, 0.05, 0.2, 3.0}) {
      const double t1 = solve_tau1(theta, delta);
      EXPECT_LE(std::abs(delta1(theta, t1) - delta), 1e-10 * delta);
      const double t3 = solve_tau3(theta, delta / 12.0);
      EXPECT_LE(std::abs(delta3(theta, t3) - delta / 12.0), 1e-10 * delta / 12.0);
    }
  }
  EXPECT_THROW(solve_tau1(0.5, 0.1), Error);
  EXPECT_THROW(solve_tau3(2.0, -1.0), Error);
}

TEST(ShortTime, Tau2DualMatchesSamplingOnPaperExample) {
  const OperatorSplit s = testing::paper_split();
  const double delta = 0.2;
  const Tau2Result r = tau2_dual(s, delta);
  const ComplexMatrix A = hermitian_part(s.J.adjoint() * s.R * s.J);
  const testing::SphereSearch search = testing::sphere_min(A, s.R, delta, 200000, 3);
  ASSERT_TRUE(search.feasible);
  const double sampled = std::sqrt(std::max(search.value, 0.0));
  EXPECT_NEAR(r.infimum, sampled, 1e-3 * (1.0 + sampled));
  // Analytic: x = (a, b), |a|^2 <= delta, objective |b|^2 = 1 - |a|^2.
  EXPECT_NEAR(r.infimum, std::sqrt(1.0 - delta), 1e-9);
  EXPECT_NEAR(r.tau2, std::sqrt(12.0 * delta) / (r.infimum + std::sqrt(delta)), 1e-15);
}

TEST(ShortTime, Tau2EmptyFeasibleSet) {
  const OperatorSplit s = hermitian_split(ComplexMatrix::Identity(2, 2));
  try {
    tau2_dual(s, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyFeasible);
  }
}

TEST(ShortTime, PaperExampleCertificate) {
  const Certification cert = certify(testing::paper_split());
  const ShortTimeCertificate& c = cert.short_cert;
  EXPECT_NEAR(c.beta, 1.0, 1e-14);
  EXPECT_NEAR(c.theta, 2.0, 1e-14);
  EXPECT_NEAR(c.kappa3, kGolden, 1e-14);
  EXPECT_NEAR(c.delta_short, std::min(0.2, kGolden / 2.0), 1e-15);
  EXPECT_EQ(c.tau, std::min({c.tau1, c.tau2, c.tau3, 1.0}));
  ASSERT_TRUE(c.r_found);
  EXPECT_NEAR(r_equation_lhs(c.alpha, c.lambda0, c.tau, c.r), 1.0, 1e-10);
  EXPECT_GT(c.r, 1.0);
  const double lt = c.lambda0 * c.tau;
  const double growth = std::pow(1.0 + 1.0 / lt, -3.0);
  EXPECT_NEAR(c.c, c.delta_short / 12.0 * std::min(growth, 1.0 / c.r), 1e-25);
  EXPECT_GT(c.c, 0.0);
}

TEST(ShortTime, EnvelopeWindow) {
  const ShortTimeCertificate c = certify(testing::paper_split()).short_cert;
  EXPECT_EQ(envelope_short(c, 0.0), 1.0);
  // c tau^3 is below the double-precision spacing at 1 for this example, so
  // the envelope value itself rounds to 1.
  EXPECT_LE(envelope_short(c, c.tau), 1.0);
  EXPECT_GT(c.c * c.tau * c.tau * c.tau, 0.0);
  try {
    envelope_short(c, 2.0 * c.tau);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfWindow);
  }
}

TEST(ShortTime, PhaseBoundsHoldOnEnsemble) {
  std::vector<OperatorSplit> splits{testing::paper_split()};
  for (const OperatorSplit& s : testing::random_index_one_ensemble(4)) splits.push_back(s);
  for (const OperatorSplit& s : splits) {
    const Certification cert = certify(s);
    const ShortTimeCertificate& c = cert.short_cert;
    for (double eta : {1.0, 2.0, 4.0, 16.0}) {
      const ComplexMatrix C = build_C_eta(cert.split, eta);
      for (double t : linear_grid(0.0, c.tau / eta, 20)) {
        EXPECT_LE(propagator_norm(C, t), phase1_bound(c, eta, t) + 1e-12);
      }
      EXPECT_LE(propagator_norm(C, c.tau / eta), phase2_bound(c, eta) + 1e-12);
      for (double t : linear_grid(c.tau / eta, c.t_eta(eta) + 1.0, 20)) {
        EXPECT_LE(propagator_norm(C, t), phase3_bound(c, eta, t) + 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace hypocert
