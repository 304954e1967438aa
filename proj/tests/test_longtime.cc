#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hypocert/envelope.h"
#include "hypocert/error.h"
#include "hypocert/longtime.h"
#include "hypocert/pipeline.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace hypocert {
namespace {

using testing::criterion_etas;

struct Case {
  OperatorSplit split;  // normalized
  StaircaseForm sf;
  LongTimeCertificate cert;
};

std::vector<Case> cases() {
  std::vector<OperatorSplit> splits{testing::paper_split()};
  for (const OperatorSplit& s : testing::random_index_one_ensemble()) splits.push_back(s);
  std::vector<Case> out;
  for (const OperatorSplit& s : splits) {
    const Certification c = certify(s);
    out.push_back({c.split, c.staircase, c.long_cert});
  }
  return out;
}

TEST(LongTime, PaperExampleConstants) {
  const OperatorSplit s = testing::paper_split();
  const StaircaseForm sf = staircase_form(s);
  EXPECT_NEAR(compute_omega(sf), 1.0, 1e-14);
  const LongTimeCertificate c = long_time_certificate(s, sf);
  EXPECT_NEAR(c.gamma, 1.0, 1e-14);
  EXPECT_NEAR(c.lam_min_J21, 1.0, 1e-14);
  EXPECT_NEAR(c.lam_max_J21, 1.0, 1e-14);
  // eps2 = 2 / (2 + 2 delta + 1 / (2 (1 - delta))), eps = 0.99 eps2 < 1/2.
  const double d = c.delta_schur;
  const double eps2 = 2.0 / (2.0 + 2.0 * d + 1.0 / (2.0 * (1.0 - d)));
  EXPECT_NEAR(c.eps, std::min(0.5, 0.99 * eps2), 1e-14);
  EXPECT_NEAR(c.kappa2, d * c.eps, 1e-14);
  EXPECT_NEAR(c.alpha, c.eps, 1e-14);
  EXPECT_NEAR(c.lambda0, c.kappa2 / (1.0 + c.alpha), 1e-14);
  EXPECT_EQ(c.delta_grid.size(), 9u);
}

TEST(LongTime, SelectedDeltaMaximizesLambda0OverGrid) {
  const OperatorSplit s = testing::paper_split();
  const StaircaseForm sf = staircase_form(s);
  const LongTimeCertificate best = long_time_certificate(s, sf);
  for (double d : default_delta_schur_grid()) {
    const std::vector<double> one{d};
    EXPECT_LE(long_time_certificate(s, sf, one).lambda0, best.lambda0 + 1e-15);
  }
}

TEST(LongTime, Condition2SignAtSelectedEpsilon) {
  for (const Case& c : cases()) {
    EXPECT_GT(condition2(c.sf, c.cert.omega, c.cert.delta_schur, c.cert.eps), 0.0);
    EXPECT_LE(c.cert.alpha, 0.5 + 1e-15);
  }
}

TEST(LongTime, SelectEpsilonRejectsBadDelta) {
  const StaircaseForm sf = staircase_form(testing::paper_split());
  EXPECT_THROW(select_epsilon(sf, 0.0), Error);
  EXPECT_THROW(select_epsilon(sf, 1.0), Error);
}

TEST(LongTime, OmegaEndpointRuleDominatesGrid) {
  for (const Case& c : cases()) {
    const double omega = compute_omega(c.sf);
    for (int i = 0; i < 100; ++i) {
      const double s = i / 99.0;
      EXPECT_GE(omega, omega_at(c.sf, s) - 1e-12 * (1 + omega));
    }
  }
}

TEST(LongTime, YSpectrumWithinBounds) {
  for (const Case& c : cases()) {
    for (double eta : criterion_etas()) {
      const Eigen::VectorXd eigs =
          hermitian_eigenvalues(build_Y_eta(c.sf, c.cert.eps, eta));
      EXPECT_GE(eigs.minCoeff(), 1.0 - c.cert.alpha / eta - 1e-12);
      EXPECT_LE(eigs.maxCoeff(), 1.0 + c.cert.alpha / eta + 1e-12);
    }
  }
}

TEST(LongTime, LmiHoldsOnAllCases) {
  for (const Case& c : cases()) {
    for (double eta : criterion_etas()) {
      EXPECT_GE(verify_lmi(c.split, c.cert, c.sf, eta), -1e-10) << "eta " << eta;
    }
  }
}

TEST(LongTime, GronwallAlongTrajectories) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> normal;
  for (const Case& c : cases()) {
    for (double eta : {1.0, 2.0, 8.0}) {
      const ComplexMatrix Y =
          c.sf.to_input_basis(build_Y_eta(c.sf, c.cert.eps, eta));
      const ComplexMatrix C = build_C_eta(c.split, eta);
      ComplexVector x0(c.split.dim());
      for (Eigen::Index i = 0; i < x0.size(); ++i) x0(i) = Complex(normal(rng), normal(rng));
      const std::vector<double> grid = linear_grid(0.0, 10.0 / c.cert.lambda0, 60);
      const auto traj = simulate_mode(C, x0, grid);
      const double v0 = x0.dot(Y * x0).real();
      double prev = v0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double v = traj[k].dot(Y * traj[k]).real();
        EXPECT_LE(v, prev * (1.0 + 1e-12) + 1e-15);
        EXPECT_LE(v, std::exp(-2.0 * c.cert.lambda_eta(eta) * grid[k]) * v0 * (1 + 1e-10) + 1e-15);
        prev = v;
      }
      // d/dt <x, Y x> <= -2 kappa2 |x|^2, checked by central differences.
      const auto energy = [&](double t) {
        const ComplexVector x = propagator(C, t) * x0;
        return x.dot(Y * x).real();
      };
      for (double t : {0.1, 1.0, 3.0}) {
        const ComplexVector x = propagator(C, t) * x0;
        const double slope = testing::central_difference(energy, t, 1e-5);
        EXPECT_LE(slope, -2.0 * c.cert.kappa2 * x.squaredNorm() + 1e-6 * (1 + x.squaredNorm()));
      }
    }
  }
}

TEST(LongTime, EnvelopeShape) {
  const LongTimeCertificate c = long_time_certificate(
      testing::paper_split(), staircase_form(testing::paper_split()));
  EXPECT_EQ(envelope_long(c, 1.0, 0.0), 1.0);
  EXPECT_LT(envelope_long(c, 1.0, 100.0), 1e-6);
  EXPECT_LT(c.lambda_eta(1.0), c.lambda_eta(2.0));
  EXPECT_NEAR(c.lambda_eta(1e12), c.kappa2, 1e-12);
  // Prefactor tends to 1 for large eta.
  const double pre = std::sqrt((1e6 + c.alpha) / (1e6 - c.alpha));
  EXPECT_NEAR(pre, 1.0, 1e-6);
}

}  // namespace
}  // namespace hypocert
