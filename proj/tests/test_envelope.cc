#include <cmath>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "hypocert/envelope.h"
#include "hypocert/error.h"
#include "hypocert/pipeline.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace hypocert {
namespace {

TEST(SimulateMode, TrivialCases) {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const ComplexVector zero = ComplexVector::Zero(2);
  for (const ComplexVector& x : simulate_mode(testing::paper_example(), zero, grid)) {
    EXPECT_EQ(x.norm(), 0.0);
  }
  ComplexVector x0(2);
  x0 << 1.0, Complex(0.0, 2.0);
  const auto traj = simulate_mode(ComplexMatrix::Identity(2, 2), x0, grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    EXPECT_LT((traj[k] - std::exp(-grid[k]) * x0).norm(), 1e-15);
  }
}

TEST(SimulateMode, MatchesTaylorOracle) {
  ComplexVector x0(2);
  x0 << 1.0, 0.0;
  const std::vector<double> grid{0.0, 1.0};
  const auto traj = simulate_mode(testing::paper_example(), x0, grid);
  const ComplexVector expected = testing::taylor_expm(-testing::paper_example()) * x0;
  EXPECT_LT((traj[1] - expected).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(SimulateMode, RejectsBadGrid) {
  const ComplexVector x0 = ComplexVector::Ones(2);
  const std::vector<double> late{0.5, 1.0};
  const std::vector<double> decreasing{0.0, 1.0, 0.5};
  EXPECT_THROW(simulate_mode(testing::paper_example(), x0, late), Error);
  EXPECT_THROW(simulate_mode(testing::paper_example(), x0, decreasing), Error);
}

TEST(CheckEnvelopes, TrivialGrid) {
  const Certification c = certify(testing::paper_split());
  const std::vector<double> etas{1.0};
  const std::vector<double> grid{0.0};
  const EnvelopeReport r = check_envelopes(c.split, c.long_cert, c.short_cert, etas, grid);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.measured[0][0], 1.0);
  EXPECT_EQ(r.min_margin, 0.0);
}

TEST(CheckEnvelopes, PaperExamplePassesAndInvariantsHold) {
  const Certification c = certify(testing::paper_split());
  const std::vector<double> etas{1.0, 2.0, 5.0};
  const std::vector<double> grid = linear_grid(0.0, 10.0, 100);
  const EnvelopeReport r = check_envelopes(c.split, c.long_cert, c.short_cert, etas, grid);
  EXPECT_TRUE(r.pass);
  for (std::size_t i = 0; i < etas.size(); ++i) {
    EXPECT_EQ(r.measured[i][0], 1.0);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      EXPECT_GE(r.measured[i][j], 0.0);
      EXPECT_LE(r.measured[i][j], 1.0 + 1e-12);
      if (grid[j] > c.short_cert.tau) EXPECT_TRUE(std::isnan(r.env_short[i][j]));
    }
  }
  EXPECT_EQ(r.pass, r.min_margin >= -r.tolerance);
}

TEST(CheckEnvelopes, LargeTamperFailsNearTau) {
  // The certified c is far below the true t^3 deficit, so a modest factor
  // cannot break the bound; a factor large enough to exceed the actual
  // deficit must.
  const Certification c = certify(testing::paper_split());
  ShortTimeCertificate tampered = c.short_cert;
  tampered.c *= 1e12;
  const std::vector<double> etas{1.0};
  const std::vector<double> grid = linear_grid(0.0, tampered.tau, 200);
  const EnvelopeReport r = check_envelopes(c.split, c.long_cert, tampered, etas, grid);
  EXPECT_FALSE(r.pass);
  EXPECT_LT(r.min_margin_short, -1e-9);
  EXPECT_GE(grid[r.worst_t], 0.9 * tampered.tau);
}

TEST(CheckEnvelopes, NormalOperatorNormsNonincreasing) {
  // A normal accretive operator: diagonal with positive real parts.
  ComplexMatrix C = ComplexMatrix::Zero(3, 3);
  C(0, 0) = Complex(1.0, 2.0);
  C(1, 1) = Complex(0.5, -1.0);
  C(2, 2) = Complex(0.25, 0.0);
  const std::vector<double> grid = linear_grid(0.0, 5.0, 50);
  double prev = 1.0;
  for (double t : grid) {
    const double m = propagator_norm(C, t);
    EXPECT_LE(m, prev + 1e-15);
    prev = m;
  }
}

TEST(DefaultGrid, ShapeAndHorizon) {
  const Certification c = certify(testing::paper_split());
  const std::vector<double> g = default_time_grid(c.long_cert, c.short_cert);
  ASSERT_EQ(g.size(), 201u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_DOUBLE_EQ(g.back(), std::max(10.0 / c.long_cert.lambda0, 2.0 * c.short_cert.tau));
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(g[i], g[i - 1]);
  EXPECT_LE(g[1], c.short_cert.tau / 100.0);
}

TEST(Aggregate, TrivialAndArithmeticCases) {
  LongTimeCertificate lc;
  lc.alpha = 0.5;
  lc.lambda0 = 0.1;
  ShortTimeCertificate sc;
  sc.tau = 0.1;
  sc.c = 0.01;
  const std::vector<double> norms{3.0, 4.0};
  const AggregateBound b0 = aggregate_envelope(norms, lc, sc, 0.0);
  EXPECT_EQ(b0.initial_norm, 5.0);
  EXPECT_EQ(b0.exponential, 5.0);
  ASSERT_TRUE(b0.short_time.has_value());
  EXPECT_EQ(*b0.short_time, 5.0);
  // Prefactor sqrt(3) at alpha = 1/2, once the cap is inactive.
  const double t = 10.0;
  const AggregateBound b = aggregate_envelope(norms, lc, sc, t);
  EXPECT_NEAR(b.exponential, 5.0 * std::sqrt(3.0) * std::exp(-0.1 * t), 1e-14);
  EXPECT_FALSE(b.short_time.has_value());
  lc.alpha = 1.0;
  EXPECT_THROW(aggregate_envelope(norms, lc, sc, 0.0), Error);
}

TEST(Aggregate, SoundForRandomMultiModeData) {
  const Certification c = certify(testing::paper_split());
  std::mt19937_64 rng(41);
  std::normal_distribution<double> normal;
  std::vector<std::vector<ComplexVector>> trajectories;
  std::vector<double> norms;
  std::vector<double> grid = default_time_grid(c.long_cert, c.short_cert, 60);
  for (int eta = 1; eta <= 8; ++eta) {
    ComplexVector x0(2);
    x0 << Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng));
    norms.push_back(x0.norm());
    trajectories.push_back(simulate_mode(build_C_eta(c.split, eta), x0, grid));
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double sum = 0.0;
    for (const auto& tr : trajectories) sum += tr[k].squaredNorm();
    const AggregateBound b = aggregate_envelope(norms, c.long_cert, c.short_cert, grid[k]);
    EXPECT_LE(std::sqrt(sum), b.exponential + 1e-10);
    if (b.short_time) EXPECT_LE(std::sqrt(sum), *b.short_time + 1e-10);
  }
}

TEST(EnvelopeCsv, HeaderNanAndDeterminism) {
  const Certification c = certify(testing::paper_split());
  const std::vector<double> etas{1.0, 2.0};
  const std::vector<double> grid = default_time_grid(c.long_cert, c.short_cert, 30);
  const EnvelopeReport a = check_envelopes(c.split, c.long_cert, c.short_cert, etas, grid);
  const EnvelopeReport b = check_envelopes(c.split, c.long_cert, c.short_cert, etas, grid);
  const std::string csv = envelope_csv(a);
  EXPECT_EQ(csv, envelope_csv(b));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "eta,t,measured,env_long,env_short,margin_long,margin_short");
  EXPECT_NE(csv.find(",nan,"), std::string::npos);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  EXPECT_EQ(lines, 1 + etas.size() * grid.size());
}

TEST(EnvelopeCsv, IdenticalAcrossThreadCounts) {
  const Certification c = certify(testing::paper_split());
  const std::vector<double> etas{1.0, 4.0};
  const std::vector<double> grid = default_time_grid(c.long_cert, c.short_cert, 40);
  setenv("HYPOCERT_THREADS", "1", 1);
  const std::string serial =
      envelope_csv(check_envelopes(c.split, c.long_cert, c.short_cert, etas, grid));
  setenv("HYPOCERT_THREADS", "3", 1);
  const std::string threaded =
      envelope_csv(check_envelopes(c.split, c.long_cert, c.short_cert, etas, grid));
  unsetenv("HYPOCERT_THREADS");
  EXPECT_EQ(serial, threaded);
}

}  // namespace
}  // namespace hypocert
