#include <cmath>

#include <gtest/gtest.h>

#include "support/oracles.h"

namespace hypocert::testing {
namespace {

TEST(TaylorOracle, DiagonalMatchesScalarExponential) {
  ComplexMatrix A = ComplexMatrix::Zero(3, 3);
  A(0, 0) = Complex(-2.0, 1.0);
  A(1, 1) = Complex(0.5, 0.0);
  A(2, 2) = Complex(-7.0, -3.0);
  const ComplexMatrix E = taylor_expm(A);
  for (int i = 0; i < 3; ++i) {
    EXPECT_LT(std::abs(E(i, i) - std::exp(A(i, i))), 1e-13 * std::abs(std::exp(A(i, i))) + 1e-15);
  }
  EXPECT_LT(std::abs(E(0, 1)), 1e-15);
}

TEST(TaylorOracle, NilpotentIsExact) {
  ComplexMatrix N = ComplexMatrix::Zero(2, 2);
  N(0, 1) = 3.0;
  const ComplexMatrix E = taylor_expm(N);
  EXPECT_NEAR(E(0, 1).real(), 3.0, 1e-14);
  EXPECT_NEAR(E(0, 0).real(), 1.0, 1e-15);
}

TEST(TaylorOracle, RotationGenerator) {
  ComplexMatrix A(2, 2);
  A << 0.0, -1.0, 1.0, 0.0;
  const double t = 2.5;
  const ComplexMatrix E = taylor_expm(t * A);
  EXPECT_NEAR(E(0, 0).real(), std::cos(t), 1e-13);
  EXPECT_NEAR(E(1, 0).real(), std::sin(t), 1e-13);
  EXPECT_NEAR(taylor_propagator_norm(A, t), 1.0, 1e-13);
}

TEST(SphereOracle, FindsConstrainedMinimumOfDiagonalForms) {
  // min x1^2 + 2 x2^2 subject to x2^2 <= 0.25 on the unit sphere of C^2
  // (with A = diag(1, 2) and B = diag(0, 1)): the minimum is 1 at x = e1.
  ComplexMatrix A = ComplexMatrix::Zero(2, 2);
  A(0, 0) = 1.0;
  A(1, 1) = 2.0;
  ComplexMatrix B = ComplexMatrix::Zero(2, 2);
  B(1, 1) = 1.0;
  const SphereSearch s = sphere_min(A, B, 0.25, 20000, 1);
  ASSERT_TRUE(s.feasible);
  EXPECT_NEAR(s.value, 1.0, 1e-6);

  // Reverse roles: min 2 - x1^2 ... i.e. A = diag(2, 1), binding constraint.
  ComplexMatrix A2 = ComplexMatrix::Zero(2, 2);
  A2(0, 0) = 2.0;
  A2(1, 1) = 1.0;
  const SphereSearch s2 = sphere_min(A2, B, 0.25, 20000, 2);
  ASSERT_TRUE(s2.feasible);
  EXPECT_NEAR(s2.value, 2.0 * 0.75 + 0.25, 1e-6);
}

TEST(SphereOracle, ReportsInfeasibleConstraint) {
  const ComplexMatrix I = ComplexMatrix::Identity(2, 2);
  const SphereSearch s = sphere_min(I, I, 0.5, 1000, 3);
  EXPECT_FALSE(s.feasible);
}

TEST(FiniteDifference, CentralDifferenceOfSmoothFunction) {
  const double d = central_difference([](double x) { return std::sin(x); }, 0.3, 1e-5);
  EXPECT_NEAR(d, std::cos(0.3), 1e-9);
}

}  // namespace
}  // namespace hypocert::testing
