#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "schurkit/circuit.hpp"
#include "schurkit/oracle.hpp"
#include "test_checks.hpp"

using namespace schurkit;

using checks::enumerate_control_pairs;

TEST(TwoLevel, IdentityNeedsNoGates) {
  const auto list = two_level_decompose(CMatrix::Identity(6, 6));
  EXPECT_TRUE(list.gates.empty());
  EXPECT_EQ(list.replay(), CMatrix::Identity(6, 6));
}

TEST(TwoLevel, TwoByTwoIsOneRotation) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto u = haar_unitary(2, rng);
    const auto list = two_level_decompose(u);
    EXPECT_EQ(list.rotation_count(), 1u);
    EXPECT_LE(list.phase_count(), 2u);
    EXPECT_LT((list.replay() - u).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(TwoLevel, RandomUnitariesReplay) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const int dim = 1 + t % 32;
    const auto u = haar_unitary(dim, rng);
    const auto list = two_level_decompose(u);
    EXPECT_EQ(list.size, static_cast<std::size_t>(dim));
    EXPECT_LE(list.rotation_count(), static_cast<std::size_t>(dim * (dim - 1) / 2));
    EXPECT_LE(list.phase_count(), static_cast<std::size_t>(dim));
    EXPECT_LT((list.replay() - u).cwiseAbs().maxCoeff(), 1e-10) << "D=" << dim;
    for (const auto& g : list.gates) {
      if (g.kind == Gate::Kind::Rotation) {
        EXPECT_LT(g.a, g.b);
        EXPECT_LT((g.block.adjoint() * g.block - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
      } else {
        EXPECT_NEAR(std::abs(g.value), 1.0, 1e-12);
      }
    }
  }
  const auto eight = haar_unitary(8, rng);
  EXPECT_LE(two_level_decompose(eight).rotation_count(), 28u);
}

TEST(TwoLevel, SchurTransformDecomposes) {
  const auto s = schur_unitary(3, 2);
  const auto list = two_level_decompose(s.matrix);
  EXPECT_LT((list.replay() - s.matrix).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TwoLevel, RejectsNonUnitary) {
  EXPECT_THROW(two_level_decompose(2.0 * CMatrix::Identity(3, 3)), ArgumentError);
  EXPECT_THROW(two_level_decompose(CMatrix::Identity(2, 3)), ArgumentError);
}

TEST(GateCount, StepsAndExactPairCounts) {
  const auto two = gate_count_report(2, 2);
  ASSERT_EQ(two.steps.size(), 1u);
  EXPECT_EQ(two.steps[0].wigner_dimension, 2);

  const auto five = gate_count_report(5, 2);
  ASSERT_EQ(five.steps.size(), 4u);
  for (const auto& step : five.steps) {
    EXPECT_EQ(step.control_pairs, enumerate_control_pairs(step.step, 2)) << "k=" << step.step;
  }
  for (int d = 2; d <= 3; ++d) {
    for (const auto& step : gate_count_report(7, d).steps) {
      EXPECT_EQ(step.control_pairs, enumerate_control_pairs(step.step, d)) << "d=" << d << " k=" << step.step;
    }
  }
  EXPECT_THROW(gate_count_report(0, 2), ArgumentError);
}

TEST(GateCount, QubitTotals) {
  const std::vector<std::size_t> expected{3, 9, 17, 29, 44, 64, 88, 118, 153};
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(gate_count_report(n, 2).total_control_pairs(), expected[static_cast<std::size_t>(n - 2)]);
  }
}

TEST(PolynomialFit, ExactPolynomialsHaveNoResidual) {
  std::vector<double> x, y;
  for (int n = 2; n <= 10; ++n) {
    x.push_back(n);
    y.push_back(3.0 * n * n * n - n + 7.0);
  }
  EXPECT_LT(polynomial_fit_residual(x, y, 3), 1e-12);
  EXPECT_GT(polynomial_fit_residual(x, y, 2), 1e-4);
  EXPECT_THROW(polynomial_fit_residual(x, {1.0}, 2), ArgumentError);
}
