// Copyright 2026 The twinbeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "twinbeam/jacobi.hpp"

namespace twinbeam {
namespace {

SquareMatrix from_eigen(const Eigen::MatrixXd& m) {
  SquareMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

TEST(Jacobi, OneByOne) {
  SquareMatrix a(1);
  a(0, 0) = 0.7;
  const auto ev = jacobi_eigenvalues(a);
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0], 0.7);
}

TEST(Jacobi, TwoByTwoAntiDiagonal) {
  SquareMatrix a(2);
  a(0, 1) = a(1, 0) = 0.25;
  const SymmetricEigen e = jacobi_eigen(a, {.compute_vectors = true});
  ASSERT_EQ(e.values.size(), 2u);
  EXPECT_NEAR(e.values[0], -0.25, 1e-15);
  EXPECT_NEAR(e.values[1], 0.25, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(e.vectors(0, 0) * e.vectors(1, 0), -0.5, 1e-15);
}

TEST(Jacobi, DiagonalInputNeedsNoRotation) {
  SquareMatrix a(3);
  a(0, 0) = 3;
  a(1, 1) = -1;
  a(2, 2) = 2;
  const SymmetricEigen e = jacobi_eigen(a);
  EXPECT_EQ(e.values, (std::vector<double>{-1, 2, 3}));
  EXPECT_EQ(e.sweeps, 0);
}

TEST(Jacobi, EmptyMatrix) {
  EXPECT_TRUE(jacobi_eigenvalues(SquareMatrix{}).empty());
}

TEST(Jacobi, ReadsUpperTriangleOnly) {
  SquareMatrix a(2);
  a(0, 0) = 1;
  a(1, 1) = 1;
  a(0, 1) = 1;
  a(1, 0) = 1e6;  // ignored
  const auto ev = jacobi_eigenvalues(a);
  EXPECT_NEAR(ev[0], 0.0, 1e-15);
  EXPECT_NEAR(ev[1], 2.0, 1e-15);
}

TEST(Jacobi, SweepBudgetExhaustionThrows) {
  std::mt19937_64 rng(3);
  const SquareMatrix a = from_eigen(testing::random_symmetric(12, rng));
  EXPECT_THROW(jacobi_eigen(a, {.max_sweeps = 1}), ConvergenceError);
}

TEST(JacobiProperty, RandomReconstructionAndTrace) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXd m = testing::random_symmetric(10, rng);
    const SquareMatrix a = from_eigen(m);
    const SymmetricEigen e = jacobi_eigen(a, {.compute_vectors = true});

    Eigen::MatrixXd q(10, 10);
    for (int r = 0; r < 10; ++r)
      for (int c = 0; c < 10; ++c) q(r, c) = e.vectors(r, c);
    const Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(e.values.data(), 10);
    const Eigen::MatrixXd rebuilt = q * lambda.asDiagonal() * q.transpose();
    EXPECT_LE((rebuilt - m).norm(), 1e-10);
    EXPECT_LE((q.transpose() * q - Eigen::MatrixXd::Identity(10, 10)).norm(), 1e-12);

    double sum = 0.0;
    for (double v : e.values) sum += v;
    EXPECT_NEAR(sum, a.trace(), 1e-12);
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
  }
}

TEST(JacobiProperty, AgreesWithIndependentSolver) {
  std::mt19937_64 rng(19);
  for (int dim : {2, 3, 5, 17, 40}) {
    const Eigen::MatrixXd m = testing::random_symmetric(dim, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m, Eigen::EigenvaluesOnly);
    const auto ev = jacobi_eigenvalues(from_eigen(m));
    for (int k = 0; k < dim; ++k) EXPECT_NEAR(ev[k], ref.eigenvalues()(k), 1e-12) << dim;
  }
}

TEST(SquareMatrix, Norms) {
  SquareMatrix a = SquareMatrix::identity(3);
  a(0, 2) = 2;
  a(2, 0) = 2;
  EXPECT_EQ(a.trace(), 3.0);
  EXPECT_DOUBLE_EQ(a.frobenius_norm(), std::sqrt(11.0));
  EXPECT_DOUBLE_EQ(a.off_diagonal_norm(), std::sqrt(8.0));
  EXPECT_TRUE(a.is_symmetric());
  a(1, 2) = 1;
  EXPECT_FALSE(a.is_symmetric());
}

}  // namespace
}  // namespace twinbeam
