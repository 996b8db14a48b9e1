// Copyright 2026 The zxsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zxsynth/numerics.hpp"

namespace zxsynth {
namespace {

using testing::frob;

bool is_unitary(const Matrix& U, double tol = 1e-10) { return unitarity_error(U) <= tol; }

TEST(Svd, ReconstructsRectangularAndSquare) {
  Rng rng(11);
  for (auto [r, c] : {std::pair{8, 5}, std::pair{5, 8}, std::pair{16, 16}}) {
    const Matrix M = random_gaussian(r, c, rng);
    const SvdResult d = svd(M);
    ASSERT_EQ(d.W.rows(), r);
    ASSERT_EQ(d.Vdag.rows(), c);
    EXPECT_TRUE(is_unitary(d.W));
    EXPECT_TRUE(is_unitary(d.Vdag));
    Matrix S = Matrix::Zero(r, c);
    for (Eigen::Index i = 0; i < d.singular_values.size(); ++i) S(i, i) = d.singular_values[i];
    EXPECT_LT(frob(d.W * S * d.Vdag, M), 1e-10);
    for (Eigen::Index i = 1; i < d.singular_values.size(); ++i) {
      EXPECT_GE(d.singular_values[i - 1], d.singular_values[i]);
    }
    EXPECT_GE(d.singular_values.minCoeff(), 0.0);
  }
}

TEST(Polar, FactorsHermitianTimesUnitary) {
  Rng rng(12);
  const Matrix M = random_gaussian(8, 8, rng);
  const auto [S, U] = polar_left(M);
  EXPECT_LT(frob(S, S.adjoint()), 1e-10);
  EXPECT_TRUE(is_unitary(U));
  EXPECT_LT(frob(S * U, M), 1e-10);
  Eigen::SelfAdjointEigenSolver<Matrix> es(S);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10);
}

TEST(Polar, RankDeficientStillGivesUnitary) {
  Rng rng(13);
  const Matrix M = random_rank_k(8, 2, rng);
  const auto [S, U] = polar_left(M);
  EXPECT_TRUE(is_unitary(U));
  EXPECT_LT(frob(S * U, M), 1e-10);
  const auto [S0, U0] = polar_left(Matrix::Zero(4, 4));
  EXPECT_TRUE(is_unitary(U0));
  EXPECT_LT(S0.norm(), 1e-14);
}

void expect_eig_ok(const Matrix& U) {
  const UnitaryEig e = unitary_eig(U);
  EXPECT_TRUE(is_unitary(e.W, 1e-9));
  Vector lam(e.phases.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    EXPECT_GT(e.phases[i], -kPi - 1e-12);
    EXPECT_LE(e.phases[i], kPi + 1e-12);
    lam[i] = std::exp(kI * e.phases[i]);
  }
  EXPECT_LT(frob(e.W * lam.asDiagonal() * e.W.adjoint(), U), 1e-9);
}

TEST(UnitaryEig, RandomUnitaries) {
  Rng rng(14);
  for (int dim : {2, 4, 16, 64}) expect_eig_ok(random_unitary(dim, rng));
}

TEST(UnitaryEig, DegenerateSpectra) {
  Rng rng(15);
  expect_eig_ok(Matrix::Identity(8, 8));
  expect_eig_ok(-Matrix::Identity(4, 4));
  for (int dim : {4, 8, 32}) expect_eig_ok(testing::degenerate_unitary(dim, rng));
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  expect_eig_ok(swap);
}

TEST(SpectralNorm, MatchesLargestSingularValue) {
  Rng rng(16);
  const Matrix M = random_gaussian(6, 9, rng);
  EXPECT_NEAR(spectral_norm(M), svd(M).singular_values[0], 1e-12);
  EXPECT_EQ(spectral_norm(Matrix::Zero(3, 3)), 0.0);
}

TEST(KronFactor, SplitsProductsAndRejectsEntanglers) {
  Rng rng(17);
  const Matrix a = random_unitary(2, rng), b = random_unitary(2, rng);
  const auto [fa, fb] = kron_factor(kron(a, b));
  EXPECT_LT(frob(kron(fa, fb), kron(a, b)), 1e-10);
  EXPECT_NEAR(std::abs(fa.determinant() - 1.0), 0.0, 1e-10);

  Matrix cx = Matrix::Zero(4, 4);
  cx(0, 0) = cx(1, 1) = cx(2, 3) = cx(3, 2) = 1.0;
  try {
    kron_factor(cx);
    FAIL() << "expected NotKroneckerForm";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotKroneckerForm);
  }
}

TEST(Helpers, DimensionAndUnitarityChecks) {
  EXPECT_EQ(qubits_for_dim(1), 0);
  EXPECT_EQ(qubits_for_dim(32), 5);
  try {
    qubits_for_dim(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = 0.5;
  try {
    require_unitary(bad, 1e-9, "test");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnitary);
  }
  EXPECT_NO_THROW(require_unitary(Matrix::Identity(4, 4), 1e-12, "test"));
  Matrix nan = Matrix::Identity(2, 2);
  nan(1, 1) = std::nan("");
  EXPECT_FALSE(all_finite(nan));
}

TEST(Helpers, KronAndDirectSumLayout) {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const Matrix k = kron(a, b);
  EXPECT_EQ(k(0, 1), cplx(1.0));
  EXPECT_EQ(k(2, 1), cplx(3.0));
  EXPECT_EQ(k(3, 2), cplx(4.0));
  const Matrix s = direct_sum(a, b);
  EXPECT_EQ(s.rows(), 4);
  EXPECT_EQ(s(1, 0), cplx(3.0));
  EXPECT_EQ(s(2, 3), cplx(1.0));
  EXPECT_EQ(s(0, 3), cplx(0.0));
}

TEST(Helpers, PrincipalPhaseRange) {
  EXPECT_NEAR(principal_phase(cplx(-1.0, 0.0)), kPi, 1e-15);
  EXPECT_NEAR(principal_phase(cplx(-1.0, -0.0)), kPi, 1e-15);
  EXPECT_NEAR(principal_phase(kI), kPi / 2, 1e-15);
}

TEST(Random, SeededGeneratorsAreDeterministicAndWellFormed) {
  Rng r1(99), r2(99);
  const Matrix u1 = random_unitary(8, r1), u2 = random_unitary(8, r2);
  EXPECT_EQ(u1, u2);
  EXPECT_TRUE(is_unitary(u1));
  const Vector s = random_state(16, r1);
  EXPECT_NEAR(s.norm(), 1.0, 1e-14);
  const Matrix low = random_rank_k(16, 3, r1);
  const RealVector sv = svd(low).singular_values;
  EXPECT_GT(sv[2], 1e-8 * sv[0]);
  EXPECT_LT(sv[3], 1e-10 * sv[0]);
}

TEST(Errors, KindNames) {
  EXPECT_STREQ(to_string(ErrorKind::RankExceeded), "RankExceeded");
  const Error e(ErrorKind::ParseError, "boom");
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
}

}  // namespace
}  // namespace zxsynth
