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
#include "zxsynth/su4.hpp"

namespace zxsynth {
namespace {

using testing::frob;

std::vector<Matrix> special_two_qubit_gates() {
  Rng rng(21);
  std::vector<Matrix> out;
  out.push_back(Matrix::Identity(4, 4));
  Matrix cx = Matrix::Zero(4, 4);
  cx(0, 0) = cx(1, 1) = cx(2, 3) = cx(3, 2) = 1.0;
  out.push_back(cx);
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  out.push_back(swap);
  out.push_back(kron(random_unitary(2, rng), random_unitary(2, rng)));
  Vector d(4);
  for (int i = 0; i < 4; ++i) d[i] = std::exp(kI * (0.3 * i + 0.1));
  out.push_back(d.asDiagonal());
  out.push_back(cx * kron(random_unitary(2, rng), random_unitary(2, rng)));
  out.push_back(testing::degenerate_unitary(4, rng));
  return out;
}

void expect_up_to_diag(const Matrix& U) {
  const Su4Decomposition dec = decompose_su4_up_to_diagonal(U);
  EXPECT_EQ(cnot_count(dec.circuit), 2);
  const Vector delta = dec.delta();
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(delta[i]), 1.0, 1e-12);
  EXPECT_LT(frob(to_unitary(dec.circuit), delta.asDiagonal() * U), 1e-8);
}

void expect_exact(const Matrix& U) {
  const Circuit c = decompose_u4_exact(U);
  EXPECT_EQ(cnot_count(c), 3);
  EXPECT_LT(frob(to_unitary(c), U), 1e-9);
}

TEST(MagicBasis, IsUnitaryAndMapsLocalsToOrthogonal) {
  const Matrix& E = magic_basis();
  EXPECT_LT(unitarity_error(E), 1e-14);
  Rng rng(22);
  Matrix a = random_unitary(2, rng), b = random_unitary(2, rng);
  a /= std::sqrt(a.determinant());
  b /= std::sqrt(b.determinant());
  const Matrix O = E.adjoint() * kron(a, b) * E;
  EXPECT_LT(O.imag().norm(), 1e-12);
  EXPECT_NEAR(O.real().determinant(), 1.0, 1e-12);
}

TEST(Gamma, IsInvariantUnderLocalGates) {
  Rng rng(23);
  const Matrix U = random_unitary(4, rng);
  Matrix a = random_unitary(2, rng), b = random_unitary(2, rng);
  a /= std::sqrt(a.determinant());
  b /= std::sqrt(b.determinant());
  const Matrix left = kron(a, b);
  // gamma(L U) = L gamma(U) L^dagger for special-unitary locals.
  EXPECT_LT(frob(gamma(left * U), left * gamma(U) * left.adjoint()), 1e-10);
}

TEST(RealOrthogonalDiagonalizer, DiagonalisesSymmetricUnitary) {
  Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix V = random_unitary(4, rng);
    const Matrix M = V * V.transpose();
    const Eigen::Matrix4d P = real_orthogonal_diagonalizer(M);
    EXPECT_NEAR(P.determinant(), 1.0, 1e-10);
    EXPECT_LT((P.transpose() * P - Eigen::Matrix4d::Identity()).norm(), 1e-10);
    Matrix D = P.cast<cplx>().transpose() * M * P.cast<cplx>();
    D.diagonal().setZero();
    EXPECT_LT(D.norm(), 1e-9);
  }
}

TEST(Su4, UpToDiagonalOnRandomUnitaries) {
  Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) expect_up_to_diag(random_unitary(4, rng));
}

TEST(Su4, UpToDiagonalOnSpecialGates) {
  for (const Matrix& U : special_two_qubit_gates()) expect_up_to_diag(U);
}

TEST(Su4, ExactOnRandomUnitaries) {
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) expect_exact(random_unitary(4, rng));
}

TEST(Su4, ExactOnSpecialGates) {
  for (const Matrix& U : special_two_qubit_gates()) expect_exact(U);
}

TEST(Su4, GlobalPhaseIsQuarterDeterminantArgument) {
  Rng rng(27);
  const Matrix U = random_unitary(4, rng);
  const Su4Decomposition dec = decompose_su4_up_to_diagonal(U);
  EXPECT_NEAR(std::abs(std::exp(kI * 4.0 * dec.global_phase) - U.determinant()), 0.0, 1e-10);
}

TEST(Su4, RejectsNonUnitary) {
  Matrix M = Matrix::Identity(4, 4);
  M(0, 1) = 1.0;
  EXPECT_THROW(decompose_su4_up_to_diagonal(M), Error);
  EXPECT_THROW(decompose_u4_exact(Matrix::Identity(8, 8)), Error);
}

}  // namespace
}  // namespace zxsynth
