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

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace zxsynth {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

enum class ErrorKind {
  InvalidInput,
  NotUnitary,
  NotIsometry,
  NotNormalized,
  NotKroneckerForm,
  NumericalFailure,
  TooLarge,
  ParseError,
  ZeroMatrix,
  RankExceeded,
};

const char* to_string(ErrorKind kind);

/// Exception carrying a machine-checkable category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct SvdResult {
  Matrix W;                    ///< left singular vectors (unitary)
  RealVector singular_values;  ///< descending, non-negative
  Matrix Vdag;                 ///< adjoint of right singular vectors (unitary)
};

/// Full SVD: M = W * diag(s) * Vdag with square unitary W and Vdag.
SvdResult svd(const Matrix& M);

/// Left polar decomposition M = S * U, S Hermitian PSD, U unitary.
/// Rank-deficient inputs get U = W * Vdag from the SVD.
std::pair<Matrix, Matrix> polar_left(const Matrix& M);

struct UnitaryEig {
  Matrix W;           ///< unitary eigenbasis
  RealVector phases;  ///< eigenphases in (-pi, pi]
};

/// U = W * diag(exp(i*phases)) * W^dagger for unitary U.
UnitaryEig unitary_eig(const Matrix& U);

double spectral_norm(const Matrix& M);

/// Split a 4x4 unitary a (x) b into its factors with det(a) = 1.
std::pair<Matrix, Matrix> kron_factor(const Matrix& M);

// ---- small helpers used across modules ----

bool all_finite(const Matrix& M);
/// Frobenius norm of X^dagger X - I.
double unitarity_error(const Matrix& X);
/// Throws NotUnitary if the unitarity error exceeds tol.
void require_unitary(const Matrix& X, double tol, const char* what);
/// Number of qubits for a power-of-two dimension; throws InvalidInput otherwise.
int qubits_for_dim(Eigen::Index dim);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix diag_matrix(const Vector& d);

/// Principal-branch phase in (-pi, pi].
double principal_phase(cplx z);

/// Haar-like random unitary (QR of a complex Gaussian matrix).
Matrix random_unitary(Eigen::Index dim, Rng& rng);
/// Complex Gaussian matrix with unit-variance entries.
Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);
/// Normalised complex Gaussian vector.
Vector random_state(Eigen::Index dim, Rng& rng);
/// Product of dim x K and K x dim Gaussian factors (rank K almost surely).
Matrix random_rank_k(Eigen::Index dim, Eigen::Index K, Rng& rng);

}  // namespace zxsynth
