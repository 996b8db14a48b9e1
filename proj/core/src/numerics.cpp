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

#include "zxsynth/numerics.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace zxsynth {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotKroneckerForm: return "NotKroneckerForm";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::RankExceeded: return "RankExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool all_finite(const Matrix& M) {
  for (Eigen::Index i = 0; i < M.size(); ++i) {
    const cplx z = M.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

SvdResult svd(const Matrix& M) {
  if (M.size() == 0 || !all_finite(M)) {
    throw Error(ErrorKind::InvalidInput, "svd: empty or non-finite matrix");
  }
  Eigen::BDCSVD<Matrix> dec(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdResult{dec.matrixU(), dec.singularValues(), dec.matrixV().adjoint()};
}

std::pair<Matrix, Matrix> polar_left(const Matrix& M) {
  if (M.rows() != M.cols()) {
    throw Error(ErrorKind::InvalidInput, "polar_left: matrix must be square");
  }
  const SvdResult d = svd(M);
  Matrix S = d.W * d.singular_values.cast<cplx>().asDiagonal() * d.W.adjoint();
  S = (0.5 * (S + S.adjoint())).eval();
  return {S, d.W * d.Vdag};
}

double principal_phase(cplx z) {
  const double a = std::arg(z);
  return a <= -kPi ? kPi : a;
}

UnitaryEig unitary_eig(const Matrix& U) {
  if (U.rows() != U.cols()) {
    throw Error(ErrorKind::InvalidInput, "unitary_eig: matrix must be square");
  }
  require_unitary(U, 1e-8, "unitary_eig");
  // U = X + iY with X, Y commuting Hermitian; a generic real combination of
  // the two has the eigenvectors of U and is diagonalized by the fast
  // Hermitian solver. Eigenvalues that collide under the combination are
  // caught by the residual check and handled by the Schur form instead.
  const Matrix X = (U + U.adjoint()) / 2.0;
  const Matrix Y = (U - U.adjoint()) / cplx(0.0, 2.0);
  const double a = std::cos(0.7390851332151607), b = std::sin(0.7390851332151607);
  Eigen::SelfAdjointEigenSolver<Matrix> es(a * X + b * Y);
  Matrix W = es.eigenvectors();
  Vector lambda = (W.adjoint() * U * W).diagonal();
  if ((U * W - W * lambda.asDiagonal()).norm() > 1e-10 * std::sqrt(static_cast<double>(U.rows()))) {
    // The Schur basis of a normal matrix is an orthonormal eigenbasis.
    Eigen::ComplexSchur<Matrix> schur(U, true);
    W = schur.matrixU();
    lambda = schur.matrixT().diagonal();
  }
  RealVector phases(U.rows());
  for (Eigen::Index i = 0; i < U.rows(); ++i) phases[i] = principal_phase(lambda[i]);
  return UnitaryEig{W, phases};
}

double spectral_norm(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> dec(M);
  return dec.singularValues()[0];
}

std::pair<Matrix, Matrix> kron_factor(const Matrix& M) {
  if (M.rows() != 4 || M.cols() != 4) {
    throw Error(ErrorKind::InvalidInput, "kron_factor: expected a 4x4 matrix");
  }
  // Rearrange so that a (x) b becomes the rank-one matrix vec(a) vec(b)^T.
  Matrix R(4, 4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) R(2 * i1 + j1, 2 * i2 + j2) = M(2 * i1 + i2, 2 * j1 + j2);
  const SvdResult d = svd(R);
  const double s = std::sqrt(d.singular_values[0]);
  Matrix a(2, 2), b(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = s * d.W(2 * i + j, 0);
      b(i, j) = s * d.Vdag(0, 2 * i + j);
    }
  const cplx r = std::sqrt(a.determinant());
  if (std::abs(r) < 1e-12) {
    throw Error(ErrorKind::NotKroneckerForm, "kron_factor: singular factor");
  }
  a /= r;
  b *= r;
  const double resid = (kron(a, b) - M).norm();
  if (resid > 1e-6) {
    std::ostringstream os;
    os << "kron_factor: rank-one residual " << resid;
    throw Error(ErrorKind::NotKroneckerForm, os.str());
  }
  return {a, b};
}

double unitarity_error(const Matrix& X) {
  return (X.adjoint() * X - Matrix::Identity(X.cols(), X.cols())).norm();
}

void require_unitary(const Matrix& X, double tol, const char* what) {
  if (X.rows() != X.cols() || !all_finite(X)) {
    throw Error(ErrorKind::NotUnitary, std::string(what) + ": not a finite square matrix");
  }
  const double e = unitarity_error(X);
  if (e > tol) {
    std::ostringstream os;
    os << what << ": unitarity error " << e;
    throw Error(ErrorKind::NotUnitary, os.str());
  }
}

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw Error(ErrorKind::InvalidInput, "dimension is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Matrix diag_matrix(const Vector& d) { return d.asDiagonal(); }

Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix M(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      M(i, j) = cplx(re, im);
    }
  return M;
}

Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  const Matrix G = random_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ();
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double m = std::abs(R(j, j));
    if (m > 0) Q.col(j) *= R(j, j) / m;
  }
  return Q;
}

Matrix random_rank_k(Eigen::Index dim, Eigen::Index K, Rng& rng) {
  const Matrix L = random_gaussian(dim, K, rng);
  const Matrix R = random_gaussian(K, dim, rng);
  return L * R;
}

Vector random_state(Eigen::Index dim, Rng& rng) {
  Vector v = random_gaussian(dim, 1, rng).col(0);
  return v / v.norm();
}

}  // namespace zxsynth
