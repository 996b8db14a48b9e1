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

#include "zxsynth/su4.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

namespace zxsynth {

namespace {

using Mat4 = Eigen::Matrix4cd;
using RMat4 = Eigen::Matrix4d;

// Sign pattern of the diagonal correction: Delta = diag(exp(i*kEps*psi/2)).
constexpr std::array<double, 4> kEps{-1.0, 1.0, 1.0, -1.0};

const Mat4& yy() {
  static const Mat4 m = [] {
    Mat4 r = Mat4::Zero();
    r(0, 3) = -1;
    r(1, 2) = 1;
    r(2, 1) = 1;
    r(3, 0) = -1;
    return r;
  }();
  return m;
}

Mat4 cx01() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

std::array<cplx, 4> eigenvalues4(const Mat4& M) {
  Eigen::ComplexEigenSolver<Mat4> es(M, false);
  std::array<cplx, 4> ev;
  for (int i = 0; i < 4; ++i) ev[i] = es.eigenvalues()[i];
  return ev;
}

// Sort by phase, then repeatedly pair the first remaining root with the root
// closest to its conjugate. Returns the representative phases and the total
// pairing mismatch.
struct Pairing {
  std::array<double, 2> phases{};
  double mismatch = 0.0;
};

Pairing pair_conjugates(std::array<cplx, 4> ev) {
  std::sort(ev.begin(), ev.end(),
            [](cplx x, cplx y) { return principal_phase(x) < principal_phase(y); });
  std::vector<cplx> rest(ev.begin(), ev.end());
  Pairing p;
  for (int k = 0; k < 2; ++k) {
    const cplx x = rest.front();
    rest.erase(rest.begin());
    std::size_t best = 0;
    double bd = std::abs(rest[0] - std::conj(x));
    for (std::size_t j = 1; j < rest.size(); ++j) {
      const double d = std::abs(rest[j] - std::conj(x));
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    p.phases[k] = principal_phase(x);
    p.mismatch += bd;
  }
  return p;
}

double conj_mismatch(const Mat4& G, double psi) {
  Mat4 M = G;
  for (int r = 0; r < 4; ++r) M.row(r) *= std::polar(1.0, kEps[r] * psi);
  return pair_conjugates(eigenvalues4(M)).mismatch;
}

template <class F>
double golden_min(F f, double a, double b, int iters) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// psi makes tr[Delta^2 gamma(U)] real. The closed-form root is accepted when
// the spectrum of gamma(Delta U) is conjugation-closed; otherwise (nearly
// local inputs, where the trace condition is ill-conditioned) the spectral
// mismatch itself is minimised around the best grid points.
double choose_psi(const Mat4& G) {
  const cplx t0 = G(0, 0), t1 = G(1, 1), t2 = G(2, 2), t3 = G(3, 3);
  const double num = (t0 + t1 + t2 + t3).imag();
  const double den = (t0 - t1 - t2 + t3).real();
  const double psi0 = (std::abs(num) < 1e-12 && std::abs(den) < 1e-12) ? 0.0 : std::atan2(num, den);
  auto f = [&](double p) { return conj_mismatch(G, p); };
  const double f0 = f(psi0);
  if (f0 < 1e-13) return psi0;

  constexpr int kGrid = 64;
  std::vector<std::pair<double, double>> vals;
  for (int k = 0; k < kGrid; ++k) {
    const double p = -kPi / 2 + kPi * k / kGrid;
    vals.emplace_back(f(p), p);
  }
  vals.emplace_back(f0, psi0);
  std::sort(vals.begin(), vals.end());
  double best_f = f0, best_p = psi0;
  const double h = kPi / kGrid;
  for (int i = 0; i < 4; ++i) {
    const double q = golden_min(f, vals[i].second - h, vals[i].second + h, 80);
    const double fq = f(q);
    if (fq < best_f) {
      best_f = fq;
      best_p = q;
    }
  }
  return best_p;
}

RMat4 real_part(const Mat4& M) { return M.real(); }

void check_residual(double r, double tol, const char* what) {
  if (!(r <= tol)) {
    std::ostringstream os;
    os << what << ": reconstruction residual " << r;
    throw Error(ErrorKind::NumericalFailure, os.str());
  }
}

Mat2 to2(const Matrix& m) { return Mat2(m); }

}  // namespace

const Matrix& magic_basis() {
  static const Matrix E = [] {
    Matrix m(4, 4);
    m << 1, kI, 0, 0,
         0, 0, kI, 1,
         0, 0, kI, -1,
         1, -kI, 0, 0;
    return Matrix(m / std::sqrt(2.0));
  }();
  return E;
}

Matrix gamma(const Matrix& u) {
  if (u.rows() != 4 || u.cols() != 4) throw Error(ErrorKind::InvalidInput, "gamma: expected 4x4");
  require_unitary(u, 1e-8, "gamma");
  return u * yy() * u.transpose() * yy();
}

Eigen::Matrix4d real_orthogonal_diagonalizer(const Matrix& M) {
  // Re M and Im M are commuting real symmetric matrices. A generic real
  // combination separates their joint eigenspaces; several combinations are
  // tried and the one leaving the smallest off-diagonal part wins.
  const RMat4 Xr = 0.5 * (M.real() + M.real().transpose());
  const RMat4 Yi = 0.5 * (M.imag() + M.imag().transpose());
  constexpr std::array<double, 5> kMix{0.6180339887498949, -1.324717957244746, 2.414213562373095, 0.0,
                                       -0.414213562373095};
  RMat4 best;
  double best_off = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= static_cast<int>(kMix.size()); ++k) {
    const RMat4 S = k < static_cast<int>(kMix.size()) ? RMat4(Xr + kMix[k] * Yi) : Yi;
    Eigen::SelfAdjointEigenSolver<RMat4> es(S);
    RMat4 P = es.eigenvectors();
    if (P.determinant() < 0) P.col(0) *= -1.0;
    Mat4 D = P.transpose().cast<cplx>() * M * P.cast<cplx>();
    D.diagonal().setZero();
    const double off = D.norm();
    if (off < best_off) {
      best_off = off;
      best = P;
    }
  }
  return best;
}

Vector Su4Decomposition::delta() const {
  Vector d(4);
  for (int k = 0; k < 4; ++k) d[k] = std::polar(1.0, kEps[k] * psi / 2);
  return d;
}

Su4Decomposition decompose_su4_up_to_diagonal(const Matrix& U) {
  if (U.rows() != 4 || U.cols() != 4) {
    throw Error(ErrorKind::InvalidInput, "decompose_su4_up_to_diagonal: expected 4x4");
  }
  require_unitary(U, 1e-8, "decompose_su4_up_to_diagonal");
  Su4Decomposition out;
  out.global_phase = principal_phase(U.determinant()) / 4;
  const Mat4 Us = Mat4(U) * std::polar(1.0, -out.global_phase);

  out.psi = choose_psi(Mat4(gamma(Us)));
  const Vector dl = out.delta();
  const Mat4 DU = dl.asDiagonal() * Us;

  const Pairing roots = pair_conjugates(eigenvalues4(Mat4(gamma(DU))));
  out.theta = (roots.phases[0] + roots.phases[1]) / 2;
  out.phi = (roots.phases[0] - roots.phases[1]) / 2;

  const Mat4 core = cx01() * kron2(rot_x(out.theta), rot_z(out.phi)) * cx01();
  const Mat4 E = magic_basis();
  const Mat4 w1 = E.adjoint() * DU * E;
  const Mat4 w2 = E.adjoint() * core * E;
  const Mat4 M1 = w1 * w1.transpose();
  const Mat4 M2 = w2 * w2.transpose();
  const RMat4 P1 = real_orthogonal_diagonalizer(M1);
  RMat4 P2 = real_orthogonal_diagonalizer(M2);

  // Align the eigenvalue order of P2 with P1.
  const Eigen::Vector4cd l1 = (P1.transpose().cast<cplx>() * M1 * P1.cast<cplx>()).diagonal();
  const Eigen::Vector4cd l2 = (P2.transpose().cast<cplx>() * M2 * P2.cast<cplx>()).diagonal();
  std::array<bool, 4> used{};
  RMat4 P2s;
  for (int i = 0; i < 4; ++i) {
    int bk = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4; ++k) {
      if (used[k]) continue;
      const double d = std::abs(l2[k] - l1[i]);
      if (d < bd) {
        bd = d;
        bk = k;
      }
    }
    used[bk] = true;
    P2s.col(i) = P2.col(bk);
  }
  if (P2s.determinant() < 0) P2s.col(0) *= -1.0;

  const RMat4 K = P1 * P2s.transpose();
  const Mat4 s3 = w2.adjoint() * K.transpose().cast<cplx>() * w1;
  const Mat4 ab = E * real_part(s3).cast<cplx>() * E.adjoint();
  const Mat4 cd = E * K.cast<cplx>() * E.adjoint();
  const auto [a, b] = kron_factor(ab);
  const auto [c, d] = kron_factor(cd);
  out.a = to2(a);
  out.b = to2(b);
  out.c = to2(c);
  out.d = to2(d);

  Circuit& circ = out.circuit;
  circ.add_single(0, out.a);
  circ.add_single(1, out.b);
  circ.add_cnot(0, 1);
  circ.add_single(0, rot_x(out.theta));
  circ.add_single(1, rot_z(out.phi));
  circ.add_cnot(0, 1);
  circ.add_single(0, out.c);
  circ.add_single(1, out.d);
  circ.set_global_phase(out.global_phase);

  check_residual((to_unitary(circ) - dl.asDiagonal() * U).norm(), 1e-7, "decompose_su4_up_to_diagonal");
  return out;
}

Circuit decompose_u4_exact(const Matrix& U) {
  if (U.rows() != 4 || U.cols() != 4) throw Error(ErrorKind::InvalidInput, "decompose_u4_exact: expected 4x4");
  require_unitary(U, 1e-8, "decompose_u4_exact");
  const double g = principal_phase(U.determinant()) / 4;
  const Mat4 Us = Mat4(U) * std::polar(1.0, -g);
  const Mat4 E = magic_basis();

  // Us = k1 * exp(i(a XX + b YY + c ZZ)) * k2 with local k1, k2.
  const Mat4 Um = E.adjoint() * Us * E;
  const Mat4 M = Um.transpose() * Um;
  const RMat4 P = real_orthogonal_diagonalizer(M);
  const Eigen::Vector4cd lam = (P.transpose().cast<cplx>() * M * P.cast<cplx>()).diagonal();
  Eigen::Vector4cd D = lam.cwiseSqrt();
  Mat4 O1 = Um * P.cast<cplx>() * D.cwiseInverse().asDiagonal();
  if (O1.real().determinant() < 0) {
    D[0] = -D[0];
    O1 = Um * P.cast<cplx>() * D.cwiseInverse().asDiagonal();
  }
  const Mat4 k1 = E * real_part(O1).cast<cplx>() * E.adjoint();
  const Mat4 k2 = E * P.transpose().cast<cplx>() * E.adjoint();

  // Diagonals of XX, YY, ZZ in the magic basis fix (a, b, c) from arg(D).
  Mat2 X = pauli_x(), Z = pauli_z(), Y;
  Y << 0, -kI, kI, 0;
  RMat4 A;
  A.col(0).setOnes();
  A.col(1) = (E.adjoint() * kron2(X, X) * E).diagonal().real();
  A.col(2) = (E.adjoint() * kron2(Y, Y) * E).diagonal().real();
  A.col(3) = (E.adjoint() * kron2(Z, Z) * E).diagonal().real();
  Eigen::Vector4d eta_rhs;
  for (int i = 0; i < 4; ++i) eta_rhs[i] = std::arg(D[i]);
  const Eigen::Vector4d eta = A.partialPivLu().solve(eta_rhs);
  const double ca = eta[1], cb = eta[2], cc = eta[3];

  const auto [a1, b1] = kron_factor(k1);
  const auto [a2, b2] = kron_factor(k2);
  // Standard-convention rotations exp(-i t P/2) expressed via rot_*(-t).
  auto Rz = [](double t) { return rot_z(-t); };
  auto Ry = [](double t) { return rot_y(-t); };

  Circuit circ(2);
  circ.add_single(0, to2(a2));
  circ.add_single(1, Rz(-kPi / 2) * to2(b2));
  circ.add_cnot(1, 0);
  circ.add_single(0, Rz(kPi / 2 - 2 * cc));
  circ.add_single(1, Ry(2 * ca - kPi / 2));
  circ.add_cnot(0, 1);
  circ.add_single(1, Ry(kPi / 2 - 2 * cb));
  circ.add_cnot(1, 0);
  circ.add_single(0, to2(a1) * Rz(kPi / 2));
  circ.add_single(1, to2(b1));

  const Matrix Mc = to_unitary(circ);
  circ.set_global_phase(std::arg((Mc.adjoint() * U).trace()));
  check_residual((to_unitary(circ) - U).norm(), 1e-7, "decompose_u4_exact");
  return circ;
}

}  // namespace zxsynth
