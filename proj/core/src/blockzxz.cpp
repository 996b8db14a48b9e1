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

#include "zxsynth/blockzxz.hpp"

#include <numeric>
#include <sstream>

#include "zxsynth/multiplexor.hpp"
#include "zxsynth/su4.hpp"

namespace zxsynth {

namespace {

constexpr double kPartTol = 1e-7;

void check_part(const Matrix& X, const char* name) {
  const double e = unitarity_error(X);
  if (!(e <= kPartTol)) {
    std::ostringstream os;
    os << "block_zxz: part " << name << " unitarity error " << e;
    throw Error(ErrorKind::NumericalFailure, os.str());
  }
}

std::vector<int> shifted_wires(int count) {
  std::vector<int> w(count);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

void append_lower(Circuit& c, const Circuit& sub) { c.append(sub, shifted_wires(sub.n_qubits())); }

void append_ucrz(Circuit& c, const RealVector& d_phases, int k, UcrzVariant v) {
  c.append(synth_ucrz(UcrzSpec{k, ucrz_thetas_from_demux(d_phases), v}));
}

Vector conj_of(const Vector& d) { return d.conjugate(); }

// Z on the top wire of a register of dimension h.
Vector top_z(Eigen::Index h) {
  Vector z = Vector::Ones(h);
  z.tail(h / 2).setConstant(-1.0);
  return z;
}

// The three multiplexors around the Hadamard pair, demultiplexed. The middle
// multiplexor absorbs the C-NOTs dropped from the outer UCRZs, which turn
// into Z on the lower register's top wire when pushed through the Hadamards.
// Without the N factor only the output-side C-NOT is dropped.
struct Layers {
  DemuxResult outer_n;  // I (+) N
  DemuxResult middle;   // merged middle multiplexor
  DemuxResult outer_m;  // M1 (+) M2
};

Layers layers_for(const BlockZxzParts& p, bool with_n) {
  Layers out;
  const Eigen::Index h = p.M1.rows();
  const Vector z1 = top_z(h);
  Matrix Wn = Matrix::Identity(h, h);
  if (with_n) {
    out.outer_n = demux(Matrix::Identity(h, h), p.N);
    Wn = out.outer_n.W;
  }
  out.outer_m = demux(p.M1, p.M2);
  const Matrix VmDag = out.outer_m.V.adjoint();
  const Matrix lo = VmDag * Wn;
  Matrix hi = z1.asDiagonal() * (VmDag * p.L * Wn);
  if (with_n) hi = hi * z1.asDiagonal();
  out.middle = demux(lo, hi);
  return out;
}

SynthesisResult finish(Circuit c, Vector residual) {
  SynthesisResult r;
  r.cnots = cnot_count(c);
  r.circuit = std::move(c);
  r.residual = std::move(residual);
  return r;
}

SynthesisResult up_to_diag(const Matrix& U);

Circuit exact(const Matrix& U) {
  const int n = qubits_for_dim(U.rows());
  if (n == 1) {
    Circuit c(1);
    c.add_single(0, Mat2(U));
    return c;
  }
  if (n == 2) return decompose_u4_exact(U);

  const BlockZxzParts p = block_zxz(U);
  const Layers ly = layers_for(p, true);
  const int k = n - 1;

  const SynthesisResult r1 = up_to_diag(ly.outer_m.W);
  const SynthesisResult r2 = up_to_diag(conj_of(r1.residual).asDiagonal() * ly.middle.W);
  const SynthesisResult r3 = up_to_diag(conj_of(r2.residual).asDiagonal() * ly.middle.V.adjoint());
  const Circuit r4 = exact(conj_of(r3.residual).asDiagonal() * ly.outer_n.V.adjoint());

  Circuit c(n);
  append_lower(c, r4);
  append_ucrz(c, ly.outer_n.d_phases, k, UcrzVariant::RL);
  c.add_single(0, hadamard());
  append_lower(c, r3.circuit);
  append_ucrz(c, ly.middle.d_phases, k, UcrzVariant::Full);
  append_lower(c, r2.circuit);
  c.add_single(0, hadamard());
  append_ucrz(c, ly.outer_m.d_phases, k, UcrzVariant::RR);
  append_lower(c, r1.circuit);
  return c;
}

SynthesisResult up_to_diag(const Matrix& U) {
  const int n = qubits_for_dim(U.rows());
  if (n == 1) {
    Circuit c(1);
    c.add_single(0, Mat2(U));
    return finish(std::move(c), Vector::Ones(2));
  }
  if (n == 2) {
    // The two-C-NOT form leaves its diagonal on the output side; applying it
    // to U^dagger and inverting moves the diagonal to the input side.
    const Su4Decomposition d = decompose_su4_up_to_diagonal(U.adjoint());
    return finish(invert(d.circuit), d.delta().conjugate());
  }

  const BlockZxzParts p = block_zxz(U);
  const Layers ly = layers_for(p, true);
  const int k = n - 1;

  // Residual diagonals migrate from the output end towards the input end.
  const SynthesisResult r1 = up_to_diag(ly.outer_m.W);
  const SynthesisResult r2 = up_to_diag(conj_of(r1.residual).asDiagonal() * ly.middle.W);
  const SynthesisResult r3 = up_to_diag(conj_of(r2.residual).asDiagonal() * ly.middle.V.adjoint());
  const SynthesisResult r4 = up_to_diag(conj_of(r3.residual).asDiagonal() * ly.outer_n.V.adjoint());

  Circuit c(n);
  append_lower(c, r4.circuit);
  append_ucrz(c, ly.outer_n.d_phases, k, UcrzVariant::RL);
  c.add_single(0, hadamard());
  append_lower(c, r3.circuit);
  append_ucrz(c, ly.middle.d_phases, k, UcrzVariant::Full);
  append_lower(c, r2.circuit);
  c.add_single(0, hadamard());
  append_ucrz(c, ly.outer_m.d_phases, k, UcrzVariant::RR);
  append_lower(c, r1.circuit);

  Vector res(2 * r4.residual.size());
  res << r4.residual, r4.residual;
  return finish(std::move(c), std::move(res));
}

void require_square_unitary(const Matrix& U, const char* what) {
  if (U.rows() != U.cols()) throw Error(ErrorKind::InvalidInput, std::string(what) + ": not square");
  qubits_for_dim(U.rows());
  require_unitary(U, 1e-8, what);
}

}  // namespace

BlockZxzParts block_zxz(const Matrix& U) {
  require_square_unitary(U, "block_zxz");
  if (U.rows() < 4) throw Error(ErrorKind::InvalidInput, "block_zxz: needs at least two qubits");
  const Eigen::Index h = U.rows() / 2;
  const Matrix A = U.topLeftCorner(h, h), B = U.topRightCorner(h, h);
  const Matrix C = U.bottomLeftCorner(h, h), D = U.bottomRightCorner(h, h);
  const auto [SA, UA] = polar_left(A);
  const auto [SB, UB] = polar_left(B);
  BlockZxzParts p;
  p.M1 = (SA + kI * SB) * UA;
  p.M2 = C + kI * D * UB.adjoint() * UA;
  p.N = (kI * UB.adjoint() * UA).adjoint();
  p.L = 2.0 * p.M1.adjoint() * A - Matrix::Identity(h, h);
  check_part(p.M1, "M1");
  check_part(p.M2, "M2");
  check_part(p.L, "L");
  check_part(p.N, "N");
  return p;
}

SynthesisResult synth_unitary_up_to_diag(const Matrix& U) {
  require_square_unitary(U, "synth_unitary_up_to_diag");
  return up_to_diag(U);
}

Circuit synth_unitary_exact(const Matrix& U) {
  require_square_unitary(U, "synth_unitary_exact");
  return exact(U);
}

Matrix complete_isometry(const Matrix& V) {
  Eigen::HouseholderQR<Matrix> qr(V);
  Matrix Q = qr.householderQ();
  Matrix U(V.rows(), V.rows());
  U << V, Q.rightCols(V.rows() - V.cols());
  return U;
}

SynthesisResult synth_isometry_up_to_diag(const Matrix& V) {
  if (V.rows() < 4 || V.rows() != 2 * V.cols() || !all_finite(V)) {
    throw Error(ErrorKind::InvalidInput, "synth_isometry_up_to_diag: expected a 2^n x 2^(n-1) matrix, n >= 2");
  }
  const int n = qubits_for_dim(V.rows());
  const double e = unitarity_error(V);
  if (!(e <= 1e-9)) {
    std::ostringstream os;
    os << "synth_isometry_up_to_diag: column orthonormality error " << e;
    throw Error(ErrorKind::NotIsometry, os.str());
  }
  const Matrix U = complete_isometry(V);
  const Eigen::Index h = V.cols();
  if (n == 2) {
    SynthesisResult r = up_to_diag(U);
    r.residual = r.residual.head(h).eval();
    return r;
  }
  // Only inputs with wire 0 in |0> matter, so the I (+) N factor drops out.
  const BlockZxzParts p = block_zxz(U);
  const Layers ly = layers_for(p, false);
  const int k = n - 1;

  const SynthesisResult r1 = up_to_diag(ly.outer_m.W);
  const SynthesisResult r2 = up_to_diag(conj_of(r1.residual).asDiagonal() * ly.middle.W);
  const SynthesisResult r3 = up_to_diag(conj_of(r2.residual).asDiagonal() * ly.middle.V.adjoint());

  Circuit c(n);
  c.add_single(0, hadamard());
  append_lower(c, r3.circuit);
  append_ucrz(c, ly.middle.d_phases, k, UcrzVariant::Full);
  append_lower(c, r2.circuit);
  c.add_single(0, hadamard());
  append_ucrz(c, ly.outer_m.d_phases, k, UcrzVariant::RR);
  append_lower(c, r1.circuit);
  return finish(std::move(c), r3.residual);
}

std::int64_t count_unitary_up_to_diag(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "count: n >= 1 required");
  if (n == 1) return 0;
  if (n == 2) return 2;
  return 4 * count_unitary_up_to_diag(n - 1) + 3 * (std::int64_t{1} << (n - 1)) - 2;
}

std::int64_t count_unitary_exact(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "count: n >= 1 required");
  if (n == 1) return 0;
  if (n == 2) return 3;
  return 3 * count_unitary_up_to_diag(n - 1) + count_unitary_exact(n - 1) + 3 * (std::int64_t{1} << (n - 1)) - 2;
}

std::int64_t count_isometry_up_to_diag(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "count: n >= 2 required");
  if (n == 2) return 2;
  return 3 * count_unitary_up_to_diag(n - 1) + (std::int64_t{1} << n) - 1;
}

}  // namespace zxsynth
