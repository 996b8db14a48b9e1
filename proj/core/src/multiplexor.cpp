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

#include "zxsynth/multiplexor.hpp"

#include <bit>
#include <cmath>

namespace zxsynth {

DemuxResult demux(const Matrix& A1, const Matrix& A2) {
  if (A1.rows() != A2.rows() || A1.cols() != A2.cols()) {
    throw Error(ErrorKind::InvalidInput, "demux: block size mismatch");
  }
  require_unitary(A1, 1e-8, "demux A1");
  require_unitary(A2, 1e-8, "demux A2");
  const UnitaryEig e = unitary_eig(A1 * A2.adjoint());
  DemuxResult out;
  out.d_phases = e.phases / 2.0;
  out.W = e.W;
  Vector d(out.d_phases.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = std::polar(1.0, out.d_phases[i]);
  out.V = (d.asDiagonal() * e.W.adjoint() * A2).adjoint();
  return out;
}

std::vector<double> ucrz_angles(const std::vector<double>& thetas) {
  const std::size_t N = thetas.size();
  if (N == 0 || (N & (N - 1)) != 0) {
    throw Error(ErrorKind::InvalidInput, "ucrz_angles: length must be a power of two");
  }
  // Rotation i picks up sign (-1)^popcount(j & gray(i)) for select value j.
  std::vector<double> w = thetas;
  for (std::size_t h = 1; h < N; h <<= 1)
    for (std::size_t i = 0; i < N; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
  std::vector<double> phi(N);
  for (std::size_t i = 0; i < N; ++i) phi[i] = w[i ^ (i >> 1)] / static_cast<double>(N);
  return phi;
}

Circuit synth_ucrz(const UcrzSpec& spec) {
  const int k = spec.k;
  if (k < 0) throw Error(ErrorKind::InvalidInput, "synth_ucrz: negative select count");
  const std::size_t N = std::size_t{1} << k;
  if (spec.thetas.size() != N) throw Error(ErrorKind::InvalidInput, "synth_ucrz: expected 2^k angles");
  const std::vector<double> phi = ucrz_angles(spec.thetas);
  Circuit c(k + 1);
  if (k == 0) {
    c.add_single(0, rot_z(-2 * phi[0]));
    return c;
  }
  // CX after rotation i flips the bit in which gray(i) and gray(i+1) differ.
  auto ctrl_wire = [&](std::size_t i) {
    const int bit = i + 1 < N ? std::countr_zero(i + 1) : k - 1;
    return k - bit;
  };
  if (spec.variant == UcrzVariant::RR) {
    for (std::size_t i = N; i-- > 0;) {
      if (i + 1 < N) c.add_cnot(ctrl_wire(i), 0);
      c.add_single(0, rot_z(-2 * phi[i]));
    }
    return c;
  }
  for (std::size_t i = 0; i < N; ++i) {
    c.add_single(0, rot_z(-2 * phi[i]));
    if (i + 1 < N || spec.variant == UcrzVariant::Full) c.add_cnot(ctrl_wire(i), 0);
  }
  return c;
}

Matrix ucrz_matrix(const std::vector<double>& thetas) {
  const Eigen::Index N = static_cast<Eigen::Index>(thetas.size());
  Matrix M = Matrix::Zero(2 * N, 2 * N);
  for (Eigen::Index j = 0; j < N; ++j) {
    M(j, j) = std::polar(1.0, -thetas[j]);
    M(N + j, N + j) = std::polar(1.0, thetas[j]);
  }
  return M;
}

std::vector<double> ucrz_thetas_from_demux(const RealVector& d_phases) {
  std::vector<double> t(d_phases.size());
  for (Eigen::Index i = 0; i < d_phases.size(); ++i) t[i] = -d_phases[i];
  return t;
}

double diag_commutes_through(UcrzVariant variant, int k, int trials, Rng& rng) {
  if (k < 1 || k > 5) throw Error(ErrorKind::InvalidInput, "diag_commutes_through: 1 <= k <= 5");
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  const Eigen::Index N = Eigen::Index{1} << k;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    UcrzSpec spec{k, std::vector<double>(N), variant};
    for (double& x : spec.thetas) x = ang(rng);
    const Matrix R = to_unitary(synth_ucrz(spec));
    Vector d(2 * N);
    for (Eigen::Index j = 0; j < N; ++j) d[j] = d[N + j] = std::polar(1.0, ang(rng));
    const Matrix D = d.asDiagonal();
    worst = std::max(worst, (D * R - R * D).norm());
  }
  return worst;
}

}  // namespace zxsynth
