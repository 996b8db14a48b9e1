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

#include "zxsynth/circuit.hpp"

namespace zxsynth {

/// Two-C-NOT decomposition of a two-qubit unitary up to a diagonal:
///   (c(x)d) CX (R_X(theta)(x)R_Z(phi)) CX (a(x)b) = Delta * U * exp(-i*global_phase)
/// with Delta = diag(e^{-i psi/2}, e^{i psi/2}, e^{i psi/2}, e^{-i psi/2}).
struct Su4Decomposition {
  Mat2 a, b, c, d;
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  double global_phase = 0.0;  ///< arg(det U)/4
  Circuit circuit{2};         ///< to_unitary(circuit) == delta() * U

  Vector delta() const;
};

/// The magic basis.
const Matrix& magic_basis();

/// gamma(u) = u (Y(x)Y) u^T (Y(x)Y).
Matrix gamma(const Matrix& u);

Su4Decomposition decompose_su4_up_to_diagonal(const Matrix& U);

/// Exact three-C-NOT synthesis, global phase included.
Circuit decompose_u4_exact(const Matrix& U);

/// Orthogonal P (det +1) that diagonalises a complex symmetric unitary M by
/// real congruence, P^T M P diagonal. Exposed for testing.
Eigen::Matrix4d real_orthogonal_diagonalizer(const Matrix& M);

}  // namespace zxsynth
