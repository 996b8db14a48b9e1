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

#include <cstdint>

#include "zxsynth/circuit.hpp"

namespace zxsynth {

/// U = (M1 (+) M2) (H (x) I) (I (+) L) (H (x) I) (I (+) N).
struct BlockZxzParts {
  Matrix M1, M2, L, N;
};

BlockZxzParts block_zxz(const Matrix& U);

/// Circuit plus the diagonal it leaves on the input side:
/// to_unitary(circuit) = target * diag(residual).
struct SynthesisResult {
  Circuit circuit{1};
  DiagonalPhases residual;
  int cnots = 0;
};

SynthesisResult synth_unitary_up_to_diag(const Matrix& U);

/// Exact synthesis, global phase included.
Circuit synth_unitary_exact(const Matrix& U);

/// V is 2^n x 2^(n-1) with orthonormal columns. The first 2^(n-1) columns of
/// the circuit equal V * diag(residual).
SynthesisResult synth_isometry_up_to_diag(const Matrix& V);

/// Unitary whose leading columns are V (V must have orthonormal columns).
Matrix complete_isometry(const Matrix& V);

// C-NOT counts of the routines above.
std::int64_t count_unitary_up_to_diag(int n);
std::int64_t count_unitary_exact(int n);
std::int64_t count_isometry_up_to_diag(int n);

}  // namespace zxsynth
