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
#include <string>
#include <vector>

#include "zxsynth/blockzxz.hpp"
#include "zxsynth/circuit.hpp"

namespace zxsynth {

enum class EncodingPath { Full, LowRank };

const char* to_string(EncodingPath p);

/// Single-ancilla block encoding. Wire 0 is the ancilla; the top-left
/// 2^(n-1) block of the circuit's unitary is A / alpha.
struct BlockEncodingResult {
  Circuit circuit{2};
  double alpha = 1.0;
  int declared_rank = 0;
  EncodingPath path = EncodingPath::Full;
};

BlockEncodingResult block_encode_full(const Matrix& A);

/// Requires numerical rank(A) <= K <= dim(A) - 1.
BlockEncodingResult block_encode_low_rank(const Matrix& A, int K);

struct RankMode {
  enum class Kind { Auto, Full, Rank } kind = Kind::Auto;
  int K = 0;

  static RankMode automatic() { return {Kind::Auto, 0}; }
  static RankMode full() { return {Kind::Full, 0}; }
  static RankMode rank(int k) { return {Kind::Rank, k}; }
};

/// Auto picks whichever path has the lower predicted C-NOT count.
BlockEncodingResult block_encode(const Matrix& A, RankMode mode = RankMode::automatic());

/// Column-by-column reduction of a 2^m x K isometry. The first K columns of
/// the circuit equal V * diag(residual).
SynthesisResult synth_isometry_columns(const Matrix& V);

/// Diagonal unitary diag(phases) on log2(size) wires, exact, 2^j - 2 C-NOTs.
Circuit synth_diagonal(const Vector& phases);

/// sigma_i > 1e-10 * sigma_max.
int numerical_rank(const Matrix& A);

// C-NOT counts. All are exact for the implementation, independent of the
// matrix entries.
std::int64_t count_isometry_columns(int m, int K);
std::int64_t count_block_encode_full(int n);
std::int64_t count_block_encode_low_rank(int n, int K);

/// ceil(4^n/8 - 3n/4).
std::int64_t block_encoding_lower_bound(int n);

/// ceil((4^n - 3n - 1)/4), the unitary-synthesis lower bound.
std::int64_t unitary_lower_bound(int n);

/// Slack constant C in count <= (K + 11/12) 2^n + C K n^2, fitted over the
/// grid n = 3..10, K = 1..min(2^(n-1) - 1, 16); pinned in tests.
double fitted_low_rank_constant();

/// Matrix file: first line "rows cols", then rows*cols "re im" pairs in
/// row-major order, any whitespace.
Matrix parse_matrix_text(const std::string& text);
std::string format_matrix_text(const Matrix& M);

}  // namespace zxsynth
