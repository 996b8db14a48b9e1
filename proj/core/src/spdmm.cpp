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

#include "zxsynth/spdmm.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "text_io.hpp"
#include "zxsynth/blockzxz.hpp"

namespace zxsynth {

namespace {

Circuit prepare(const Vector& psi) {
  const int n = qubits_for_dim(psi.size());
  if (n == 1) {
    const Vector v = psi / psi.norm();
    Mat2 g;
    g << v[0], -std::conj(v[1]), v[1], std::conj(v[0]);
    Circuit c(1);
    c.add_single(0, g);
    return c;
  }
  // Bottom register: m wires; top register: t = n - m wires.
  const int m = n / 2;
  const int t = n - m;
  const Eigen::Index rows = Eigen::Index{1} << t;
  const Eigen::Index cols = Eigen::Index{1} << m;
  Matrix Psi(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) Psi(i, j) = psi[i * cols + j];

  const SvdResult d = svd(Psi);
  const SynthesisResult top = (t == m) ? synth_unitary_up_to_diag(d.W)
                                       : synth_isometry_up_to_diag(d.W.leftCols(cols));
  const SynthesisResult bottom = synth_unitary_up_to_diag(d.Vdag.transpose());

  // Fold both residual diagonals into the Schmidt coefficients.
  Vector next(cols);
  for (Eigen::Index l = 0; l < cols; ++l) {
    next[l] = d.singular_values[l] * std::conj(top.residual[l]) * std::conj(bottom.residual[l]);
  }
  const Circuit sub = prepare(next);

  Circuit c(n);
  std::vector<int> sub_wires(m);
  std::iota(sub_wires.begin(), sub_wires.end(), t - m);
  c.append(sub, sub_wires);
  for (int j = 0; j < m; ++j) c.add_cnot(t - m + j, t + j);
  std::vector<int> top_wires(t), bottom_wires(m);
  std::iota(top_wires.begin(), top_wires.end(), 0);
  std::iota(bottom_wires.begin(), bottom_wires.end(), t);
  c.append(top.circuit, top_wires);
  c.append(bottom.circuit, bottom_wires);
  return c;
}

}  // namespace

Circuit prepare_state(const Vector& psi) {
  if (psi.size() < 2 || !all_finite(psi)) {
    throw Error(ErrorKind::InvalidInput, "prepare_state: need a finite vector of length 2^n, n >= 1");
  }
  qubits_for_dim(psi.size());
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "prepare_state: norm " << norm;
    throw Error(ErrorKind::NotNormalized, os.str());
  }
  return prepare(psi);
}

std::int64_t nstate_count(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "nstate_count: n >= 1 required");
  if (n == 1) return 0;
  const int m = n / 2;
  if (n % 2 == 0) return nstate_count(m) + 2 * count_unitary_up_to_diag(m) + m;
  return nstate_count(m) + count_isometry_up_to_diag(m + 1) + count_unitary_up_to_diag(m) + m;
}

std::int64_t nstate_count_closed_form(int n) {
  if (n < 4 || n > 60) throw Error(ErrorKind::InvalidInput, "nstate_count_closed_form: 4 <= n <= 60");
  const int l = std::bit_width(static_cast<unsigned>(n));
  const std::int64_t b = n >> (l - 2);
  // Everything is scaled by 12 to stay in integers.
  std::int64_t twelve = 0;
  for (int i = 0; i <= l - 3; ++i) {
    const std::int64_t q = n >> i;
    const bool even = (q % 2) == 0;
    twelve += 11 * (std::int64_t{1} << q);
    twelve -= 12 * (even ? 3 : 4) * (std::int64_t{1} << (n >> (i + 1)));
    twelve += even ? 16 : 20;
  }
  twelve += 12 * (n - std::popcount(static_cast<unsigned>(n)) - 1);
  twelve += 6 * b * (b - 1);
  if (twelve % 12 != 0) throw Error(ErrorKind::NumericalFailure, "nstate_count_closed_form: non-integer value");
  return twelve / 12;
}

std::int64_t state_prep_lower_bound(int n) {
  if (n < 1 || n > 60) throw Error(ErrorKind::InvalidInput, "state_prep_lower_bound: 1 <= n <= 60");
  // ceil((2^(n+1) - 3n - 1) / 4)
  const std::int64_t num = (std::int64_t{1} << (n + 1)) - 3 * n - 1;
  return num >= 0 ? (num + 3) / 4 : -((-num) / 4);
}

Vector parse_state_text(const std::string& text) {
  detail::TokenReader in(text, "state file");
  const int line = in.line();
  const long long n = in.integer();
  if (n < 1 || n > 30) detail::fail("state file", line, "qubit count must be in [1, 30]");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Vector psi(dim);
  for (Eigen::Index k = 0; k < dim; ++k) psi[k] = in.complex();
  in.expect_end();
  return psi;
}

std::string format_state_text(const Vector& psi) {
  std::string out = std::to_string(qubits_for_dim(psi.size())) + "\n";
  for (Eigen::Index k = 0; k < psi.size(); ++k) out += detail::format_complex(psi[k]) + "\n";
  return out;
}

}  // namespace zxsynth
