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

#include "zxsynth/siable.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "text_io.hpp"
#include "zxsynth/multiplexor.hpp"
#include "zxsynth/spdmm.hpp"

namespace zxsynth {

namespace {

constexpr double kRankTol = 1e-10;

// ---------------------------------------------------------------------------
// Uniformly controlled single-qubit gates, decomposed up to a diagonal.

struct UcgOp {
  bool cz = false;
  int control = 0;  // index into the control list (cz only)
  Mat2 g = Mat2::Identity();
};

struct UcgDecomposition {
  std::vector<UcgOp> ops;
  Vector diag;  // circuit = diag^-1 * UCG, indexed (controls..., target)
};

struct Demux2 {
  Eigen::Vector2cd r;
  Mat2 u, v;
};

// a (+) b = Delta * (I (x) u S^dagger) * CZ * (I (x) v) for a diagonal Delta.
Demux2 demux2(const Mat2& a, const Mat2& b) {
  const Mat2 x = a * b.adjoint();
  const cplx dx = x.determinant() / std::abs(x.determinant());
  // rho2 / rho1 = -x00 / x11 makes r x r traceless. With x11 = det(x) conj(x00)
  // the ratio depends on the phase of x00 only, so r stays exactly unitary;
  // dividing by a small x11 instead lets round-off compound across levels.
  const double m00 = std::abs(x(0, 0));
  const cplx ratio = m00 < 1e-14 ? cplx(1.0) : -(x(0, 0) / m00) * (x(0, 0) / m00) / dx;
  const cplx rho1 = std::sqrt(1.0 / (dx * ratio));
  const cplx rho2 = rho1 * ratio;
  Demux2 out;
  out.r << std::sqrt(rho1), std::sqrt(rho2);
  const Mat2 y = out.r.asDiagonal() * x * out.r.asDiagonal();
  Eigen::ComplexEigenSolver<Mat2> es(y);
  Mat2 u = es.eigenvectors();
  if (std::abs(es.eigenvalues()[0] - kI) > std::abs(es.eigenvalues()[0] + kI)) u.col(0).swap(u.col(1));
  Eigen::HouseholderQR<Mat2> qr(u);
  out.u = qr.householderQ();
  const Eigen::Vector2cd d(std::polar(1.0, kPi / 4), std::polar(1.0, -kPi / 4));
  out.v = d.asDiagonal() * out.u.adjoint() * out.r.conjugate().asDiagonal() * b;
  return out;
}

UcgDecomposition ucg(const std::vector<Mat2>& gates) {
  UcgDecomposition out;
  if (gates.size() == 1) {
    out.ops.push_back({false, 0, gates[0]});
    out.diag = Vector::Ones(2);
    return out;
  }
  const std::size_t half = gates.size() / 2;
  const Mat2 sdg = Eigen::Vector2cd(1.0, -kI).asDiagonal();
  const cplx w = std::polar(1.0, kPi / 4);
  std::vector<Mat2> us(half), vs(half);
  out.diag = Vector(2 * gates.size());
  for (std::size_t q = 0; q < half; ++q) {
    const Demux2 d = demux2(gates[q], gates[half + q]);
    us[q] = d.u * sdg;
    vs[q] = d.v;
    for (int t = 0; t < 2; ++t) {
      out.diag[2 * q + t] = w * std::conj(d.r[t]);
      out.diag[2 * (half + q) + t] = w * d.r[t] * -kI;
    }
  }
  UcgDecomposition dv = ucg(vs);
  for (std::size_t q = 0; q < half; ++q) us[q] = us[q] * dv.diag.segment(2 * q, 2).asDiagonal();
  UcgDecomposition du = ucg(us);
  for (std::size_t q = 0; q < half; ++q)
    for (int c = 0; c < 2; ++c)
      for (int t = 0; t < 2; ++t) out.diag[2 * (c * half + q) + t] *= du.diag[2 * q + t];

  auto push_shifted = [&](const std::vector<UcgOp>& ops) {
    for (UcgOp op : ops) {
      if (op.cz) ++op.control;
      out.ops.push_back(op);
    }
  };
  push_shifted(dv.ops);
  out.ops.push_back({true, 0, Mat2::Identity()});
  push_shifted(du.ops);
  return out;
}

// Emits the UCG (up to its diagonal) with CZ = H CX H on the target, fusing
// adjacent single-qubit gates.
void emit_ucg(Circuit& c, const std::vector<Mat2>& gates, const std::vector<int>& controls, int target) {
  const UcgDecomposition d = ucg(gates);
  Mat2 pending = Mat2::Identity();
  bool has_pending = false;
  auto push = [&](const Mat2& g) {
    pending = g * pending;
    has_pending = true;
  };
  for (const UcgOp& op : d.ops) {
    if (!op.cz) {
      push(op.g);
      continue;
    }
    push(hadamard());
    c.add_single(target, pending);
    c.add_cnot(controls[op.control], target);
    pending = hadamard();
  }
  if (has_pending) c.add_single(target, pending);
}

// Maps (a, b) to (r, 0), or to (0, r) when to_one is set.
Mat2 zero_gate(cplx a, cplx b, bool to_one) {
  const double r = std::hypot(std::abs(a), std::abs(b));
  if (r < 1e-300) return Mat2::Identity();
  Mat2 g;
  g << std::conj(a), std::conj(b), -b, a;
  g /= r;
  return to_one ? Mat2(pauli_x() * g) : g;
}

int bit_of(std::int64_t x, int s) { return static_cast<int>((x >> s) & 1); }

// Shared structure of the column reduction, used both for synthesis and for
// the C-NOT prediction. Bit s (LSB = 0) of an index lives on wire m - 1 - s.
struct ColumnStep {
  bool narrow = false;        // a multi-controlled gate precedes the UCG
  std::vector<int> narrow_bits;  // its control bits, most significant first
  bool ucg_trivial = false;   // every UCG entry is the identity
};

int index_bits(int K) { return K > 1 ? std::bit_width(static_cast<unsigned>(K - 1)) : 0; }

ColumnStep column_step(int m, int j, std::int64_t i, int s) {
  ColumnStep st;
  const std::int64_t ilow = i & ((std::int64_t{1} << s) - 1);
  const std::int64_t hi = i >> (s + 1);
  const int is = bit_of(i, s);
  if (is == 0 && ilow != 0) {
    st.narrow = true;
    for (int b = j - 1; b >= 0; --b)
      if (!(s < j && b == s)) st.narrow_bits.push_back(b);
  }
  const std::int64_t patterns = std::int64_t{1} << (m - 1 - s);
  st.ucg_trivial = (hi == patterns - 1) && (is == 1 || ilow != 0);
  return st;
}

// ---------------------------------------------------------------------------

int encoded_qubits(const Matrix& A) {
  if (A.rows() != A.cols() || A.rows() < 2 || !all_finite(A)) {
    throw Error(ErrorKind::InvalidInput, "block encoding: expected a finite square 2^m x 2^m matrix, m >= 1");
  }
  return qubits_for_dim(A.rows()) + 1;
}

void append_lower(Circuit& c, const Circuit& sub) {
  std::vector<int> w(sub.n_qubits());
  std::iota(w.begin(), w.end(), c.n_qubits() - sub.n_qubits());
  c.append(sub, w);
}

void append_cos_multiplexor(Circuit& c, const RealVector& theta) {
  c.append(synth_ucrz(UcrzSpec{c.n_qubits() - 1, ucrz_thetas_from_demux(theta), UcrzVariant::Full}));
}

struct Scaled {
  double alpha;
  SvdResult svd;
};

Scaled scale(const Matrix& A) {
  SvdResult d = svd(A);
  const double alpha = d.singular_values[0];
  if (!(alpha > 0.0)) throw Error(ErrorKind::ZeroMatrix, "block encoding: matrix is zero");
  d.singular_values /= alpha;
  return {alpha, std::move(d)};
}

RealVector arccos_angles(const RealVector& s) {
  RealVector t(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) t[i] = std::acos(std::clamp(s[i], 0.0, 1.0));
  return t;
}

int rank_of(const RealVector& s) {
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > kRankTol * s[0]) ++r;
  return r;
}

}  // namespace

const char* to_string(EncodingPath p) { return p == EncodingPath::Full ? "full" : "low-rank"; }

int numerical_rank(const Matrix& A) {
  const SvdResult d = svd(A);
  if (!(d.singular_values[0] > 0.0)) throw Error(ErrorKind::ZeroMatrix, "numerical_rank: matrix is zero");
  return rank_of(d.singular_values);
}

Circuit synth_diagonal(const Vector& phases) {
  const int j = qubits_for_dim(phases.size());
  Circuit c(j);
  if (j == 1) {
    c.add_single(0, Mat2(Eigen::Vector2cd(phases[0], phases[1]).asDiagonal()));
    return c;
  }
  // Split off the last wire as a UCRZ target; the pair means recurse upward.
  const Eigen::Index half = phases.size() / 2;
  std::vector<double> nu(half);
  Vector mu(half);
  for (Eigen::Index a = 0; a < half; ++a) {
    const double a0 = std::arg(phases[2 * a]), a1 = std::arg(phases[2 * a + 1]);
    nu[a] = (a1 - a0) / 2;
    mu[a] = std::polar(1.0, (a0 + a1) / 2);
  }
  std::vector<int> ucrz_wires(j);
  ucrz_wires[0] = j - 1;
  std::iota(ucrz_wires.begin() + 1, ucrz_wires.end(), 0);
  c.append(synth_ucrz(UcrzSpec{j - 1, nu, UcrzVariant::Full}), ucrz_wires);
  std::vector<int> upper(j - 1);
  std::iota(upper.begin(), upper.end(), 0);
  c.append(synth_diagonal(mu), upper);
  return c;
}

SynthesisResult synth_isometry_columns(const Matrix& V) {
  if (V.rows() < 2 || V.cols() < 1 || V.cols() > V.rows() || !all_finite(V)) {
    throw Error(ErrorKind::InvalidInput, "synth_isometry_columns: expected a 2^m x K matrix, 1 <= K <= 2^m");
  }
  const int m = qubits_for_dim(V.rows());
  const double e = unitarity_error(V);
  if (!(e <= 1e-9)) {
    std::ostringstream os;
    os << "synth_isometry_columns: column orthonormality error " << e;
    throw Error(ErrorKind::NotIsometry, os.str());
  }
  const int K = static_cast<int>(V.cols());
  SynthesisResult out;
  if (K == 1) {
    out.circuit = prepare_state(V.col(0) / V.col(0).norm());
    out.residual = Vector::Ones(1);
    out.cnots = cnot_count(out.circuit);
    return out;
  }

  const int j = index_bits(K);
  auto wire = [m](int b) { return m - 1 - b; };
  Matrix S = V;
  Circuit reduction(m);
  for (int i = 0; i < K; ++i) {
    for (int s = 0; s < m; ++s) {
      const ColumnStep st = column_step(m, j, i, s);
      const std::int64_t ilow = i & ((std::int64_t{1} << s) - 1);
      const std::int64_t hi = i >> (s + 1);
      const int is = bit_of(i, s);
      if (st.narrow) {
        // Clears the partner amplitude left by the columns already placed.
        std::vector<int> controls;
        std::int64_t pattern = 0;
        for (int b : st.narrow_bits) {
          controls.push_back(wire(b));
          pattern = (pattern << 1) | bit_of(i, b);
        }
        const std::int64_t x = i & ~(std::int64_t{1} << s);
        std::vector<Mat2> gates(std::size_t{1} << controls.size(), Mat2::Identity());
        gates[pattern] = zero_gate(S(x, i), S(x | (std::int64_t{1} << s), i), false);
        Circuit step(m);
        emit_ucg(step, gates, controls, wire(s));
        apply_inplace(step, S);
        reduction.append(step);
      }
      if (st.ucg_trivial) continue;
      std::vector<int> controls;
      for (int b = m - 1; b > s; --b) controls.push_back(wire(b));
      std::vector<Mat2> gates;
      for (std::int64_t h = 0; h < (std::int64_t{1} << controls.size()); ++h) {
        if (h < hi || (h == hi && (is == 1 || ilow != 0))) {
          gates.push_back(Mat2::Identity());
          continue;
        }
        const std::int64_t x = (h << (s + 1)) | ilow;
        gates.push_back(zero_gate(S(x, i), S(x | (std::int64_t{1} << s), i), is == 1));
      }
      Circuit step(m);
      emit_ucg(step, gates, controls, wire(s));
      apply_inplace(step, S);
      reduction.append(step);
    }
  }

  Vector p(K);
  for (int i = 0; i < K; ++i) p[i] = S(i, i) / std::abs(S(i, i));
  const Matrix expect = Matrix::Identity(V.rows(), K) * p.asDiagonal();
  const double err = (S - expect).norm();
  if (!(err <= 1e-7)) {
    std::ostringstream os;
    os << "synth_isometry_columns: reduction residual " << err;
    throw Error(ErrorKind::NumericalFailure, os.str());
  }
  out.circuit = invert(reduction);
  out.residual = p.conjugate();
  out.cnots = cnot_count(out.circuit);
  return out;
}

BlockEncodingResult block_encode_full(const Matrix& A) {
  const int n = encoded_qubits(A);
  const Scaled sc = scale(A);
  const RealVector theta = arccos_angles(sc.svd.singular_values);

  // V^dagger with its diagonal on the left; the diagonal commutes through the
  // multiplexor and is absorbed by the exact W-side synthesis.
  const SynthesisResult rv = synth_unitary_up_to_diag(sc.svd.Vdag.adjoint());
  const Circuit w_side = synth_unitary_exact(sc.svd.W * rv.residual.asDiagonal());

  BlockEncodingResult out;
  out.circuit = Circuit(n);
  out.circuit.add_single(0, hadamard());
  append_lower(out.circuit, invert(rv.circuit));
  append_cos_multiplexor(out.circuit, theta);
  append_lower(out.circuit, w_side);
  out.circuit.add_single(0, hadamard());
  out.alpha = sc.alpha;
  out.declared_rank = rank_of(sc.svd.singular_values);
  out.path = EncodingPath::Full;
  return out;
}

BlockEncodingResult block_encode_low_rank(const Matrix& A, int K) {
  const int n = encoded_qubits(A);
  const Eigen::Index h = A.rows();
  if (K < 1 || K > h - 1) {
    std::ostringstream os;
    os << "block_encode_low_rank: K = " << K << " outside [1, " << h - 1 << "]";
    throw Error(ErrorKind::RankExceeded, os.str());
  }
  const Scaled sc = scale(A);
  const int rank = rank_of(sc.svd.singular_values);
  if (rank > K) {
    std::ostringstream os;
    os << "block_encode_low_rank: numerical rank " << rank << " exceeds K = " << K;
    throw Error(ErrorKind::RankExceeded, os.str());
  }
  RealVector theta = arccos_angles(sc.svd.singular_values);
  theta.tail(h - K).setConstant(kPi / 2);

  const Matrix VK = sc.svd.Vdag.topRows(K).adjoint();
  const Matrix WK = sc.svd.W.leftCols(K);
  Circuit x_side(n - 1), y_side(n - 1);
  if (K == 1) {
    x_side = invert(prepare_state(VK.col(0) / VK.col(0).norm()));
    y_side = prepare_state(WK.col(0) / WK.col(0).norm());
  } else {
    // Row i of the inverted circuit is conj(delta_i) v_i^dagger; the W side
    // takes delta_i back and its own residual is cancelled exactly by a
    // diagonal on the wires that index the first K columns.
    const SynthesisResult rx = synth_isometry_columns(VK);
    x_side = invert(rx.circuit);
    const SynthesisResult ry = synth_isometry_columns(WK * rx.residual.asDiagonal());
    const int j = index_bits(K);
    Vector fix = Vector::Ones(Eigen::Index{1} << j);
    fix.head(K) = ry.residual.conjugate();
    append_lower(y_side, synth_diagonal(fix));
    y_side.append(ry.circuit);
  }

  BlockEncodingResult out;
  out.circuit = Circuit(n);
  out.circuit.add_single(0, hadamard());
  append_lower(out.circuit, x_side);
  append_cos_multiplexor(out.circuit, theta);
  append_lower(out.circuit, y_side);
  out.circuit.add_single(0, hadamard());
  out.alpha = sc.alpha;
  out.declared_rank = K;
  out.path = EncodingPath::LowRank;
  return out;
}

BlockEncodingResult block_encode(const Matrix& A, RankMode mode) {
  switch (mode.kind) {
    case RankMode::Kind::Full:
      return block_encode_full(A);
    case RankMode::Kind::Rank:
      return block_encode_low_rank(A, mode.K);
    case RankMode::Kind::Auto:
      break;
  }
  const int n = encoded_qubits(A);
  const int rank = numerical_rank(A);
  if (rank <= A.rows() - 1 && count_block_encode_low_rank(n, rank) < count_block_encode_full(n)) {
    return block_encode_low_rank(A, rank);
  }
  return block_encode_full(A);
}

std::int64_t count_isometry_columns(int m, int K) {
  if (m < 1 || m > 30 || K < 1 || static_cast<std::int64_t>(K) > (std::int64_t{1} << m)) {
    throw Error(ErrorKind::InvalidInput, "count_isometry_columns: need 1 <= K <= 2^m");
  }
  if (K == 1) return nstate_count(m);
  const int j = index_bits(K);
  std::int64_t total = 0;
  for (int i = 0; i < K; ++i)
    for (int s = 0; s < m; ++s) {
      const ColumnStep st = column_step(m, j, i, s);
      if (st.narrow) total += (std::int64_t{1} << st.narrow_bits.size()) - 1;
      if (!st.ucg_trivial) total += (std::int64_t{1} << (m - 1 - s)) - 1;
    }
  return total;
}

std::int64_t count_block_encode_full(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "count_block_encode_full: n >= 2 required");
  const int m = n - 1;
  return count_unitary_up_to_diag(m) + (std::int64_t{1} << m) + count_unitary_exact(m);
}

std::int64_t count_block_encode_low_rank(int n, int K) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "count_block_encode_low_rank: n >= 2 required");
  const int m = n - 1;
  if (K < 1 || static_cast<std::int64_t>(K) > (std::int64_t{1} << m) - 1) {
    throw Error(ErrorKind::RankExceeded, "count_block_encode_low_rank: K outside [1, 2^(n-1) - 1]");
  }
  const std::int64_t mux = std::int64_t{1} << m;
  if (K == 1) return 2 * nstate_count(m) + mux;
  const int j = index_bits(K);
  const std::int64_t fix = j >= 2 ? (std::int64_t{1} << j) - 2 : 0;
  return 2 * count_isometry_columns(m, K) + mux + fix;
}

std::int64_t block_encoding_lower_bound(int n) {
  if (n < 2 || n > 30) throw Error(ErrorKind::InvalidInput, "block_encoding_lower_bound: 2 <= n <= 30");
  // ceil((4^n - 6n) / 8)
  const std::int64_t num = (std::int64_t{1} << (2 * n)) - 6 * n;
  return (num + 7) / 8;
}

std::int64_t unitary_lower_bound(int n) {
  if (n < 1 || n > 30) throw Error(ErrorKind::InvalidInput, "unitary_lower_bound: 1 <= n <= 30");
  const std::int64_t num = (std::int64_t{1} << (2 * n)) - 3 * n - 1;
  return (num + 3) / 4;
}

double fitted_low_rank_constant() {
  double c = 0.0;
  for (int n = 3; n <= 10; ++n) {
    const int kmax = std::min((1 << (n - 1)) - 1, 16);
    for (int K = 1; K <= kmax; ++K) {
      const double lead = (K + 11.0 / 12.0) * std::ldexp(1.0, n);
      const double slack = (static_cast<double>(count_block_encode_low_rank(n, K)) - lead) / (K * n * n);
      c = std::max(c, slack);
    }
  }
  return c;
}

Matrix parse_matrix_text(const std::string& text) {
  detail::TokenReader in(text, "matrix file");
  const int line = in.line();
  const long long rows = in.integer();
  const long long cols = in.integer();
  if (rows < 1 || cols < 1 || rows > (1 << 14) || cols > (1 << 14)) {
    detail::fail("matrix file", line, "dimensions must be in [1, 16384]");
  }
  Matrix M(rows, cols);
  for (long long i = 0; i < rows; ++i)
    for (long long j = 0; j < cols; ++j) M(i, j) = in.complex();
  in.expect_end();
  return M;
}

std::string format_matrix_text(const Matrix& M) {
  std::string out = std::to_string(M.rows()) + " " + std::to_string(M.cols()) + "\n";
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) out += detail::format_complex(M(i, j)) + "\n";
  return out;
}

}  // namespace zxsynth
