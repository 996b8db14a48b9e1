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

#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "test_util.hpp"
#include "zxsynth/circuit.hpp"

namespace zxsynth {
namespace {

using testing::frob;

Matrix cx_matrix() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Circuit random_circuit(int n, int depth, Rng& rng) {
  Circuit c(n);
  std::uniform_int_distribution<int> wire(0, n - 1);
  for (int i = 0; i < depth; ++i) {
    const int t = wire(rng);
    if (i % 3 == 2 && n > 1) {
      int ctl = wire(rng);
      while (ctl == t) ctl = wire(rng);
      c.add_cnot(ctl, t);
    } else {
      c.add_single(t, random_unitary(2, rng));
    }
  }
  c.set_global_phase(0.37);
  return c;
}

// Standalone interpreter for the u3/cx subset, kept independent of the
// library's own matrix builders.
Matrix interpret_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  double phase = 0.0;
  Matrix U;
  const std::regex qreg(R"(qreg q\[(\d+)\];)");
  const std::regex u3(R"(u3\(([^,]+),([^,]+),([^)]+)\) q\[(\d+)\];)");
  const std::regex cx(R"(cx q\[(\d+)\],q\[(\d+)\];)");
  const std::regex gp(R"(// global_phase: (\S+))");
  auto embed = [&](int target, const Eigen::Matrix2cd& g) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Eigen::Index bit = Eigen::Index{1} << (n - 1 - target);
    Matrix G = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const int bi = (i & bit) ? 1 : 0;
      for (int bj = 0; bj < 2; ++bj) G((i & ~bit) | (bj ? bit : 0), i) = g(bj, bi);
    }
    U = G * U;
  };
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, qreg)) {
      n = std::stoi(m[1]);
      U = Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    } else if (std::regex_match(line, m, u3)) {
      const double th = std::stod(m[1]), ph = std::stod(m[2]), la = std::stod(m[3]);
      Eigen::Matrix2cd g;
      g << std::cos(th / 2), -std::exp(kI * la) * std::sin(th / 2), std::exp(kI * ph) * std::sin(th / 2),
          std::exp(kI * (ph + la)) * std::cos(th / 2);
      embed(std::stoi(m[4]), g);
    } else if (std::regex_match(line, m, cx)) {
      const int ctl = std::stoi(m[1]), tgt = std::stoi(m[2]);
      const Eigen::Index dim = Eigen::Index{1} << n;
      const Eigen::Index cb = Eigen::Index{1} << (n - 1 - ctl), tb = Eigen::Index{1} << (n - 1 - tgt);
      Matrix P = Matrix::Zero(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) P((i & cb) ? (i ^ tb) : i, i) = 1.0;
      U = P * U;
    } else if (std::regex_match(line, m, gp)) {
      phase = std::stod(m[1]);
    }
  }
  return std::exp(kI * phase) * U;
}

TEST(Circuit, CnotMatrixUsesWireZeroAsMostSignificant) {
  Circuit c(2);
  c.add_cnot(0, 1);
  EXPECT_LT(frob(to_unitary(c), cx_matrix()), 1e-15);
  EXPECT_EQ(cnot_count(c), 1);
}

TEST(Circuit, SingleQubitGateEmbedding) {
  Rng rng(1);
  const Matrix g = random_unitary(2, rng);
  Circuit c(3);
  c.add_single(1, g);
  const Matrix expect = kron(kron(Matrix::Identity(2, 2), g), Matrix::Identity(2, 2));
  EXPECT_LT(frob(to_unitary(c), expect), 1e-14);
}

TEST(Circuit, GateOrderIsLeftToRightInTime) {
  Circuit c(1);
  c.add_single(0, hadamard());
  c.add_single(0, pauli_z());
  EXPECT_LT(frob(to_unitary(c), Matrix(pauli_z() * hadamard())), 1e-15);
}

TEST(Circuit, StatevectorAgreesWithDenseUnitary) {
  Rng rng(2);
  for (int n : {1, 3, 6}) {
    const Circuit c = random_circuit(n, 60, rng);
    const Vector psi = random_state(Eigen::Index{1} << n, rng);
    EXPECT_LT((zxsynth::apply(c, psi) - to_unitary(c) * psi).norm(), 1e-12);
    Matrix block = random_gaussian(Eigen::Index{1} << n, 3, rng);
    const Matrix expect = to_unitary(c) * block;
    apply_inplace(c, block);
    EXPECT_LT(frob(block, expect), 1e-12);
  }
}

TEST(Circuit, InverseIsAdjoint) {
  Rng rng(3);
  const Circuit c = random_circuit(4, 80, rng);
  const Circuit inv = invert(c);
  EXPECT_EQ(cnot_count(inv), cnot_count(c));
  EXPECT_LT(frob(to_unitary(inv), to_unitary(c).adjoint()), 1e-12);
}

TEST(Circuit, AppendRelabelsWiresAndAddsPhases) {
  Circuit sub(2);
  sub.add_cnot(0, 1);
  sub.set_global_phase(0.25);
  Circuit c(3);
  c.set_global_phase(0.5);
  c.append(sub, {2, 0});
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0].control, 2);
  EXPECT_EQ(c.gates()[0].target, 0);
  EXPECT_DOUBLE_EQ(c.global_phase(), 0.75);
}

TEST(Circuit, RejectsBadWires) {
  Circuit c(2);
  EXPECT_THROW(c.add_cnot(0, 0), Error);
  EXPECT_THROW(c.add_cnot(0, 2), Error);
  EXPECT_THROW(c.add_single(-1, hadamard()), Error);
}

TEST(Circuit, DenseConstructionIsCapped) {
  Circuit c(15);
  try {
    to_unitary(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Rotations, Conventions) {
  const double t = 0.7;
  const Mat2 rz = rot_z(t);
  EXPECT_LT(std::abs(rz(0, 0) - std::exp(kI * t / 2.0)), 1e-15);
  EXPECT_LT(std::abs(rz(1, 1) - std::exp(-kI * t / 2.0)), 1e-15);
  EXPECT_LT(std::abs(rz(0, 1)), 1e-15);
  EXPECT_LT(std::abs(rot_y(t)(1, 0) + std::sin(t / 2)), 1e-15);
  EXPECT_LT(std::abs(rot_x(t)(0, 1) - kI * std::sin(t / 2)), 1e-15);
}

TEST(U3, AnglesReproduceGate) {
  Rng rng(4);
  std::vector<Mat2> cases;
  for (int i = 0; i < 50; ++i) cases.push_back(random_unitary(2, rng));
  cases.push_back(Mat2::Identity());
  cases.push_back(pauli_x());
  cases.push_back(pauli_z() * kI);
  cases.push_back(hadamard());
  for (const Mat2& U : cases) {
    const U3Angles a = u3_angles(U);
    const Mat2 back = std::exp(kI * a.phase) * u3_matrix(a.theta, a.phi, a.lambda);
    EXPECT_LT((back - U).norm(), 1e-12);
  }
}

TEST(Qasm, IndependentInterpreterReproducesUnitary) {
  Rng rng(5);
  for (int n : {1, 2, 4}) {
    const Circuit c = random_circuit(n, 50, rng);
    const std::string q = emit_qasm(c);
    EXPECT_EQ(q.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n", 0), 0u);
    std::size_t cx_lines = 0;
    for (std::size_t p = q.find("cx "); p != std::string::npos; p = q.find("cx ", p + 1)) ++cx_lines;
    EXPECT_EQ(static_cast<int>(cx_lines), cnot_count(c));
    EXPECT_LT(frob(interpret_qasm(q), to_unitary(c)), 1e-10);
  }
}

TEST(Qasm, TrivialCircuits) {
  EXPECT_EQ(emit_qasm(Circuit(2)), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");
  Circuit c(2);
  c.add_cnot(0, 1);
  EXPECT_EQ(emit_qasm(c), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[0],q[1];\n");
  c.set_global_phase(0.5);
  EXPECT_NE(emit_qasm(c).find("// global_phase: 0.5\n"), std::string::npos);
}

TEST(Json, RoundTripIsExact) {
  Rng rng(6);
  const Circuit c = random_circuit(5, 70, rng);
  const Circuit back = parse_json(emit_json(c));
  ASSERT_EQ(back.n_qubits(), c.n_qubits());
  ASSERT_EQ(back.gates().size(), c.gates().size());
  EXPECT_EQ(back.global_phase(), c.global_phase());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& a = c.gates()[i];
    const Gate& b = back.gates()[i];
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.target, b.target);
    if (a.is_cnot()) {
      EXPECT_EQ(a.control, b.control);
    } else {
      EXPECT_EQ(a.matrix, b.matrix);
    }
  }
  EXPECT_EQ(emit_json(back), emit_json(c));
}

void expect_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_json(text);
    FAIL() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(Json, MalformedInputsReportLocation) {
  expect_parse_error("{\n\"n_qubits\": 2,\n", "line");
  expect_parse_error(R"({"n_qubits": 2, "gates": []})", "global_phase");
  expect_parse_error(R"({"n_qubits": 2, "global_phase": 0, "gates": [{"kind": "cnot", "control": 0}]})",
                     "gates[0]");
  expect_parse_error(R"({"n_qubits": 2, "global_phase": 0, "gates": [{"kind": "cnot", "control": 0, "target": 0}]})",
                     "gates[0]");
  expect_parse_error(R"({"n_qubits": 1, "global_phase": 0, "gates": [{"kind": "swap", "target": 0}]})", "swap");
  expect_parse_error(
      R"({"n_qubits": 1, "global_phase": 0, "gates": [{"kind": "u", "target": 0, "matrix": [[1,0],[1,0],[0,0],[1,0]]}]})",
      "not unitary");
  expect_parse_error(R"({"n_qubits": 0, "global_phase": 0, "gates": []})", "n_qubits");
  expect_parse_error(R"({"n_qubits": 1, "global_phase": 0, "gates": [], "extra": 1})", "extra");
}

}  // namespace
}  // namespace zxsynth
